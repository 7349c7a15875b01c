#include "laxalg/graded.hpp"

#include <algorithm>

#include "laxalg/errors.hpp"
#include "laxalg/tyurin_local.hpp"

namespace lax {

namespace {

bool all_in_algebra(const AlgebraSpec& spec, const RationalMatrixFunction& L) {
  auto ok = [&spec](const ExactMatrix& m) { return spec.contains(m); };
  if (!std::all_of(L.poly_coeffs().begin(), L.poly_coeffs().end(), ok)) return false;
  for (std::size_t s = 0; s < L.config().point_count(); ++s)
    if (!std::all_of(L.principal(s).begin(), L.principal(s).end(), ok)) return false;
  return true;
}

// Multiplies a scalar template (a multiple of the identity) by X.
RationalMatrixFunction scale_template(const RationalMatrixFunction& f, const ExactMatrix& x) {
  return f.map([&x](const ExactMatrix& c) { return x * c(0, 0); });
}

}  // namespace

MembershipReport membership(const SphereConfig& config, int m, const RationalMatrixFunction& L) {
  const AlgebraSpec& spec = config.spec();
  if (L.config().points() != config.points() || L.size() != spec.size()) return {false, "different configuration"};
  if (L.is_zero()) return {true, ""};
  if (!all_in_algebra(spec, L)) return {false, "coefficient outside " + spec.name()};

  auto plus = localize(L, MarkedPoint::plus(), m - 1);
  if (!plus.is_zero()) return {false, "order at P+ below " + std::to_string(m)};
  auto minus = localize(L, MarkedPoint::minus(), -m - 1);
  if (!minus.is_zero()) return {false, "pole at P- above " + std::to_string(m)};

  const int jet_top = jet_orders(spec).back();
  for (std::size_t s = 0; s < config.point_count(); ++s) {
    if (L.pole_order(s) > spec.max_pole_order()) return {false, "pole bound at point " + std::to_string(s)};
    auto report = check_local(spec, config.point(s), localize(L, MarkedPoint::tyurin(s), jet_top));
    if (!report.satisfied) return {false, "point " + std::to_string(s) + ": " + report.first_violation};
  }
  return {true, ""};
}

std::vector<RationalMatrixFunction> raw_scalar_functions(const ConfigPtr& config, int m) {
  const std::size_t N = config->spec().size();
  const ExactMatrix id = ExactMatrix::identity(N);
  std::vector<RationalMatrixFunction> out;
  auto zm = RationalMatrixFunction::monomial(config, id, m);
  out.push_back(zm);
  for (std::size_t s = 0; s < config->point_count(); ++s)
    for (int j = 1; j <= config->spec().max_pole_order(); ++j)
      out.push_back(multiply(zm, RationalMatrixFunction::pole(config, id, s, j)));
  return out;
}

ExactMatrix graded_constraint_matrix(const ConfigPtr& config, int m) {
  const AlgebraSpec& spec = config->spec();
  const std::size_t dim = spec.dim();
  const auto raw = raw_scalar_functions(config, m);
  const auto orders = jet_orders(spec);

  std::vector<Vector> rows;
  for (std::size_t s = 0; s < config->point_count(); ++s) {
    const ExactMatrix block = local_constraint_block(spec, config->point(s).alpha());
    // jets[r][q]: scalar coefficient of w^orders[q] of raw function r at the point.
    std::vector<Vector> jets;
    for (const auto& f : raw) {
      auto local = localize(f, MarkedPoint::tyurin(s), orders.back());
      Vector jet;
      for (int q : orders) jet.push_back(local.coeff(q)(0, 0));
      jets.push_back(std::move(jet));
    }
    for (std::size_t row = 0; row < block.rows(); ++row) {
      Vector out(raw.size() * dim);
      for (std::size_t r = 0; r < raw.size(); ++r)
        for (std::size_t a = 0; a < dim; ++a) {
          GaussianRational acc;
          for (std::size_t q = 0; q < orders.size(); ++q) {
            const auto& b = block(row, q * dim + a);
            if (!b.is_zero() && !jets[r][q].is_zero()) acc += b * jets[r][q];
          }
          out[r * dim + a] = acc;
        }
      rows.push_back(std::move(out));
    }
  }
  return ExactMatrix::from_rows(rows, raw.size() * dim);
}

GradedSubspaceBasis graded_basis(const ConfigPtr& config, int m) {
  const AlgebraSpec& spec = config->spec();
  const std::size_t dim = spec.dim();
  const auto raw = raw_scalar_functions(config, m);
  const ExactMatrix constraints = graded_constraint_matrix(config, m);

  std::vector<Vector> null;
  if (constraints.rows() == 0) {
    for (std::size_t k = 0; k < raw.size() * dim; ++k) {
      Vector e(raw.size() * dim);
      e[k] = 1;
      null.push_back(std::move(e));
    }
  } else {
    null = mat_nullspace(constraints);
  }
  if (null.size() != dim)
    throw DegenerateConfiguration("dim g_" + std::to_string(m) + " = " + std::to_string(null.size()) +
                                      ", expected " + std::to_string(dim),
                                  null.size());

  GradedSubspaceBasis basis{config, m, {}};
  for (const auto& v : null) {
    RationalMatrixFunction element(config);
    for (std::size_t r = 0; r < raw.size(); ++r) {
      ExactMatrix x(spec.size(), spec.size());
      bool any = false;
      for (std::size_t a = 0; a < dim; ++a) {
        const auto& c = v[r * dim + a];
        if (c.is_zero()) continue;
        x += spec.basis()[a] * c;
        any = true;
      }
      if (any) element += scale_template(raw[r], x);
    }
    basis.elements.push_back(std::move(element));
  }
  return basis;
}

const GradedSubspaceBasis& BasisCache::at(int m) {
  auto it = bases_.find(m);
  if (it == bases_.end()) it = bases_.emplace(m, graded_basis(config_, m)).first;
  return it->second;
}

FunctionFrame::FunctionFrame(const std::vector<const RationalMatrixFunction*>& functions) {
  bool first = true;
  for (const auto* f : functions) {
    if (n2_ == 0) {
      n2_ = f->size() * f->size();
      poles_.assign(f->config().point_count(), 0);
    }
    if (!f->poly_coeffs().empty()) {
      lo_ = first ? f->poly_min() : std::min(lo_, f->poly_min());
      hi_ = first ? f->poly_max() : std::max(hi_, f->poly_max());
      first = false;
    }
    for (std::size_t s = 0; s < poles_.size(); ++s) poles_[s] = std::max(poles_[s], f->pole_order(s));
  }
}

std::size_t FunctionFrame::length() const {
  std::size_t slots = static_cast<std::size_t>(std::max(0, hi_ - lo_ + 1));
  for (int p : poles_) slots += static_cast<std::size_t>(p);
  return slots * n2_;
}

Vector FunctionFrame::flatten(const RationalMatrixFunction& f) const {
  Vector out;
  out.reserve(length());
  auto append = [&out](const ExactMatrix& m) { out.insert(out.end(), m.entries().begin(), m.entries().end()); };
  const std::size_t N = f.size();
  for (int e = lo_; e <= hi_; ++e) append(f.poly_coeff(e));
  for (std::size_t s = 0; s < poles_.size(); ++s)
    for (int j = 1; j <= poles_[s]; ++j)
      append(j <= f.pole_order(s) ? f.principal(s)[static_cast<std::size_t>(j - 1)] : ExactMatrix(N, N));
  return out;
}

std::optional<Vector> coordinates_in(const GradedSubspaceBasis& basis, const RationalMatrixFunction& L) {
  std::vector<const RationalMatrixFunction*> all{&L};
  for (const auto& b : basis.elements) all.push_back(&b);
  const FunctionFrame frame(all);
  ExactMatrix system(frame.length(), basis.dim());
  for (std::size_t c = 0; c < basis.dim(); ++c) {
    const Vector column = frame.flatten(basis.elements[c]);
    for (std::size_t r = 0; r < frame.length(); ++r) system(r, c) = column[r];
  }
  return mat_solve_affine(system, frame.flatten(L));
}

std::map<int, GradedComponent> graded_decompose(BasisCache& cache, const RationalMatrixFunction& L, int lo, int hi) {
  std::map<int, GradedComponent> out;
  if (L.is_zero()) return out;
  for (int m = lo; m <= hi; ++m) {
    if (auto x = coordinates_in(cache.at(m), L)) {
      out.emplace(m, GradedComponent{std::move(*x), L});
      return out;
    }
  }

  std::vector<const RationalMatrixFunction*> all{&L};
  std::vector<std::pair<int, std::size_t>> slots;  // (degree, index)
  for (int m = lo; m <= hi; ++m) {
    const auto& basis = cache.at(m);
    for (std::size_t i = 0; i < basis.dim(); ++i) {
      all.push_back(&basis.elements[i]);
      slots.emplace_back(m, i);
    }
  }
  const FunctionFrame frame(all);
  ExactMatrix system(frame.length(), slots.size());
  for (std::size_t c = 0; c < slots.size(); ++c) {
    const Vector column = frame.flatten(*all[c + 1]);
    for (std::size_t r = 0; r < frame.length(); ++r) system(r, c) = column[r];
  }

  auto solution = mat_solve_affine(system, frame.flatten(L));
  if (!solution)
    throw WindowTooSmall("element not in the span of g_m for m in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");

  for (std::size_t c = 0; c < slots.size(); ++c) {
    const auto& [m, i] = slots[c];
    const auto& x = (*solution)[c];
    const auto& basis = cache.at(m);
    auto it = out.find(m);
    if (it == out.end())
      it = out.emplace(m, GradedComponent{Vector(basis.dim()), RationalMatrixFunction(cache.config())}).first;
    it->second.coefficients[i] = x;
    if (!x.is_zero()) it->second.element += x * basis.elements[i];
  }
  for (auto it = out.begin(); it != out.end();) {
    if (is_zero(it->second.coefficients))
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

std::size_t graded_span_rank(BasisCache& cache, int lo, int hi) {
  std::vector<const RationalMatrixFunction*> all;
  for (int m = lo; m <= hi; ++m)
    for (const auto& b : cache.at(m).elements) all.push_back(&b);
  if (all.empty()) return 0;
  const FunctionFrame frame(all);
  std::vector<Vector> rows;
  for (const auto* f : all) rows.push_back(frame.flatten(*f));
  return mat_rank(ExactMatrix::from_rows(rows, frame.length()));
}

StructureConstants structure_constants(BasisCache& cache, int k, int l) {
  StructureConstants out;
  out.k = k;
  out.l = l;
  const auto bk = cache.at(k).elements;
  const auto bl = cache.at(l).elements;
  const int target = k + l;
  auto note = [&out](std::string what) {
    if (out.first_violation.empty()) out.first_violation = std::move(what);
  };
  for (std::size_t i = 0; i < bk.size(); ++i) {
    std::vector<Vector> row;
    for (std::size_t j = 0; j < bl.size(); ++j) {
      const auto br = bracket(bk[i], bl[j]);
      const std::string label = "[b" + std::to_string(i) + ", b" + std::to_string(j) + "]: ";
      auto report = membership(*cache.config(), target, br);
      if (!report.member) {
        out.closed = false;
        note(label + report.reason);
      }
      auto x = coordinates_in(cache.at(target), br);
      if (!x) {
        out.graded = false;
        note(label + "not in the span of g_" + std::to_string(target));
        x = Vector(cache.at(target).dim());
      }
      row.push_back(std::move(*x));
    }
    out.values.push_back(std::move(row));
  }
  return out;
}

GlSplit gl_split(const RationalMatrixFunction& L) {
  const AlgebraSpec& spec = L.config().spec();
  if (spec.family() != Family::gl) throw MalformedInput("gl_split needs a gl configuration, got " + spec.name());
  for (std::size_t s = 0; s < L.config().point_count(); ++s)
    for (std::size_t j = 0; j < L.principal(s).size(); ++j)
      if (!L.principal(s)[j].trace().is_zero())
        throw MalformedInput("trace has a pole at point " + std::to_string(s));
  const std::size_t N = spec.size();
  const GaussianRational inv_n = GaussianRational(Rational(1, static_cast<long>(N)));
  const ExactMatrix id = ExactMatrix::identity(N);
  auto scalar = L.map([&](const ExactMatrix& c) { return id * (c.trace() * inv_n); });
  return {L - scalar, scalar};
}

}  // namespace lax
