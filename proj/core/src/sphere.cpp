#include "laxalg/sphere.hpp"

#include <algorithm>

#include "laxalg/errors.hpp"

namespace lax {

SphereConfig::SphereConfig(AlgebraSpec spec, std::vector<TyurinPoint> points)
    : spec_(std::move(spec)), points_(std::move(points)) {
  for (std::size_t s = 0; s < points_.size(); ++s)
    for (std::size_t t = s + 1; t < points_.size(); ++t)
      if (points_[s].z() == points_[t].z())
        throw ValidationError("duplicate Tyurin position z = " + to_string(points_[s].z()));
}

ConfigPtr make_config(AlgebraSpec spec, std::vector<TyurinPoint> points) {
  return std::make_shared<const SphereConfig>(std::move(spec), std::move(points));
}

ConfigPtr rebind_config(const SphereConfig& config, AlgebraSpec spec) {
  std::vector<TyurinPoint> points;
  for (const auto& p : config.points()) points.emplace_back(spec, p.z(), p.alpha());
  return make_config(std::move(spec), std::move(points));
}

RationalMatrixFunction::RationalMatrixFunction(ConfigPtr config)
    : config_(std::move(config)), principal_(config_->point_count()) {}

RationalMatrixFunction::RationalMatrixFunction(ConfigPtr config, int poly_min, std::vector<ExactMatrix> poly_coeffs,
                                               std::vector<std::vector<ExactMatrix>> principal)
    : config_(std::move(config)), poly_min_(poly_min), poly_(std::move(poly_coeffs)),
      principal_(std::move(principal)) {
  if (principal_.size() != config_->point_count())
    throw SizeMismatch("principal parts given for " + std::to_string(principal_.size()) + " points, config has " +
                       std::to_string(config_->point_count()));
  const std::size_t N = size();
  auto check = [N](const ExactMatrix& m) {
    if (m.rows() != N || m.cols() != N) throw SizeMismatch("coefficient has wrong size");
  };
  std::for_each(poly_.begin(), poly_.end(), check);
  for (const auto& pp : principal_) std::for_each(pp.begin(), pp.end(), check);
  normalize();
}

RationalMatrixFunction RationalMatrixFunction::monomial(ConfigPtr config, const ExactMatrix& m, int exponent) {
  const std::size_t K = config->point_count();
  return RationalMatrixFunction(std::move(config), exponent, {m}, std::vector<std::vector<ExactMatrix>>(K));
}

RationalMatrixFunction RationalMatrixFunction::pole(ConfigPtr config, const ExactMatrix& m, std::size_t s,
                                                    int order) {
  if (order < 1) throw std::invalid_argument("pole order must be positive");
  std::vector<std::vector<ExactMatrix>> pp(config->point_count());
  pp.at(s).assign(static_cast<std::size_t>(order), ExactMatrix(m.rows(), m.cols()));
  pp[s].back() = m;
  return RationalMatrixFunction(std::move(config), 0, {}, std::move(pp));
}

void RationalMatrixFunction::normalize() {
  while (!poly_.empty() && poly_.back().is_zero()) poly_.pop_back();
  std::size_t lead = 0;
  while (lead < poly_.size() && poly_[lead].is_zero()) ++lead;
  poly_.erase(poly_.begin(), poly_.begin() + static_cast<long>(lead));
  poly_min_ = poly_.empty() ? 0 : poly_min_ + static_cast<int>(lead);
  for (auto& pp : principal_)
    while (!pp.empty() && pp.back().is_zero()) pp.pop_back();
}

void RationalMatrixFunction::require_compatible(const RationalMatrixFunction& o) const {
  if (config_ == o.config_) return;
  if (size() != o.size() || config_->points() != o.config_->points())
    throw SizeMismatch("functions live on different configurations");
}

ExactMatrix RationalMatrixFunction::poly_coeff(int exponent) const {
  if (exponent < poly_min_ || exponent > poly_max()) return ExactMatrix(size(), size());
  return poly_[static_cast<std::size_t>(exponent - poly_min_)];
}

bool RationalMatrixFunction::is_zero() const {
  return poly_.empty() && std::all_of(principal_.begin(), principal_.end(), [](const auto& p) { return p.empty(); });
}

RationalMatrixFunction RationalMatrixFunction::map(const std::function<ExactMatrix(const ExactMatrix&)>& f) const {
  RationalMatrixFunction out(*this);
  for (auto& c : out.poly_) c = f(c);
  for (auto& pp : out.principal_)
    for (auto& c : pp) c = f(c);
  out.normalize();
  return out;
}

RationalMatrixFunction RationalMatrixFunction::rebind(ConfigPtr config) const {
  if (config->points().size() != config_->points().size()) throw SizeMismatch("rebind: point count differs");
  for (std::size_t s = 0; s < config->point_count(); ++s)
    if (config->point(s).z() != config_->point(s).z()) throw SizeMismatch("rebind: point positions differ");
  return RationalMatrixFunction(std::move(config), poly_min_, poly_, principal_);
}

RationalMatrixFunction& RationalMatrixFunction::operator+=(const RationalMatrixFunction& o) {
  require_compatible(o);
  if (o.is_zero()) return *this;
  const std::size_t N = size();
  if (poly_.empty()) {
    poly_min_ = o.poly_min_;
  }
  if (!o.poly_.empty()) {
    int lo = poly_.empty() ? o.poly_min_ : std::min(poly_min_, o.poly_min_);
    int hi = poly_.empty() ? o.poly_max() : std::max(poly_max(), o.poly_max());
    std::vector<ExactMatrix> merged(static_cast<std::size_t>(hi - lo + 1), ExactMatrix(N, N));
    for (std::size_t k = 0; k < poly_.size(); ++k) merged[static_cast<std::size_t>(poly_min_ - lo) + k] = poly_[k];
    for (std::size_t k = 0; k < o.poly_.size(); ++k)
      merged[static_cast<std::size_t>(o.poly_min_ - lo) + k] += o.poly_[k];
    poly_ = std::move(merged);
    poly_min_ = lo;
  }
  for (std::size_t s = 0; s < principal_.size(); ++s) {
    auto& mine = principal_[s];
    const auto& theirs = o.principal_[s];
    if (mine.size() < theirs.size()) mine.resize(theirs.size(), ExactMatrix(N, N));
    for (std::size_t j = 0; j < theirs.size(); ++j) mine[j] += theirs[j];
  }
  normalize();
  return *this;
}

RationalMatrixFunction& RationalMatrixFunction::operator-=(const RationalMatrixFunction& o) { return *this += -o; }

RationalMatrixFunction operator*(const GaussianRational& c, const RationalMatrixFunction& f) {
  return f.map([&c](const ExactMatrix& m) { return m * c; });
}

RationalMatrixFunction RationalMatrixFunction::operator-() const {
  return map([](const ExactMatrix& m) { return -m; });
}

bool operator==(const RationalMatrixFunction& a, const RationalMatrixFunction& b) {
  if (a.config_ != b.config_ && a.config_->points() != b.config_->points()) return false;
  return a.poly_min_ == b.poly_min_ && a.poly_ == b.poly_ && a.principal_ == b.principal_;
}

namespace {

// Coefficients binom(e, k) d^{e-k} of (d + w)^e for k = 0..kmax.
std::vector<GaussianRational> shifted_power(const GaussianRational& d, long e, int kmax) {
  std::vector<GaussianRational> out;
  if (kmax < 0) return out;
  out.reserve(static_cast<std::size_t>(kmax) + 1);
  if (d.is_zero()) {
    for (int k = 0; k <= kmax; ++k) out.emplace_back(k == e ? 1 : 0);
    return out;
  }
  const GaussianRational d_inv = d.inverse();
  GaussianRational power = pow(d, e);  // d^{e-k}
  Rational binom = 1;
  for (int k = 0; k <= kmax; ++k) {
    out.push_back(power * GaussianRational(binom));
    binom = binom * Rational(e - k) / Rational(k + 1);
    power *= d_inv;
  }
  return out;
}

void accumulate(std::vector<ExactMatrix>& coeffs, int valuation, int exponent, const ExactMatrix& m,
                const GaussianRational& c) {
  if (c.is_zero()) return;
  const int idx = exponent - valuation;
  if (idx < 0 || idx >= static_cast<int>(coeffs.size())) return;
  coeffs[static_cast<std::size_t>(idx)] += m * c;
}

}  // namespace

int local_valuation_bound(const RationalMatrixFunction& f, MarkedPoint at) {
  const SphereConfig& cfg = f.config();
  if (at.kind == MarkedPoint::Kind::tyurin) return std::min(0, -f.pole_order(at.index));
  bool any_principal = false;
  for (std::size_t s = 0; s < cfg.point_count(); ++s) any_principal |= f.pole_order(s) > 0;
  const bool has_poly = !f.poly_coeffs().empty();
  // Principal parts are regular at P+ and vanish at P-.
  const int principal_v = at.kind == MarkedPoint::Kind::plus ? 0 : 1;
  const int poly_v = at.kind == MarkedPoint::Kind::plus ? f.poly_min() : -f.poly_max();
  if (has_poly && any_principal) return std::min(poly_v, principal_v);
  if (has_poly) return poly_v;
  return any_principal ? principal_v : 0;
}

int form_valuation_bound(const OneForm& form, MarkedPoint at) {
  int v = local_valuation_bound(form.coefficient, at);
  return at.kind == MarkedPoint::Kind::minus ? v - 2 : v;
}

MatrixLaurentSeries localize(const RationalMatrixFunction& f, MarkedPoint at, int trunc) {
  const SphereConfig& cfg = f.config();
  const std::size_t N = f.size();
  int v = local_valuation_bound(f, at);
  if (trunc < v) v = trunc;
  std::vector<ExactMatrix> coeffs(static_cast<std::size_t>(trunc - v + 1), ExactMatrix(N, N));
  const int kmax = trunc;

  switch (at.kind) {
    case MarkedPoint::Kind::tyurin: {
      const std::size_t s = at.index;
      const GaussianRational& c = cfg.point(s).z();
      for (std::size_t k = 0; k < f.poly_coeffs().size(); ++k) {
        const ExactMatrix& m = f.poly_coeffs()[k];
        if (m.is_zero()) continue;
        auto series = shifted_power(c, f.poly_min() + static_cast<long>(k), kmax);
        for (int e = 0; e <= kmax; ++e) accumulate(coeffs, v, e, m, series[static_cast<std::size_t>(e)]);
      }
      for (std::size_t t = 0; t < cfg.point_count(); ++t) {
        const auto& pp = f.principal(t);
        for (std::size_t j = 1; j <= pp.size(); ++j) {
          const ExactMatrix& m = pp[j - 1];
          if (m.is_zero()) continue;
          if (t == s) {
            accumulate(coeffs, v, -static_cast<int>(j), m, 1);
            continue;
          }
          auto series = shifted_power(c - cfg.point(t).z(), -static_cast<long>(j), kmax);
          for (int e = 0; e <= kmax; ++e) accumulate(coeffs, v, e, m, series[static_cast<std::size_t>(e)]);
        }
      }
      break;
    }
    case MarkedPoint::Kind::plus: {
      for (std::size_t k = 0; k < f.poly_coeffs().size(); ++k)
        accumulate(coeffs, v, f.poly_min() + static_cast<int>(k), f.poly_coeffs()[k], 1);
      for (std::size_t t = 0; t < cfg.point_count(); ++t) {
        const auto& pp = f.principal(t);
        for (std::size_t j = 1; j <= pp.size(); ++j) {
          if (pp[j - 1].is_zero()) continue;
          auto series = shifted_power(-cfg.point(t).z(), -static_cast<long>(j), kmax);
          for (int e = 0; e <= kmax; ++e) accumulate(coeffs, v, e, pp[j - 1], series[static_cast<std::size_t>(e)]);
        }
      }
      break;
    }
    case MarkedPoint::Kind::minus: {
      for (std::size_t k = 0; k < f.poly_coeffs().size(); ++k)
        accumulate(coeffs, v, -(f.poly_min() + static_cast<int>(k)), f.poly_coeffs()[k], 1);
      // (1/w - z_t)^{-j} = w^j (1 - z_t w)^{-j}
      for (std::size_t t = 0; t < cfg.point_count(); ++t) {
        const auto& pp = f.principal(t);
        for (std::size_t j = 1; j <= pp.size(); ++j) {
          if (pp[j - 1].is_zero()) continue;
          const int ji = static_cast<int>(j);
          if (kmax - ji < 0) continue;
          auto series = shifted_power(1, -static_cast<long>(j), kmax - ji);
          GaussianRational zt_power(1);
          for (int e = 0; e <= kmax - ji; ++e) {
            accumulate(coeffs, v, e + ji, pp[j - 1], series[static_cast<std::size_t>(e)] * zt_power);
            zt_power *= -cfg.point(t).z();
          }
        }
      }
      break;
    }
  }
  return MatrixLaurentSeries(v, trunc, std::move(coeffs));
}

MatrixLaurentSeries localize_form(const OneForm& form, MarkedPoint at, int trunc) {
  if (at.kind != MarkedPoint::Kind::minus) return localize(form.coefficient, at, trunc);
  // f(z) dz = -w^{-2} f(1/w) dw
  return -localize(form.coefficient, at, trunc + 2).shifted(-2);
}

OneForm global_derivative(const RationalMatrixFunction& f) {
  const std::size_t N = f.size();
  std::vector<ExactMatrix> poly;
  int poly_min = f.poly_min() - 1;
  for (std::size_t k = 0; k < f.poly_coeffs().size(); ++k) {
    const int e = f.poly_min() + static_cast<int>(k);
    poly.push_back(f.poly_coeffs()[k] * GaussianRational(e));
  }
  std::vector<std::vector<ExactMatrix>> principal(f.config().point_count());
  for (std::size_t s = 0; s < principal.size(); ++s) {
    const auto& pp = f.principal(s);
    if (pp.empty()) continue;
    principal[s].assign(pp.size() + 1, ExactMatrix(N, N));
    for (std::size_t j = 1; j <= pp.size(); ++j)
      principal[s][j] = pp[j - 1] * GaussianRational(-static_cast<long>(j));
  }
  return {RationalMatrixFunction(f.config_ptr(), poly_min, std::move(poly), std::move(principal))};
}

GaussianRational residue_of_trace_form(const RationalMatrixFunction& a, const OneForm& b, MarkedPoint at) {
  const int va = local_valuation_bound(a, at);
  const int vb = form_valuation_bound(b, at);
  MatrixLaurentSeries la = localize(a, at, std::max(va, -1 - vb));
  MatrixLaurentSeries lb = localize_form(b, at, std::max(vb, -1 - va));
  return trace_product_coeff(la, lb, -1);
}

RationalMatrixFunction assemble_from_local(ConfigPtr config, const MatrixLaurentSeries& at_plus,
                                           const MatrixLaurentSeries& at_minus,
                                           const std::vector<MatrixLaurentSeries>& at_points) {
  if (at_points.size() != config->point_count()) throw SizeMismatch("assemble_from_local: wrong number of points");
  const std::size_t N = config->spec().size();
  const int lo = std::min(at_plus.valuation(), 0);
  const int hi = std::max(-at_minus.valuation(), -1);
  std::vector<ExactMatrix> poly(static_cast<std::size_t>(hi - lo + 1), ExactMatrix(N, N));
  for (int k = at_plus.valuation(); k < 0; ++k) poly[static_cast<std::size_t>(k - lo)] = at_plus.coeff(k);
  for (int k = at_minus.valuation(); k <= 0; ++k) poly[static_cast<std::size_t>(-k - lo)] = at_minus.coeff(k);

  std::vector<std::vector<ExactMatrix>> principal(config->point_count());
  for (std::size_t s = 0; s < at_points.size(); ++s) {
    const auto& local = at_points[s];
    for (int j = 1; j <= -local.valuation(); ++j) principal[s].push_back(local.coeff(-j));
  }
  return RationalMatrixFunction(std::move(config), lo, std::move(poly), std::move(principal));
}

namespace {

using SeriesOp = MatrixLaurentSeries (*)(const MatrixLaurentSeries&, const MatrixLaurentSeries&);

RationalMatrixFunction combine(const RationalMatrixFunction& a, const RationalMatrixFunction& b, SeriesOp op) {
  if (a.size() != b.size() || a.config().points() != b.config().points())
    throw SizeMismatch("functions live on different configurations");

  // Expansion orders that make the product known exactly through `target`.
  auto local_product = [&](MarkedPoint at, int target) {
    const int va = local_valuation_bound(a, at);
    const int vb = local_valuation_bound(b, at);
    MatrixLaurentSeries la = localize(a, at, std::max(va, target - vb));
    MatrixLaurentSeries lb = localize(b, at, std::max(vb, target - va));
    return op(la, lb);
  };

  MatrixLaurentSeries plus = local_product(MarkedPoint::plus(), -1);
  MatrixLaurentSeries minus = local_product(MarkedPoint::minus(), 0);
  std::vector<MatrixLaurentSeries> points;
  for (std::size_t s = 0; s < a.config().point_count(); ++s) points.push_back(local_product(MarkedPoint::tyurin(s), -1));
  return assemble_from_local(a.config_ptr(), plus, minus, points);
}

}  // namespace

RationalMatrixFunction multiply(const RationalMatrixFunction& a, const RationalMatrixFunction& b) {
  return combine(a, b, &series_mul);
}

RationalMatrixFunction bracket(const RationalMatrixFunction& a, const RationalMatrixFunction& b) {
  return combine(a, b, &series_bracket);
}

}  // namespace lax
