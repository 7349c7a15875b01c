#include "laxalg/central.hpp"

#include <algorithm>
#include <map>

#include "laxalg/errors.hpp"
#include "laxalg/tyurin_local.hpp"

namespace lax {

namespace {

AlgebraSpec coefficient_spec(const AlgebraSpec& spec) {
  return spec.family() == Family::sl ? AlgebraSpec(Family::gl, spec.n()) : spec;
}

// Vector paired with beta_tilde in the normalization.
Vector normalization_vector(const AlgebraSpec& spec, const Vector& alpha) {
  return spec.family() == Family::sp ? spec.sigma() * alpha : alpha;
}

GaussianRational sp_form(const AlgebraSpec& spec, const Vector& alpha, const ExactMatrix& x) {
  return dot(alpha, spec.sigma() * (x * alpha));
}

std::optional<int> exact_order_at(const OneForm& form, MarkedPoint at, int extra) {
  const int v = form_valuation_bound(form, at);
  for (int reach = extra; reach <= extra + 64; reach += 16) {
    auto series = localize_form(form, at, v + reach);
    if (auto order = series.exact_order()) return order;
  }
  return std::nullopt;
}

struct Unknowns {
  std::size_t n = 0;       // vector size
  std::size_t d = 0;       // coefficient algebra dimension
  std::size_t points = 0;
  int pole = 0;

  std::size_t per_point() const { return n + 1 + d; }
  std::size_t beta(std::size_t s, std::size_t q) const { return s * per_point() + q; }
  std::size_t kappa(std::size_t s) const { return s * per_point() + n; }
  std::size_t residue(std::size_t s, std::size_t a) const { return s * per_point() + n + 1 + a; }
  // k = -1, -2, ..., -pole
  std::size_t laurent(int k, std::size_t a) const {
    return points * per_point() + static_cast<std::size_t>(-k - 1) * d + a;
  }
  std::size_t count() const { return points * per_point() + static_cast<std::size_t>(pole) * d; }
};

std::optional<ConnectionForm> solve_connection(const ConfigPtr& config, int pole) {
  const AlgebraSpec& spec = config->spec();
  const AlgebraSpec coef = coefficient_spec(spec);
  const std::size_t N = spec.size();
  const std::size_t K = config->point_count();
  const Unknowns u{N, coef.dim(), K, pole};
  const ExactMatrix id = ExactMatrix::identity(N);
  const bool sp = spec.family() == Family::sp;
  const int jet_top = sp ? 1 : 0;

  // Scalar templates and the unknown index of their coefficient a.
  struct Template {
    RationalMatrixFunction f;
    std::function<std::size_t(std::size_t)> slot;
  };
  std::vector<Template> templates;
  for (std::size_t s = 0; s < K; ++s)
    templates.push_back({RationalMatrixFunction::pole(config, id, s, 1), [u, s](std::size_t a) { return u.residue(s, a); }});
  for (int k = -1; k >= -pole; --k)
    templates.push_back({RationalMatrixFunction::monomial(config, id, k), [u, k](std::size_t a) { return u.laurent(k, a); }});

  std::vector<Vector> rows;
  Vector rhs;
  auto new_row = [&]() -> Vector& {
    rows.emplace_back(u.count());
    rhs.emplace_back();
    return rows.back();
  };

  for (std::size_t t = 0; t < K; ++t) {
    const Vector& alpha = config->point(t).alpha();
    // Residue shape, entrywise.
    std::vector<ExactMatrix> shapes;
    for (std::size_t q = 0; q < N; ++q) {
      Vector e(N);
      e[q] = 1;
      shapes.push_back(residue_shape(spec, alpha, e));
    }
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        Vector& row = new_row();
        for (std::size_t a = 0; a < u.d; ++a) row[u.residue(t, a)] = coef.basis()[a](i, j);
        for (std::size_t q = 0; q < N; ++q) row[u.beta(t, q)] = -shapes[q](i, j);
      }
    {
      const Vector nv = normalization_vector(spec, alpha);
      Vector& row = new_row();
      for (std::size_t q = 0; q < N; ++q) row[u.beta(t, q)] = nv[q];
      rhs.back() = 1;
    }

    std::vector<Vector> jets;  // jets[tau] = (coeff of w^0, w^1) of template tau at t
    for (const auto& tp : templates) {
      auto local = localize(tp.f, MarkedPoint::tyurin(t), jet_top);
      Vector jet;
      for (int q = 0; q <= jet_top; ++q) jet.push_back(local.coeff(q)(0, 0));
      jets.push_back(std::move(jet));
    }
    std::vector<Vector> x_alpha;
    for (const auto& x : coef.basis()) x_alpha.push_back(x * alpha);
    for (std::size_t i = 0; i < N; ++i) {
      Vector& row = new_row();
      for (std::size_t tau = 0; tau < templates.size(); ++tau)
        if (!jets[tau][0].is_zero())
          for (std::size_t a = 0; a < u.d; ++a) row[templates[tau].slot(a)] += jets[tau][0] * x_alpha[a][i];
      row[u.kappa(t)] = -alpha[i];
    }
    if (sp) {
      Vector& row = new_row();
      for (std::size_t tau = 0; tau < templates.size(); ++tau)
        if (!jets[tau][1].is_zero())
          for (std::size_t a = 0; a < u.d; ++a)
            row[templates[tau].slot(a)] += jets[tau][1] * sp_form(spec, alpha, coef.basis()[a]);
    }
  }

  auto solution = mat_solve_affine(ExactMatrix::from_rows(rows, u.count()), rhs);
  if (!solution) return std::nullopt;
  const Vector& x = *solution;

  ConnectionForm out;
  out.config = config;
  out.pole_order = pole;
  out.coefficient = RationalMatrixFunction(config);
  for (std::size_t tau = 0; tau < templates.size(); ++tau) {
    ExactMatrix m(N, N);
    for (std::size_t a = 0; a < u.d; ++a) {
      const auto& c = x[templates[tau].slot(a)];
      if (!c.is_zero()) m += coef.basis()[a] * c;
    }
    if (!m.is_zero()) out.coefficient += templates[tau].f.map([&m](const ExactMatrix& c) { return m * c(0, 0); });
  }
  for (std::size_t s = 0; s < K; ++s) {
    Vector beta(N);
    for (std::size_t q = 0; q < N; ++q) beta[q] = x[u.beta(s, q)];
    out.beta_tilde.push_back(std::move(beta));
    out.kappa_tilde.push_back(x[u.kappa(s)]);
  }
  record_valuations(out);
  return out;
}

}  // namespace

int family_factor(const AlgebraSpec& spec) {
  return spec.family() == Family::so || spec.family() == Family::sp ? 2 : 1;
}

void record_valuations(ConnectionForm& lambda) {
  if (lambda.coefficient.is_zero()) {
    lambda.m_plus.reset();
    lambda.m_minus.reset();
    return;
  }
  const OneForm form{lambda.coefficient};
  const int extra = static_cast<int>(lambda.config->point_count()) + lambda.pole_order + 2;
  lambda.m_plus = exact_order_at(form, MarkedPoint::plus(), extra);
  lambda.m_minus = exact_order_at(form, MarkedPoint::minus(), extra);
}

ConnectionForm construct_connection(const ConfigPtr& config, int max_pole) {
  if (max_pole < 0) throw std::invalid_argument("max_pole must be nonnegative");
  if (config->point_count() == 0) {
    ConnectionForm zero;
    zero.config = config;
    zero.coefficient = RationalMatrixFunction(config);
    return zero;
  }
  for (int p = 0; p <= max_pole; ++p)
    if (auto found = solve_connection(config, p)) return *found;
  throw NoConnectionFound("no connection form with pole order <= " + std::to_string(max_pole) + " at P+");
}

ConnectionCheck check_connection(const ConnectionForm& lambda) {
  const SphereConfig& config = *lambda.config;
  const AlgebraSpec& spec = config.spec();
  const AlgebraSpec coef = coefficient_spec(spec);
  const bool sp = spec.family() == Family::sp;
  auto fail = [](std::size_t s, const std::string& what) {
    return ConnectionCheck{false, "point " + std::to_string(s) + ": " + what};
  };
  if (lambda.beta_tilde.size() != config.point_count() || lambda.kappa_tilde.size() != config.point_count())
    return {false, "per-point data does not match the configuration"};

  const auto& M = lambda.coefficient;
  auto in_coef = [&coef](const ExactMatrix& m) { return coef.contains(m); };
  if (!std::all_of(M.poly_coeffs().begin(), M.poly_coeffs().end(), in_coef))
    return {false, "coefficient outside " + coef.name()};

  for (std::size_t s = 0; s < config.point_count(); ++s) {
    const Vector& alpha = config.point(s).alpha();
    if (M.pole_order(s) > 1) return fail(s, "pole of order " + std::to_string(M.pole_order(s)));
    if (!std::all_of(M.principal(s).begin(), M.principal(s).end(), in_coef))
      return fail(s, "residue outside " + coef.name());
    auto local = localize(M, MarkedPoint::tyurin(s), sp ? 1 : 0);
    if (local.coeff(-1) != residue_shape(spec, alpha, lambda.beta_tilde[s])) return fail(s, "residue shape");
    if (dot(lambda.beta_tilde[s], normalization_vector(spec, alpha)) != GaussianRational(1))
      return fail(s, "normalization of beta_tilde");
    if (local.coeff(0) * alpha != lambda.kappa_tilde[s] * alpha) return fail(s, "eigenvector condition");
    if (sp && !sp_form(spec, alpha, local.coeff(1)).is_zero()) return fail(s, "alpha^t sigma Lambda_1 alpha");
  }
  return {};
}

std::vector<GaussianRational> trace_form_principal(const RationalMatrixFunction& a, const OneForm& b,
                                                   MarkedPoint at) {
  const int va = local_valuation_bound(a, at);
  const int vb = form_valuation_bound(b, at);
  std::vector<GaussianRational> out;
  if (va + vb > -1) return out;
  auto la = localize(a, at, std::max(va, -1 - vb));
  auto lb = localize_form(b, at, std::max(vb, -1 - va));
  for (int k = va + vb; k <= -1; ++k) out.push_back(trace_product_coeff(la, lb, k));
  return out;
}

OneForm cocycle_partner(const ConnectionForm& lambda, const RationalMatrixFunction& L2) {
  OneForm d = global_derivative(L2);
  if (lambda.is_zero()) return d;
  return {d.coefficient - bracket(L2, lambda.coefficient)};
}

GaussianRational cocycle(const ConnectionForm& lambda, const RationalMatrixFunction& L,
                         const RationalMatrixFunction& L2) {
  const OneForm dL2 = global_derivative(L2);
  const bool with_lambda = !lambda.is_zero();
  const RationalMatrixFunction br = with_lambda ? bracket(L, L2) : RationalMatrixFunction(L.config_ptr());
  const OneForm connection{lambda.coefficient};

  auto residue_at = [&](MarkedPoint at) {
    GaussianRational r = residue_of_trace_form(L, dL2, at);
    if (with_lambda) r -= residue_of_trace_form(br, connection, at);
    return r;
  };
  for (std::size_t s = 0; s < L.config().point_count(); ++s) {
    auto r = residue_at(MarkedPoint::tyurin(s));
    if (!r.is_zero())
      throw RegularityViolation("tr(L dL' - [L, L'] Lambda) has residue " + to_string(r) + " at point " +
                                std::to_string(s));
  }
  return residue_at(MarkedPoint::plus());
}

std::vector<GaussianRational> regularity_defect(const ConnectionForm& lambda, std::size_t s,
                                                const RationalMatrixFunction& L, const RationalMatrixFunction& L2) {
  return trace_form_principal(L, cocycle_partner(lambda, L2), MarkedPoint::tyurin(s));
}

ResiduePair residue_eigenvalue_check(const SphereConfig& config, std::size_t s, const RationalMatrixFunction& L,
                                     const RationalMatrixFunction& L2) {
  const AlgebraSpec& spec = config.spec();
  ResiduePair out;
  out.lhs = residue_of_trace_form(L, global_derivative(L2), MarkedPoint::tyurin(s));
  const auto br = bracket(L, L2);
  auto report = check_local(spec, config.point(s), localize(br, MarkedPoint::tyurin(s), jet_orders(spec).back()));
  if (!report.satisfied)
    throw MalformedInput("bracket fails the local conditions at point " + std::to_string(s) + ": " +
                         report.first_violation);
  out.rhs = GaussianRational(family_factor(spec)) * *report.kappa;
  return out;
}

ResiduePair connection_residue_check(const ConnectionForm& lambda, std::size_t s, const RationalMatrixFunction& L) {
  const SphereConfig& config = *lambda.config;
  const AlgebraSpec& spec = config.spec();
  ResiduePair out;
  out.lhs = residue_of_trace_form(L, OneForm{lambda.coefficient}, MarkedPoint::tyurin(s));
  auto report = check_local(spec, config.point(s), localize(L, MarkedPoint::tyurin(s), jet_orders(spec).back()));
  if (!report.satisfied)
    throw MalformedInput("element fails the local conditions at point " + std::to_string(s) + ": " +
                         report.first_violation);
  out.rhs = GaussianRational(family_factor(spec)) * *report.kappa;
  return out;
}

GaussianRational cocycle_identity_check(const ConnectionForm& lambda, const RationalMatrixFunction& L,
                                        const RationalMatrixFunction& L2, const RationalMatrixFunction& L3) {
  return cocycle(lambda, bracket(L, L2), L3) + cocycle(lambda, bracket(L2, L3), L) +
         cocycle(lambda, bracket(L3, L), L2);
}

LocalityWindow locality_window(const ConnectionForm& lambda) {
  if (!lambda.m_plus || !lambda.m_minus) return {0, 0, 0};
  const int m_plus = *lambda.m_plus;
  const int m_minus = *lambda.m_minus;
  return {std::min(0, 1 + m_minus), std::max(0, -1 - m_plus), std::min(0, 1 - m_minus)};
}

CocycleTable cocycle_table(BasisCache& cache, const ConnectionForm& lambda, int lo, int hi) {
  CocycleTable table;
  table.lambda = lambda;
  table.window = locality_window(lambda);
  table.lo = lo;
  table.hi = hi;

  struct Slot {
    int degree;
    std::size_t index;
    const RationalMatrixFunction* element;
  };
  std::vector<Slot> slots;
  for (int m = lo; m <= hi; ++m) {
    const auto& basis = cache.at(m);
    for (std::size_t i = 0; i < basis.dim(); ++i) slots.push_back({m, i, &basis.elements[i]});
  }
  std::vector<OneForm> partners;
  partners.reserve(slots.size());
  for (const auto& slot : slots) partners.push_back(cocycle_partner(lambda, *slot.element));

  // Residue of tr(b_a F_b) at one point for all pairs, from cached expansions.
  auto residues_at = [&](MarkedPoint at) {
    std::vector<int> va, vf;
    for (const auto& slot : slots) va.push_back(local_valuation_bound(*slot.element, at));
    for (const auto& f : partners) vf.push_back(form_valuation_bound(f, at));
    const int min_va = va.empty() ? 0 : *std::min_element(va.begin(), va.end());
    const int min_vf = vf.empty() ? 0 : *std::min_element(vf.begin(), vf.end());
    std::vector<MatrixLaurentSeries> la, lf;
    for (std::size_t a = 0; a < slots.size(); ++a)
      la.push_back(localize(*slots[a].element, at, std::max(va[a], -1 - min_vf)));
    for (std::size_t b = 0; b < slots.size(); ++b)
      lf.push_back(localize_form(partners[b], at, std::max(vf[b], -1 - min_va)));
    std::vector<GaussianRational> out(slots.size() * slots.size());
    for (std::size_t a = 0; a < slots.size(); ++a)
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (va[a] + vf[b] <= -1) out[a * slots.size() + b] = trace_product_coeff(la[a], lf[b], -1);
    return out;
  };

  for (std::size_t s = 0; s < cache.config()->point_count() && table.regular; ++s) {
    auto r = residues_at(MarkedPoint::tyurin(s));
    table.regular = std::all_of(r.begin(), r.end(), [](const auto& x) { return x.is_zero(); });
  }
  const auto values = residues_at(MarkedPoint::plus());
  const std::size_t n = slots.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& v = values[a * n + b];
      const int total = slots[a].degree + slots[b].degree;
      table.values.push_back({slots[a].degree, slots[a].index, slots[b].degree, slots[b].index, v});
      if (!(v + values[b * n + a]).is_zero()) table.antisymmetric = false;
      if (!v.is_zero() && (total < table.window.lower || total > table.window.upper)) table.local = false;
    }
  return table;
}

}  // namespace lax
