#include "laxalg/tyurin_local.hpp"

#include "laxalg/errors.hpp"
#include "laxalg/random.hpp"

namespace lax {

namespace {

Vector vec(const ExactMatrix& m) { return m.entries(); }

// Row vector (1 x N) times matrix.
Vector row_times(const Vector& u, const ExactMatrix& m) { return m.transpose() * u; }

// Annihilator of span(spanning), as functionals on row-major N x N entries.
std::vector<Vector> annihilator_rows(const std::vector<ExactMatrix>& spanning, std::size_t N) {
  std::vector<Vector> rows;
  rows.reserve(spanning.size());
  for (const auto& s : spanning) rows.push_back(vec(s));
  return mat_nullspace(ExactMatrix::from_rows(rows, N * N));
}

// Functionals on vec(X) whose vanishing says X alpha is proportional to alpha:
// alpha_p (X alpha)_i - alpha_i (X alpha)_p = 0 for i != p.
std::vector<Vector> eigen_rows(const Vector& alpha, std::size_t p) {
  const std::size_t N = alpha.size();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < N; ++i) {
    if (i == p) continue;
    Vector row(N * N);
    for (std::size_t c = 0; c < N; ++c) {
      row[i * N + c] += alpha[p] * alpha[c];
      row[p * N + c] -= alpha[i] * alpha[c];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t pivot_of(const Vector& alpha) {
  std::size_t p = 0;
  while (p < alpha.size() && alpha[p].is_zero()) ++p;
  if (p == alpha.size()) throw ValidationError("alpha must be nonzero");
  return p;
}

// alpha^t sigma X alpha as a functional on vec(X).
Vector sp_l1_row(const AlgebraSpec& spec, const Vector& alpha) {
  const std::size_t N = spec.size();
  Vector left = row_times(alpha, spec.sigma());
  Vector row(N * N);
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) row[r * N + c] = left[r] * alpha[c];
  return row;
}

std::vector<ExactMatrix> residue_span(const AlgebraSpec& spec, const Vector& alpha) {
  std::vector<ExactMatrix> span;
  for (const auto& b : admissible_betas(spec, alpha)) span.push_back(residue_shape(spec, alpha, b));
  return span;
}

// Basis (as matrices) of {X in g : X alpha proportional to alpha}.
std::vector<ExactMatrix> eigen_subspace(const AlgebraSpec& spec, const Vector& alpha) {
  auto rows = eigen_rows(alpha, pivot_of(alpha));
  const std::size_t N = spec.size();
  ExactMatrix m(rows.size(), spec.dim());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t a = 0; a < spec.dim(); ++a) m(r, a) = dot(rows[r], vec(spec.basis()[a]));
  std::vector<ExactMatrix> out;
  for (const auto& coords : mat_nullspace(m)) out.push_back(spec.from_coordinates(coords));
  (void)N;
  return out;
}

LocalConstraintReport violation(LocalConstraintReport r, std::string what) {
  r.satisfied = false;
  r.first_violation = std::move(what);
  return r;
}

std::optional<Vector> solve_beta_so(const Vector& alpha, const ExactMatrix& residue) {
  const std::size_t N = alpha.size();
  ExactMatrix m(N * N, N);
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) {
      m(r * N + c, c) += alpha[r];
      m(r * N + c, r) -= alpha[c];
    }
  return mat_solve_affine(m, vec(residue));
}

std::optional<Vector> solve_beta_symmetric(const Vector& alpha, const ExactMatrix& sym) {
  const std::size_t N = alpha.size();
  ExactMatrix m(N * N, N);
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) {
      m(r * N + c, c) += alpha[r];
      m(r * N + c, r) += alpha[c];
    }
  return mat_solve_affine(m, vec(sym));
}

void require_match(const MatrixLaurentSeries& L, const AlgebraSpec& spec) {
  if (L.size() != spec.size())
    throw SizeMismatch("series size " + std::to_string(L.size()) + " does not match " + spec.name());
}

}  // namespace

ExactMatrix residue_shape(const AlgebraSpec& spec, const Vector& alpha, const Vector& beta) {
  switch (spec.family()) {
    case Family::gl:
    case Family::sl:
      return ExactMatrix::outer(alpha, beta);
    case Family::so:
      return ExactMatrix::outer(alpha, beta) - ExactMatrix::outer(beta, alpha);
    case Family::sp:
      return (ExactMatrix::outer(alpha, beta) + ExactMatrix::outer(beta, alpha)) * spec.sigma();
  }
  throw std::logic_error("unknown family");
}

ExactMatrix sp_double_pole_shape(const AlgebraSpec& spec, const Vector& alpha, const GaussianRational& nu) {
  return (ExactMatrix::outer(alpha, alpha) * spec.sigma()) * nu;
}

std::vector<Vector> admissible_betas(const AlgebraSpec& spec, const Vector& alpha) {
  Vector normal = spec.family() == Family::sp ? spec.sigma() * alpha : alpha;
  return mat_nullspace(ExactMatrix::from_rows({normal}, alpha.size()));
}

Vector canonical_beta(const AlgebraSpec& spec, const TyurinPoint& pt, Vector beta) {
  if (spec.family() != Family::so) return beta;
  const std::size_t p = pt.pivot();
  GaussianRational c = beta[p] / pt.alpha()[p];
  return beta - c * pt.alpha();
}

ExactMatrix sp_l1_corrector(const AlgebraSpec& spec, const Vector& alpha) {
  if (spec.family() != Family::sp) throw UnsupportedFamily("sp_l1_corrector is defined for sp only");
  Vector s = spec.sigma() * alpha;
  std::size_t j = pivot_of(s);
  const std::size_t N = spec.size();
  return ExactMatrix::unit(N, j, j) * spec.sigma();
}

LocalConstraintReport check_local(const AlgebraSpec& spec, const TyurinPoint& pt, const MatrixLaurentSeries& L) {
  require_match(L, spec);
  const bool sp = spec.family() == Family::sp;
  const int needed = sp ? 1 : 0;
  if (L.trunc() < needed)
    throw InsufficientPrecision("check_local needs the expansion to w^" + std::to_string(needed) + ", have w^" +
                                std::to_string(L.trunc()));
  if (spec.family() == Family::so || sp) {
    for (int k = L.valuation(); k <= L.trunc(); ++k)
      if (!spec.contains(L.coeff(k)))
        throw MalformedInput("coefficient of w^" + std::to_string(k) + " is not in " + spec.name());
  }

  const Vector& alpha = pt.alpha();
  const std::size_t p = pt.pivot();
  LocalConstraintReport report;

  // (a) pole order
  for (int k = L.valuation(); k < -spec.max_pole_order(); ++k)
    if (!L.coeff(k).is_zero())
      return violation(report, "pole order exceeds " + std::to_string(spec.max_pole_order()) + " (w^" +
                                   std::to_string(k) + " coefficient nonzero)");

  // (b) residue shape
  const ExactMatrix residue = L.coeff(-1);
  switch (spec.family()) {
    case Family::gl:
    case Family::sl: {
      Vector beta = (pt.alpha()[p].inverse()) * residue.row(p);
      report.beta = beta;
      if (ExactMatrix::outer(alpha, beta) != residue)
        return violation(report, "residue not rank-one of form alpha beta^t");
      if (!dot(beta, alpha).is_zero()) return violation(report, "beta^t alpha != 0");
      break;
    }
    case Family::so: {
      auto beta = solve_beta_so(alpha, residue);
      if (!beta) return violation(report, "residue not of form alpha beta^t - beta alpha^t");
      report.beta = canonical_beta(spec, pt, *beta);
      if (!dot(*report.beta, alpha).is_zero()) return violation(report, "beta^t alpha != 0");
      break;
    }
    case Family::sp: {
      const ExactMatrix lm2 = L.coeff(-2);
      const ExactMatrix unit_shape = sp_double_pole_shape(spec, alpha, 1);
      // alpha alpha^t sigma has a nonzero entry in row p.
      std::size_t c = 0;
      while (unit_shape(p, c).is_zero()) ++c;
      GaussianRational nu = lm2(p, c) / unit_shape(p, c);
      report.nu = nu;
      if (unit_shape * nu != lm2) return violation(report, "L_{-2} not of form nu alpha alpha^t sigma");
      auto beta = solve_beta_symmetric(alpha, residue * spec.sigma_inverse());
      if (!beta) return violation(report, "residue not of form (alpha beta^t + beta alpha^t) sigma");
      report.beta = *beta;
      if (!dot(*beta, spec.sigma() * alpha).is_zero()) return violation(report, "beta^t sigma alpha != 0");
      break;
    }
  }

  // (c) eigenvector condition
  const Vector l0_alpha = L.coeff(0) * alpha;
  GaussianRational kappa = l0_alpha[p] / alpha[p];
  report.kappa = kappa;
  if (l0_alpha != kappa * alpha) return violation(report, "alpha is not an eigenvector of L_0");

  // (d) sp: alpha^t sigma L_1 alpha = 0
  if (sp && !dot(row_times(alpha, spec.sigma()), L.coeff(1) * alpha).is_zero())
    return violation(report, "alpha^t sigma L_1 alpha != 0");

  // (e) sl: traceless coefficients
  if (spec.family() == Family::sl) {
    for (int k = L.valuation(); k <= L.trunc(); ++k)
      if (!L.coeff(k).trace().is_zero())
        return violation(report, "trace of the w^" + std::to_string(k) + " coefficient is nonzero");
  }

  report.satisfied = true;
  return report;
}

MatrixLaurentSeries random_local(const AlgebraSpec& spec, const TyurinPoint& pt, int trunc, std::uint64_t seed) {
  const bool sp = spec.family() == Family::sp;
  if (trunc < (sp ? 3 : 1)) throw MalformedInput("random_local: trunc too low for closure checks");
  Rng rng(seed);
  const Vector& alpha = pt.alpha();
  const int v = -spec.max_pole_order();
  MatrixLaurentSeries L(spec.size(), v, trunc);

  Vector beta(spec.size());
  for (const auto& b : admissible_betas(spec, alpha)) beta = beta + rng.gaussian() * b;
  beta = canonical_beta(spec, pt, beta);
  L.set_coeff(-1, residue_shape(spec, alpha, beta));
  if (sp) L.set_coeff(-2, sp_double_pole_shape(spec, alpha, rng.gaussian()));

  ExactMatrix l0(spec.size(), spec.size());
  for (const auto& x : eigen_subspace(spec, alpha)) l0 += x * rng.gaussian();
  L.set_coeff(0, l0);

  for (int k = 1; k <= trunc; ++k) L.set_coeff(k, rng.element(spec));

  if (sp) {
    const ExactMatrix c = sp_l1_corrector(spec, alpha);
    const Vector left = row_times(alpha, spec.sigma());
    ExactMatrix l1 = L.coeff(1);
    GaussianRational defect = dot(left, l1 * alpha);
    GaussianRational scale = dot(left, c * alpha);
    L.set_coeff(1, l1 - c * (defect / scale));
  }
  return L;
}

ClosureWitness bracket_closure_witness(const AlgebraSpec& spec, const TyurinPoint& pt, const MatrixLaurentSeries& L,
                                       const MatrixLaurentSeries& L2) {
  const LocalConstraintReport r1 = check_local(spec, pt, L);
  const LocalConstraintReport r2 = check_local(spec, pt, L2);
  if (!r1.satisfied || !r2.satisfied)
    throw MalformedInput("bracket_closure_witness: inputs must satisfy the local constraints");

  ClosureWitness w;
  w.result = series_bracket(L, L2);
  w.observed = check_local(spec, pt, w.result);

  const Vector& alpha = pt.alpha();
  const Vector& b1 = *r1.beta;
  const Vector& b2 = *r2.beta;
  const GaussianRational& k1 = *r1.kappa;
  const GaussianRational& k2 = *r2.kappa;

  LocalConstraintReport& pr = w.predicted;
  pr.satisfied = true;
  if (spec.family() != Family::sp) {
    // beta''^t = beta^t L'_0 - beta'^t L_0 + kappa beta'^t - kappa' beta^t
    Vector beta = row_times(b1, L2.coeff(0)) - row_times(b2, L.coeff(0)) + k1 * b2 - k2 * b1;
    pr.beta = canonical_beta(spec, pt, beta);
    pr.kappa = dot(b1, L2.coeff(1) * alpha) - dot(b2, L.coeff(1) * alpha);
  } else {
    const ExactMatrix& s = spec.sigma();
    const GaussianRational& n1 = *r1.nu;
    const GaussianRational& n2 = *r2.nu;
    const Vector left = row_times(alpha, s);
    // beta'' = -nu L'_1 alpha + nu' L_1 alpha - L'_0 beta + L_0 beta' + kappa beta' - kappa' beta
    pr.beta = (-n1) * (L2.coeff(1) * alpha) + n2 * (L.coeff(1) * alpha) - L2.coeff(0) * b1 + L.coeff(0) * b2 +
              k1 * b2 - k2 * b1;
    // The commutator doubles the product's order -2 factor (nu' kappa - nu kappa' + beta^t sigma beta').
    pr.nu = GaussianRational(2) * (n2 * k1 - n1 * k2 + dot(b1, s * b2));
    pr.kappa = n1 * dot(left, L2.coeff(2) * alpha) - n2 * dot(left, L.coeff(2) * alpha) +
               dot(b1, s * (L2.coeff(1) * alpha)) - dot(b2, s * (L.coeff(1) * alpha));
  }
  return w;
}

ClosureWitness product_closure_witness(const AlgebraSpec& spec, const TyurinPoint& pt, const MatrixLaurentSeries& L,
                                       const MatrixLaurentSeries& L2) {
  if (spec.family() != Family::gl)
    throw UnsupportedFamily("products of Lax operators close only for gl, not " + spec.name());
  const LocalConstraintReport r1 = check_local(spec, pt, L);
  const LocalConstraintReport r2 = check_local(spec, pt, L2);
  if (!r1.satisfied || !r2.satisfied)
    throw MalformedInput("product_closure_witness: inputs must satisfy the local constraints");

  ClosureWitness w;
  w.result = series_mul(L, L2);
  w.observed = check_local(spec, pt, w.result);
  w.predicted.satisfied = true;
  w.predicted.beta = row_times(*r1.beta, L2.coeff(0)) + *r1.kappa * *r2.beta;
  w.predicted.kappa = dot(*r1.beta, L2.coeff(1) * pt.alpha()) + *r1.kappa * *r2.kappa;
  return w;
}

std::size_t condition_count(const AlgebraSpec& spec) {
  return spec.family() == Family::sp ? 2 * spec.dim() : spec.dim();
}

std::vector<int> jet_orders(const AlgebraSpec& spec) {
  if (spec.family() == Family::sp) return {-2, -1, 0, 1};
  return {-1, 0};
}

ExactMatrix local_constraint_rows(const AlgebraSpec& spec, const Vector& alpha) {
  const std::size_t N = spec.size();
  const std::size_t block = N * N;
  const auto orders = jet_orders(spec);
  std::vector<Vector> rows;

  auto place = [&](const Vector& local, std::size_t q) {
    Vector row(block * orders.size());
    std::copy(local.begin(), local.end(), row.begin() + static_cast<long>(q * block));
    rows.push_back(std::move(row));
  };

  for (std::size_t q = 0; q < orders.size(); ++q) {
    switch (orders[q]) {
      case -2:
        for (const auto& a : annihilator_rows({sp_double_pole_shape(spec, alpha, 1)}, N)) place(a, q);
        break;
      case -1:
        for (const auto& a : annihilator_rows(residue_span(spec, alpha), N)) place(a, q);
        break;
      case 0:
        for (const auto& e : eigen_rows(alpha, pivot_of(alpha))) place(e, q);
        break;
      case 1:
        place(sp_l1_row(spec, alpha), q);
        break;
    }
  }
  return ExactMatrix::from_rows(rows, block * orders.size());
}

ExactMatrix local_constraint_block(const AlgebraSpec& spec, const Vector& alpha) {
  const ExactMatrix rows = local_constraint_rows(spec, alpha);
  const std::size_t N = spec.size();
  const std::size_t block = N * N;
  const std::size_t q_count = jet_orders(spec).size();
  ExactMatrix out(rows.rows(), q_count * spec.dim());
  for (std::size_t r = 0; r < rows.rows(); ++r)
    for (std::size_t q = 0; q < q_count; ++q)
      for (std::size_t a = 0; a < spec.dim(); ++a) {
        const auto& e = spec.basis()[a].entries();
        GaussianRational s;
        for (std::size_t k = 0; k < block; ++k)
          if (!e[k].is_zero() && !rows(r, q * block + k).is_zero()) s += rows(r, q * block + k) * e[k];
        out(r, q * spec.dim() + a) = s;
      }
  return out;
}

}  // namespace lax
