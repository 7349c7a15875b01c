#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laxalg/algebra.hpp"
#include "laxalg/laurent.hpp"

namespace lax {

/// Outcome of checking the weak-singularity conditions of one expansion.
struct LocalConstraintReport {
  bool satisfied = false;
  std::optional<Vector> beta;
  std::optional<GaussianRational> kappa;
  std::optional<GaussianRational> nu;  // sp only
  std::string first_violation;

  friend bool operator==(const LocalConstraintReport&, const LocalConstraintReport&) = default;
};

/// Residue shape for the family: alpha beta^t (gl, sl),
/// alpha beta^t - beta alpha^t (so), (alpha beta^t + beta alpha^t) sigma (sp).
ExactMatrix residue_shape(const AlgebraSpec& spec, const Vector& alpha, const Vector& beta);

/// nu alpha alpha^t sigma, the sp order -2 coefficient.
ExactMatrix sp_double_pole_shape(const AlgebraSpec& spec, const Vector& alpha, const GaussianRational& nu);

/// Basis of the admissible beta: beta^t alpha = 0, or beta^t sigma alpha = 0 for sp.
std::vector<Vector> admissible_betas(const AlgebraSpec& spec, const Vector& alpha);

/// For so, beta is only defined modulo alpha; this picks the representative
/// with beta_p = 0 at the pivot p of alpha. Identity for the other families.
Vector canonical_beta(const AlgebraSpec& spec, const TyurinPoint& pt, Vector beta);

/// e_j e_j^t sigma with (sigma alpha)_j != 0: lies in sp and has
/// alpha^t sigma C alpha != 0, so it can absorb the alpha^t sigma L_1 alpha term.
ExactMatrix sp_l1_corrector(const AlgebraSpec& spec, const Vector& alpha);

/// Checks, in order: pole order bound, residue shape (extracting beta and, for
/// sp, nu), the eigenvector condition L_0 alpha = kappa alpha, the sp relation
/// alpha^t sigma L_1 alpha = 0, and for sl the trace of every coefficient.
///
/// Throws InsufficientPrecision when L is not known far enough (trunc >= 0,
/// sp trunc >= 1) and MalformedInput when a coefficient of an so/sp series
/// leaves the algebra.
LocalConstraintReport check_local(const AlgebraSpec& spec, const TyurinPoint& pt, const MatrixLaurentSeries& L);

/// Deterministic series satisfying check_local, known to w^trunc.
MatrixLaurentSeries random_local(const AlgebraSpec& spec, const TyurinPoint& pt, int trunc, std::uint64_t seed);

/// Series arithmetic result next to the report predicted by closed formulas.
struct ClosureWitness {
  MatrixLaurentSeries result;
  LocalConstraintReport observed;
  LocalConstraintReport predicted;

  bool agree() const { return observed.satisfied && observed == predicted; }
};

/// [L, L2] checked locally and compared with the closed-form beta'', kappa''
/// (and nu'' for sp).
ClosureWitness bracket_closure_witness(const AlgebraSpec& spec, const TyurinPoint& pt, const MatrixLaurentSeries& L,
                                       const MatrixLaurentSeries& L2);

/// L * L2 for gl only: beta^t = beta'^t L2_0 + kappa' beta''^t and
/// kappa = beta'^t L2_1 alpha + kappa' kappa''. Throws UnsupportedFamily otherwise.
ClosureWitness product_closure_witness(const AlgebraSpec& spec, const TyurinPoint& pt, const MatrixLaurentSeries& L,
                                       const MatrixLaurentSeries& L2);

/// Independent relations per weak singularity: dim g, or 2 dim g for sp.
std::size_t condition_count(const AlgebraSpec& spec);

/// Laurent orders entering the constraints: {-1, 0}, or {-2, -1, 0, 1} for sp.
std::vector<int> jet_orders(const AlgebraSpec& spec);

/// Linear constraints on the jet (L_j for j in jet_orders), one row per
/// relation, columns grouped per order as row-major N x N entries.
ExactMatrix local_constraint_rows(const AlgebraSpec& spec, const Vector& alpha);

/// local_constraint_rows expressed in algebra coordinates of each jet
/// coefficient. Its rank is the number of independent relations at a point.
ExactMatrix local_constraint_block(const AlgebraSpec& spec, const Vector& alpha);

}  // namespace lax
