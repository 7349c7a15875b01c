#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laxalg/graded.hpp"

namespace lax {

/// Lambda = M dz, a matrix valued 1-form whose residues at the Tyurin points
/// cancel the residues of tr L dL'.
///
/// M = sum_s R_s / (z - z_s) + sum_{k=-p}^{-1} C_k z^k with, at every point,
///   R_s = residue shape of beta_tilde_s,  beta_tilde_s^t alpha_s = 1
///   (beta_tilde_s^t sigma alpha_s = 1 for sp),
///   Lambda_0 alpha_s = kappa_tilde_s alpha_s,
///   alpha_s^t sigma Lambda_1 alpha_s = 0 (sp only).
/// Coefficients lie in the family algebra, except for sl where they are taken
/// in gl: a trace-free residue cannot satisfy beta_tilde^t alpha = 1.
struct ConnectionForm {
  ConfigPtr config;
  RationalMatrixFunction coefficient;
  /// The p of the search that produced this form.
  int pole_order = 0;
  std::vector<Vector> beta_tilde;
  std::vector<GaussianRational> kappa_tilde;
  /// Exact orders of Lambda at P+ (w = z) and P- (w = 1/z, with the
  /// Jacobian); nullopt when Lambda = 0.
  std::optional<int> m_plus;
  std::optional<int> m_minus;

  bool is_zero() const { return coefficient.is_zero(); }
};

/// 1 for gl and sl, 2 for so and sp.
int family_factor(const AlgebraSpec& spec);

/// Searches p = 0..max_pole. K = 0 gives the zero form. Throws
/// NoConnectionFound when no p in range admits a solution.
ConnectionForm construct_connection(const ConfigPtr& config, int max_pole);

/// Recomputes m_plus and m_minus for an arbitrary coefficient.
void record_valuations(ConnectionForm& lambda);

struct ConnectionCheck {
  bool valid = true;
  std::string first_violation;
};

/// Substitutes back: residue shape, normalization, eigenvector and sp
/// conditions at every point, using the recorded beta_tilde and kappa_tilde.
ConnectionCheck check_connection(const ConnectionForm& lambda);

/// Coefficients of w^v..w^{-1} of tr(A B) dw at `at`, B a 1-form.
std::vector<GaussianRational> trace_form_principal(const RationalMatrixFunction& a, const OneForm& b, MarkedPoint at);

/// dL' - [L', M] as a 1-form: tr(L [L', M]) = tr([L, L'] M) lets the cocycle be
/// read as res tr(L (dL' - [L', M])).
OneForm cocycle_partner(const ConnectionForm& lambda, const RationalMatrixFunction& L2);

/// res_{P+} tr(L dL' - [L, L'] Lambda). Throws RegularityViolation when the
/// form has a residue at some Tyurin point.
GaussianRational cocycle(const ConnectionForm& lambda, const RationalMatrixFunction& L, const RationalMatrixFunction& L2);

/// Negative order coefficients of tr(L dL' - [L, L'] Lambda) at point s; all
/// zero when the form is holomorphic there.
std::vector<GaussianRational> regularity_defect(const ConnectionForm& lambda, std::size_t s,
                                                const RationalMatrixFunction& L, const RationalMatrixFunction& L2);

struct ResiduePair {
  GaussianRational lhs;
  GaussianRational rhs;

  bool agree() const { return lhs == rhs; }
};

/// lhs = res_{gamma_s} tr(L dL'), rhs = c kappa_s([L, L']).
ResiduePair residue_eigenvalue_check(const SphereConfig& config, std::size_t s, const RationalMatrixFunction& L,
                                     const RationalMatrixFunction& L2);

/// lhs = res_{gamma_s} tr(L Lambda), rhs = c kappa_s(L).
ResiduePair connection_residue_check(const ConnectionForm& lambda, std::size_t s, const RationalMatrixFunction& L);

/// gamma([L, L2], L3) + gamma([L2, L3], L) + gamma([L3, L], L2).
GaussianRational cocycle_identity_check(const ConnectionForm& lambda, const RationalMatrixFunction& L,
                                        const RationalMatrixFunction& L2, const RationalMatrixFunction& L3);

/// gamma(g_k, g_l) can be nonzero only for lower <= k + l <= upper.
struct LocalityWindow {
  int lower = 0;
  int upper = 0;
  /// min{0, 1 - m_-}: never tighter than `lower` when m_- >= -1.
  int lower_alt = 0;
};

LocalityWindow locality_window(const ConnectionForm& lambda);

struct CocycleEntry {
  int k = 0;
  std::size_t i = 0;
  int l = 0;
  std::size_t j = 0;
  GaussianRational value;
};

struct CocycleTable {
  ConnectionForm lambda;
  LocalityWindow window;
  int lo = 0;
  int hi = 0;
  /// Every pair, lexicographic in (k, i, l, j).
  std::vector<CocycleEntry> values;
  bool antisymmetric = true;
  bool local = true;
  bool regular = true;
};

/// Gamma on all basis pairs with degrees in [lo, hi].
CocycleTable cocycle_table(BasisCache& cache, const ConnectionForm& lambda, int lo, int hi);

}  // namespace lax
