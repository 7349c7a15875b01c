#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "laxalg/matrix.hpp"

namespace lax {

enum class Family { gl, sl, so, sp };

std::string_view family_name(Family f);
/// "gl" | "sl" | "so" | "sp"; throws ParseError otherwise.
Family parse_family(std::string_view name);

/// A classical matrix Lie algebra gl(n), sl(n), so(n) or sp(2n) realized on
/// N x N matrices (N = 2n for sp).
///
/// For sp the invariant form is sigma = [[0, I], [-I, 0]] and the algebra is
/// {X : X^t = -sigma X sigma^{-1}}. The basis is fixed so that coordinates can
/// be read directly from matrix entries:
///   gl: E_ij, row major.
///   sl: off-diagonal E_ij row major, then E_kk - E_{k+1,k+1}.
///   so: E_ij - E_ji for i < j.
///   sp: [[A, 0], [0, -A^t]] units, then symmetric B (upper right) and
///       symmetric C (lower left) units, i <= j.
class AlgebraSpec {
 public:
  AlgebraSpec(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  /// Matrix size N.
  std::size_t size() const { return size_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<ExactMatrix>& basis() const { return basis_; }

  /// Only meaningful for sp; identity-free zero matrix otherwise.
  const ExactMatrix& sigma() const { return sigma_; }
  const ExactMatrix& sigma_inverse() const { return sigma_inverse_; }

  bool contains(const ExactMatrix& x) const;
  /// Coordinates in basis(); throws MalformedInput if x is not in the algebra.
  Vector coordinates(const ExactMatrix& x) const;
  ExactMatrix from_coordinates(const Vector& c) const;

  /// Lowest Laurent order allowed at a Tyurin point: -1, or -2 for sp.
  int max_pole_order() const { return family_ == Family::sp ? 2 : 1; }

  /// e.g. "sl(2)", "sp(4)".
  std::string name() const;

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.family_ == b.family_ && a.n_ == b.n_;
  }

 private:
  Family family_;
  int n_;
  std::size_t size_;
  ExactMatrix sigma_;
  ExactMatrix sigma_inverse_;
  std::vector<ExactMatrix> basis_;
};

/// Weak singularity (gamma_s, alpha_s): a finite nonzero position on the
/// sphere and a marked vector.
class TyurinPoint {
 public:
  /// Validates against the family: alpha nonzero with N entries, z != 0, and
  /// alpha^t alpha = 0 for so. Throws ValidationError.
  TyurinPoint(const AlgebraSpec& spec, GaussianRational z, Vector alpha);

  const GaussianRational& z() const { return z_; }
  const Vector& alpha() const { return alpha_; }
  /// First index p with alpha_p != 0.
  std::size_t pivot() const { return pivot_; }

  friend bool operator==(const TyurinPoint& a, const TyurinPoint& b) {
    return a.z_ == b.z_ && a.alpha_ == b.alpha_;
  }

 private:
  GaussianRational z_;
  Vector alpha_;
  std::size_t pivot_ = 0;
};

}  // namespace lax
