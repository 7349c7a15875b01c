#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "laxalg/algebra.hpp"
#include "laxalg/laurent.hpp"

namespace lax {

/// The sphere with P+ at z = 0, P- at z = infinity, and the Tyurin points.
class SphereConfig {
 public:
  /// Throws ValidationError if two points share a position.
  SphereConfig(AlgebraSpec spec, std::vector<TyurinPoint> points);

  const AlgebraSpec& spec() const { return spec_; }
  const std::vector<TyurinPoint>& points() const { return points_; }
  std::size_t point_count() const { return points_.size(); }
  const TyurinPoint& point(std::size_t s) const { return points_.at(s); }

 private:
  AlgebraSpec spec_;
  std::vector<TyurinPoint> points_;
};

using ConfigPtr = std::shared_ptr<const SphereConfig>;

ConfigPtr make_config(AlgebraSpec spec, std::vector<TyurinPoint> points);
/// Same positions and marked vectors under another algebra of the same size.
ConfigPtr rebind_config(const SphereConfig& config, AlgebraSpec spec);

/// A marked point of the configuration. Local coordinates: w = z at P+,
/// w = 1/z at P-, w = z - z_s at a Tyurin point.
struct MarkedPoint {
  enum class Kind { plus, minus, tyurin };
  Kind kind = Kind::plus;
  std::size_t index = 0;

  static MarkedPoint plus() { return {Kind::plus, 0}; }
  static MarkedPoint minus() { return {Kind::minus, 0}; }
  static MarkedPoint tyurin(std::size_t s) { return {Kind::tyurin, s}; }
};

/// Matrix valued rational function with poles only at the marked points, in
/// canonical partial fraction form
///
///   L(z) = sum_{k=a}^{b} C_k z^k + sum_s sum_{j=1}^{p_s} R_{s,j} (z - z_s)^{-j}.
///
/// Trailing zero coefficients are trimmed on construction, so equality is
/// structural. Pole orders are not restricted here; membership in a graded
/// piece is checked by the graded-algebra module.
class RationalMatrixFunction {
 public:
  RationalMatrixFunction() = default;
  /// The zero function.
  explicit RationalMatrixFunction(ConfigPtr config);
  RationalMatrixFunction(ConfigPtr config, int poly_min, std::vector<ExactMatrix> poly_coeffs,
                         std::vector<std::vector<ExactMatrix>> principal);

  static RationalMatrixFunction monomial(ConfigPtr config, const ExactMatrix& m, int exponent);
  /// m (z - z_s)^{-order}
  static RationalMatrixFunction pole(ConfigPtr config, const ExactMatrix& m, std::size_t s, int order);

  const SphereConfig& config() const { return *config_; }
  const ConfigPtr& config_ptr() const { return config_; }
  std::size_t size() const { return config_->spec().size(); }

  int poly_min() const { return poly_min_; }
  /// poly_min - 1 when there is no polynomial part.
  int poly_max() const { return poly_min_ + static_cast<int>(poly_.size()) - 1; }
  const std::vector<ExactMatrix>& poly_coeffs() const { return poly_; }
  ExactMatrix poly_coeff(int exponent) const;
  /// R_{s,1}, R_{s,2}, ...
  const std::vector<ExactMatrix>& principal(std::size_t s) const { return principal_.at(s); }
  int pole_order(std::size_t s) const { return static_cast<int>(principal_.at(s).size()); }

  bool is_zero() const;
  /// Applies f to every coefficient (e.g. left multiplication by a constant).
  RationalMatrixFunction map(const std::function<ExactMatrix(const ExactMatrix&)>& f) const;
  /// Same coefficients attached to another configuration with identical points.
  RationalMatrixFunction rebind(ConfigPtr config) const;

  RationalMatrixFunction& operator+=(const RationalMatrixFunction& o);
  RationalMatrixFunction& operator-=(const RationalMatrixFunction& o);
  friend RationalMatrixFunction operator+(RationalMatrixFunction a, const RationalMatrixFunction& b) {
    return a += b;
  }
  friend RationalMatrixFunction operator-(RationalMatrixFunction a, const RationalMatrixFunction& b) {
    return a -= b;
  }
  friend RationalMatrixFunction operator*(const GaussianRational& c, const RationalMatrixFunction& f);
  RationalMatrixFunction operator-() const;

  friend bool operator==(const RationalMatrixFunction& a, const RationalMatrixFunction& b);

 private:
  void normalize();
  void require_compatible(const RationalMatrixFunction& o) const;

  ConfigPtr config_;
  int poly_min_ = 0;
  std::vector<ExactMatrix> poly_;
  std::vector<std::vector<ExactMatrix>> principal_;
};

/// A matrix valued 1-form f(z) dz, carried by its coefficient in z.
/// Pole orders may exceed any divisor bound; it is not an algebra element.
struct OneForm {
  RationalMatrixFunction coefficient;
};

/// Lowest exponent that can appear in the local expansion.
int local_valuation_bound(const RationalMatrixFunction& f, MarkedPoint at);
int form_valuation_bound(const OneForm& form, MarkedPoint at);

/// Exact Laurent expansion in the local coordinate of `at`, known to w^trunc.
MatrixLaurentSeries localize(const RationalMatrixFunction& f, MarkedPoint at, int trunc);
/// Local expansion of the coefficient of dw; at P- this includes dz = -w^{-2} dw.
MatrixLaurentSeries localize_form(const OneForm& form, MarkedPoint at, int trunc);

/// d/dz in partial fractions.
OneForm global_derivative(const RationalMatrixFunction& f);

/// Residue of tr(A B) at `at`, with B a 1-form; at P- through w = 1/z.
GaussianRational residue_of_trace_form(const RationalMatrixFunction& a, const OneForm& b, MarkedPoint at);

/// Rebuilds the partial fraction form from principal parts: negative powers of
/// w at P+, nonpositive powers at P- and negative powers at each Tyurin point.
RationalMatrixFunction assemble_from_local(ConfigPtr config, const MatrixLaurentSeries& at_plus,
                                           const MatrixLaurentSeries& at_minus,
                                           const std::vector<MatrixLaurentSeries>& at_points);

/// Pointwise product and commutator.
RationalMatrixFunction multiply(const RationalMatrixFunction& a, const RationalMatrixFunction& b);
RationalMatrixFunction bracket(const RationalMatrixFunction& a, const RationalMatrixFunction& b);

}  // namespace lax
