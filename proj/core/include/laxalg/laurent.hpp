#pragma once

#include <optional>
#include <vector>

#include "laxalg/matrix.hpp"

namespace lax {

/// Truncated Laurent expansion sum_{k=v}^{T} C_k w^k of an N x N matrix
/// function in a local coordinate w.
///
/// `valuation` is a storage bound, not the exact order: C_v may vanish.
/// Coefficients above `trunc` are unknown; asking for them throws
/// InsufficientPrecision rather than returning zero.
class MatrixLaurentSeries {
 public:
  MatrixLaurentSeries() = default;
  /// All-zero series with coefficients stored for exponents valuation..trunc.
  MatrixLaurentSeries(std::size_t size, int valuation, int trunc);
  MatrixLaurentSeries(int valuation, int trunc, std::vector<ExactMatrix> coeffs);

  static MatrixLaurentSeries monomial(const ExactMatrix& m, int exponent, int trunc);

  std::size_t size() const { return size_; }
  int valuation() const { return valuation_; }
  int trunc() const { return trunc_; }

  /// Coefficient of w^k; zero below the valuation.
  ExactMatrix coeff(int k) const;
  void set_coeff(int k, ExactMatrix m);
  const std::vector<ExactMatrix>& coeffs() const { return coeffs_; }

  /// First exponent with a nonzero coefficient, or nullopt if all stored
  /// coefficients vanish.
  std::optional<int> exact_order() const;
  /// True when every stored coefficient is zero.
  bool is_zero() const { return !exact_order().has_value(); }

  /// Drops coefficients above `trunc` (which must not exceed the current one).
  MatrixLaurentSeries truncated(int trunc) const;
  /// Multiplies by w^shift.
  MatrixLaurentSeries shifted(int shift) const;

  MatrixLaurentSeries operator-() const;
  friend MatrixLaurentSeries operator*(const GaussianRational& c, const MatrixLaurentSeries& a);

  friend bool operator==(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b) {
    return a.size_ == b.size_ && a.valuation_ == b.valuation_ && a.trunc_ == b.trunc_ &&
           a.coeffs_ == b.coeffs_;
  }

 private:
  std::size_t size_ = 0;
  int valuation_ = 0;
  int trunc_ = -1;
  std::vector<ExactMatrix> coeffs_;  // exponents valuation_..trunc_
};

/// valuation = min, trunc = min.
MatrixLaurentSeries series_add(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b);
MatrixLaurentSeries series_sub(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b);
/// Cauchy product; trunc = min(v_a + T_b, v_b + T_a).
MatrixLaurentSeries series_mul(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b);
/// a b - b a with the product precision rule.
MatrixLaurentSeries series_bracket(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b);
/// d/dw termwise.
MatrixLaurentSeries series_derivative(const MatrixLaurentSeries& a);

inline MatrixLaurentSeries operator+(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b) {
  return series_add(a, b);
}
inline MatrixLaurentSeries operator-(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b) {
  return series_sub(a, b);
}
inline MatrixLaurentSeries operator*(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b) {
  return series_mul(a, b);
}

/// Coefficient of w^k in tr(a b), computed without forming the full product.
GaussianRational trace_product_coeff(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b, int k);

/// res_w tr(a * db) when use_derivative, else res_w tr(a * b) with b read as
/// the coefficient of b dw.
GaussianRational series_residue_trace_pairing(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b,
                                              bool use_derivative);

}  // namespace lax
