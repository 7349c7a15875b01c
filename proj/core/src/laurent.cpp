#include "laxalg/laurent.hpp"

#include <algorithm>
#include <string>

#include "laxalg/errors.hpp"

namespace lax {

namespace {

void require_same_size(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b, const char* op) {
  if (a.size() != b.size())
    throw SizeMismatch(std::string(op) + ": series of size " + std::to_string(a.size()) + " and " +
                       std::to_string(b.size()));
}

}  // namespace

MatrixLaurentSeries::MatrixLaurentSeries(std::size_t size, int valuation, int trunc)
    : size_(size), valuation_(valuation), trunc_(std::max(trunc, valuation - 1)) {
  coeffs_.assign(static_cast<std::size_t>(trunc_ - valuation_ + 1), ExactMatrix(size, size));
}

MatrixLaurentSeries::MatrixLaurentSeries(int valuation, int trunc, std::vector<ExactMatrix> coeffs)
    : valuation_(valuation), trunc_(trunc), coeffs_(std::move(coeffs)) {
  if (static_cast<long>(coeffs_.size()) != static_cast<long>(trunc) - valuation + 1)
    throw SizeMismatch("coefficient count does not match valuation..trunc");
  if (coeffs_.empty()) throw SizeMismatch("series needs at least one coefficient to fix its size");
  size_ = coeffs_.front().rows();
  for (const auto& c : coeffs_)
    if (c.rows() != size_ || c.cols() != size_) throw SizeMismatch("coefficients must be square of equal size");
}

MatrixLaurentSeries MatrixLaurentSeries::monomial(const ExactMatrix& m, int exponent, int trunc) {
  MatrixLaurentSeries s(m.rows(), std::min(exponent, trunc), trunc);
  if (exponent <= trunc) s.set_coeff(exponent, m);
  return s;
}

ExactMatrix MatrixLaurentSeries::coeff(int k) const {
  if (k > trunc_)
    throw InsufficientPrecision("coefficient of w^" + std::to_string(k) + " requested, series known to w^" +
                                std::to_string(trunc_));
  if (k < valuation_) return ExactMatrix(size_, size_);
  return coeffs_[static_cast<std::size_t>(k - valuation_)];
}

void MatrixLaurentSeries::set_coeff(int k, ExactMatrix m) {
  if (k < valuation_ || k > trunc_) throw std::out_of_range("set_coeff: exponent outside valuation..trunc");
  if (m.rows() != size_ || m.cols() != size_) throw SizeMismatch("set_coeff: wrong matrix size");
  coeffs_[static_cast<std::size_t>(k - valuation_)] = std::move(m);
}

std::optional<int> MatrixLaurentSeries::exact_order() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return valuation_ + static_cast<int>(k);
  return std::nullopt;
}

MatrixLaurentSeries MatrixLaurentSeries::truncated(int trunc) const {
  if (trunc > trunc_) throw InsufficientPrecision("cannot raise truncation order");
  MatrixLaurentSeries out(size_, std::min(valuation_, trunc), trunc);
  for (int k = out.valuation_; k <= trunc; ++k) out.set_coeff(k, coeff(k));
  return out;
}

MatrixLaurentSeries MatrixLaurentSeries::shifted(int shift) const {
  MatrixLaurentSeries out(*this);
  out.valuation_ += shift;
  out.trunc_ += shift;
  return out;
}

MatrixLaurentSeries MatrixLaurentSeries::operator-() const {
  MatrixLaurentSeries out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

MatrixLaurentSeries operator*(const GaussianRational& c, const MatrixLaurentSeries& a) {
  MatrixLaurentSeries out(a);
  for (auto& m : out.coeffs_) m *= c;
  return out;
}

MatrixLaurentSeries series_add(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b) {
  require_same_size(a, b, "series_add");
  int v = std::min(a.valuation(), b.valuation());
  int t = std::min(a.trunc(), b.trunc());
  MatrixLaurentSeries out(a.size(), v, t);
  for (int k = v; k <= t; ++k) out.set_coeff(k, a.coeff(k) + b.coeff(k));
  return out;
}

MatrixLaurentSeries series_sub(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b) {
  return series_add(a, -b);
}

MatrixLaurentSeries series_mul(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b) {
  require_same_size(a, b, "series_mul");
  int v = a.valuation() + b.valuation();
  int t = std::min(a.valuation() + b.trunc(), b.valuation() + a.trunc());
  MatrixLaurentSeries out(a.size(), v, t);
  for (int k = v; k <= t; ++k) {
    ExactMatrix c(a.size(), a.size());
    for (int i = a.valuation(); i <= k - b.valuation(); ++i) {
      const ExactMatrix& x = a.coeffs()[static_cast<std::size_t>(i - a.valuation())];
      const ExactMatrix& y = b.coeffs()[static_cast<std::size_t>(k - i - b.valuation())];
      if (x.is_zero() || y.is_zero()) continue;
      c += x * y;
    }
    out.set_coeff(k, std::move(c));
  }
  return out;
}

MatrixLaurentSeries series_bracket(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b) {
  return series_sub(series_mul(a, b), series_mul(b, a));
}

MatrixLaurentSeries series_derivative(const MatrixLaurentSeries& a) {
  MatrixLaurentSeries out(a.size(), a.valuation() - 1, a.trunc() - 1);
  for (int k = a.valuation(); k <= a.trunc(); ++k)
    if (k != 0) out.set_coeff(k - 1, a.coeff(k) * GaussianRational(k));
  return out;
}

GaussianRational trace_product_coeff(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b, int k) {
  require_same_size(a, b, "trace_product_coeff");
  int t = std::min(a.valuation() + b.trunc(), b.valuation() + a.trunc());
  if (k > t)
    throw InsufficientPrecision("product known to w^" + std::to_string(t) + ", coefficient of w^" +
                                std::to_string(k) + " requested");
  GaussianRational s;
  for (int i = a.valuation(); i <= k - b.valuation(); ++i) {
    const ExactMatrix& x = a.coeffs()[static_cast<std::size_t>(i - a.valuation())];
    const ExactMatrix& y = b.coeffs()[static_cast<std::size_t>(k - i - b.valuation())];
    s += trace_of_product(x, y);
  }
  return s;
}

GaussianRational series_residue_trace_pairing(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b,
                                              bool use_derivative) {
  if (use_derivative) return trace_product_coeff(a, series_derivative(b), -1);
  return trace_product_coeff(a, b, -1);
}

}  // namespace lax
