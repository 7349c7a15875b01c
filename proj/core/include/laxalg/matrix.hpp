#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "laxalg/scalar.hpp"

namespace lax {

using Vector = std::vector<GaussianRational>;

/// Bilinear pairing u^t v (no conjugation).
GaussianRational dot(const Vector& u, const Vector& v);
Vector operator+(const Vector& u, const Vector& v);
Vector operator-(const Vector& u, const Vector& v);
Vector operator*(const GaussianRational& c, const Vector& v);
bool is_zero(const Vector& v);

/// Dense row-major matrix over Q(i).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static ExactMatrix identity(std::size_t n);
  /// E_{ij}: the single nonzero entry 1 at (i, j).
  static ExactMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  /// u v^t
  static ExactMatrix outer(const Vector& u, const Vector& v);
  static ExactMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static ExactMatrix column(const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  /// Row-major flattening.
  const std::vector<GaussianRational>& entries() const { return data_; }

  bool is_zero() const;
  ExactMatrix transpose() const;
  GaussianRational trace() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussianRational& c);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& c) { return a *= c; }
  friend ExactMatrix operator*(const GaussianRational& c, ExactMatrix a) { return a *= c; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend Vector operator*(const ExactMatrix& a, const Vector& v);
  ExactMatrix operator-() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

/// tr(a b) without forming the product.
GaussianRational trace_of_product(const ExactMatrix& a, const ExactMatrix& b);
/// a b - b a
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination over Q(i); pivots are the first nonzero entry in
/// column order.
RowEchelon row_reduce(ExactMatrix m);

/// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
std::size_t mat_rank(const ExactMatrix& m);

/// Basis of the right nullspace, one vector per free column of the RREF with a
/// 1 in that column and 0 in the other free columns.
std::vector<Vector> mat_nullspace(const ExactMatrix& m);

/// One solution of m x = b (free variables set to zero), or nullopt.
std::optional<Vector> mat_solve_affine(const ExactMatrix& m, const Vector& b);

}  // namespace lax
