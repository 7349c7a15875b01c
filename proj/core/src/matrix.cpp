#include "laxalg/matrix.hpp"

#include <algorithm>
#include <utility>

#include "laxalg/errors.hpp"

namespace lax {

GaussianRational dot(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw SizeMismatch("dot: vector lengths differ");
  GaussianRational s;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k].is_zero() || v[k].is_zero()) continue;
    s += u[k] * v[k];
  }
  return s;
}

Vector operator+(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw SizeMismatch("vector sum: lengths differ");
  Vector w(u);
  for (std::size_t k = 0; k < v.size(); ++k) w[k] += v[k];
  return w;
}

Vector operator-(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw SizeMismatch("vector difference: lengths differ");
  Vector w(u);
  for (std::size_t k = 0; k < v.size(); ++k) w[k] -= v[k];
  return w;
}

Vector operator*(const GaussianRational& c, const Vector& v) {
  Vector w(v);
  for (auto& x : w) x *= c;
  return w;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const GaussianRational& x) { return x.is_zero(); });
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw SizeMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

ExactMatrix ExactMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  ExactMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

ExactMatrix ExactMatrix::outer(const Vector& u, const Vector& v) {
  ExactMatrix m(u.size(), v.size());
  for (std::size_t r = 0; r < u.size(); ++r) {
    if (u[r].is_zero()) continue;
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = u[r] * v[c];
  }
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw SizeMismatch("from_rows: row length differs");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<long>(r * cols));
  }
  return m;
}

ExactMatrix ExactMatrix::column(const Vector& v) {
  ExactMatrix m(v.size(), 1);
  std::copy(v.begin(), v.end(), m.data_.begin());
  return m;
}

Vector ExactMatrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<long>(r * cols_),
                data_.begin() + static_cast<long>((r + 1) * cols_));
}

Vector ExactMatrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const GaussianRational& x) { return x.is_zero(); });
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

GaussianRational ExactMatrix::trace() const {
  GaussianRational s;
  for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) s += (*this)(k, k);
  return s;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("matrix sum: shapes differ");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("matrix difference: shapes differ");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix m(*this);
  for (auto& x : m.data_) x = -x;
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw SizeMismatch("matrix product: inner dimensions differ");
  ExactMatrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const GaussianRational& y = b(k, c);
        if (!y.is_zero()) p(r, c) += x * y;
      }
    }
  }
  return p;
}

Vector operator*(const ExactMatrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw SizeMismatch("matrix-vector product: length differs");
  Vector w(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c)
      if (!a(r, c).is_zero() && !v[c].is_zero()) w[r] += a(r, c) * v[c];
  return w;
}

GaussianRational trace_of_product(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw SizeMismatch("trace_of_product: shapes differ");
  GaussianRational s;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero() && !b(c, r).is_zero()) s += a(r, c) * b(c, r);
  return s;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

RowEchelon row_reduce(ExactMatrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));

    GaussianRational inv = m(lead_row, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!m(lead_row, k).is_zero()) m(lead_row, k) *= inv;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      GaussianRational f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(lead_row, k).is_zero()) m(r, k) -= f * m(lead_row, k);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

namespace {

// Scales every row by the lcm of its denominators so that all entries become
// Gaussian integers (real and imaginary denominators are 1).
ExactMatrix clear_denominators(const ExactMatrix& m) {
  ExactMatrix out(m);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).im().get_den_mpz_t());
    }
    if (l == 1) continue;
    GaussianRational scale{Rational(l)};
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) *= scale;
  }
  return out;
}

}  // namespace

std::size_t mat_rank(const ExactMatrix& input) {
  // Bareiss: every division below is exact in Z[i], so entries stay integral.
  ExactMatrix m = clear_denominators(input);
  std::size_t rank = 0;
  GaussianRational prev(1);
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(rank, k));
    const GaussianRational p = m(rank, c);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      const GaussianRational f = m(r, c);
      for (std::size_t k = c + 1; k < m.cols(); ++k) {
        GaussianRational v = p * m(r, k);
        if (!f.is_zero() && !m(rank, k).is_zero()) v -= f * m(rank, k);
        m(r, k) = v / prev;
      }
      m(r, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::vector<Vector> mat_nullspace(const ExactMatrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> mat_solve_affine(const ExactMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw SizeMismatch("mat_solve_affine: rhs length differs from row count");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.reduced(k, m.cols());
  return x;
}

}  // namespace lax
