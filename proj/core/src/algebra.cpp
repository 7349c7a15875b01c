#include "laxalg/algebra.hpp"

#include "laxalg/errors.hpp"

namespace lax {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::gl:
      return "gl";
    case Family::sl:
      return "sl";
    case Family::so:
      return "so";
    case Family::sp:
      return "sp";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "gl") return Family::gl;
  if (name == "sl") return Family::sl;
  if (name == "so") return Family::so;
  if (name == "sp") return Family::sp;
  throw ParseError("unknown family '" + std::string(name) + "' (expected gl, sl, so or sp)");
}

AlgebraSpec::AlgebraSpec(Family family, int n) : family_(family), n_(n) {
  if (n < 1) throw ValidationError("n must be positive");
  if (family == Family::so && n < 3) throw ValidationError("so(n) requires n >= 3");
  if (family == Family::sl && n < 2) throw ValidationError("sl(n) requires n >= 2");
  const std::size_t nn = static_cast<std::size_t>(n);
  size_ = family == Family::sp ? 2 * nn : nn;
  sigma_ = ExactMatrix(size_, size_);
  sigma_inverse_ = ExactMatrix(size_, size_);

  switch (family) {
    case Family::gl:
      for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j) basis_.push_back(ExactMatrix::unit(nn, i, j));
      break;
    case Family::sl:
      for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j)
          if (i != j) basis_.push_back(ExactMatrix::unit(nn, i, j));
      for (std::size_t k = 0; k + 1 < nn; ++k)
        basis_.push_back(ExactMatrix::unit(nn, k, k) - ExactMatrix::unit(nn, k + 1, k + 1));
      break;
    case Family::so:
      for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = i + 1; j < nn; ++j)
          basis_.push_back(ExactMatrix::unit(nn, i, j) - ExactMatrix::unit(nn, j, i));
      break;
    case Family::sp: {
      for (std::size_t i = 0; i < nn; ++i) {
        sigma_(i, nn + i) = 1;
        sigma_(nn + i, i) = -1;
      }
      sigma_inverse_ = -sigma_;
      const std::size_t N = size_;
      for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j)
          basis_.push_back(ExactMatrix::unit(N, i, j) - ExactMatrix::unit(N, nn + j, nn + i));
      for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = i; j < nn; ++j) {
          ExactMatrix b = ExactMatrix::unit(N, i, nn + j);
          if (i != j) b += ExactMatrix::unit(N, j, nn + i);
          basis_.push_back(std::move(b));
        }
      for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = i; j < nn; ++j) {
          ExactMatrix c = ExactMatrix::unit(N, nn + i, j);
          if (i != j) c += ExactMatrix::unit(N, nn + j, i);
          basis_.push_back(std::move(c));
        }
      break;
    }
  }
}

Vector AlgebraSpec::coordinates(const ExactMatrix& x) const {
  if (x.rows() != size_ || x.cols() != size_) throw SizeMismatch("coordinates: wrong matrix size");
  const std::size_t nn = static_cast<std::size_t>(n_);
  Vector c;
  c.reserve(dim());
  switch (family_) {
    case Family::gl:
      c = x.entries();
      break;
    case Family::sl: {
      for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j)
          if (i != j) c.push_back(x(i, j));
      GaussianRational partial;
      for (std::size_t k = 0; k + 1 < nn; ++k) {
        partial += x(k, k);
        c.push_back(partial);
      }
      break;
    }
    case Family::so:
      for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = i + 1; j < nn; ++j) c.push_back(x(i, j));
      break;
    case Family::sp:
      for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j) c.push_back(x(i, j));
      for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = i; j < nn; ++j) c.push_back(x(i, nn + j));
      for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = i; j < nn; ++j) c.push_back(x(nn + i, j));
      break;
  }
  if (from_coordinates(c) != x) throw MalformedInput("matrix does not lie in " + name());
  return c;
}

ExactMatrix AlgebraSpec::from_coordinates(const Vector& c) const {
  if (c.size() != dim()) throw SizeMismatch("from_coordinates: wrong coordinate count");
  ExactMatrix x(size_, size_);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) x += basis_[k] * c[k];
  return x;
}

bool AlgebraSpec::contains(const ExactMatrix& x) const {
  try {
    coordinates(x);
    return true;
  } catch (const MalformedInput&) {
    return false;
  }
}

std::string AlgebraSpec::name() const {
  return std::string(family_name(family_)) + "(" + std::to_string(size_) + ")";
}

TyurinPoint::TyurinPoint(const AlgebraSpec& spec, GaussianRational z, Vector alpha)
    : z_(std::move(z)), alpha_(std::move(alpha)) {
  if (alpha_.size() != spec.size())
    throw ValidationError("alpha has " + std::to_string(alpha_.size()) + " entries, expected " +
                          std::to_string(spec.size()));
  if (is_zero(alpha_)) throw ValidationError("alpha must be nonzero");
  if (z_.is_zero()) throw ValidationError("Tyurin point may not sit at z = 0 (reserved for P+)");
  if (spec.family() == Family::so && !dot(alpha_, alpha_).is_zero())
    throw ValidationError("alpha not isotropic: alpha^t alpha = " + to_string(dot(alpha_, alpha_)));
  while (alpha_[pivot_].is_zero()) ++pivot_;
}

}  // namespace lax
