#pragma once

#include <cstdint>
#include <vector>

#include "laxalg/laurent.hpp"
#include "laxalg/matrix.hpp"
#include "laxalg/random.hpp"
#include "laxalg/sphere.hpp"

namespace lax::testing {

inline GaussianRational gi(long re, long im = 0) { return {Rational(re), Rational(im)}; }

inline GaussianRational gq(long re_num, long re_den, long im_num = 0, long im_den = 1) {
  Rational re(re_num, re_den);
  Rational im(im_num, im_den);
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

/// Gaussian rational whose parts have numerator and denominator magnitude <= bound.
inline GaussianRational random_fraction(Rng& rng, int bound) {
  auto part = [&] {
    Rational q(rng.uniform(-bound, bound), rng.uniform(1, bound));
    q.canonicalize();
    return q;
  };
  Rational re = part();
  return {re, part()};
}

inline ExactMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_fraction(rng, bound);
  return m;
}

inline ExactMatrix small_matrix(Rng& rng, std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.gaussian(2);
  return m;
}

inline MatrixLaurentSeries random_series(Rng& rng, std::size_t n, int valuation, int trunc) {
  MatrixLaurentSeries s(n, valuation, trunc);
  for (int k = valuation; k <= trunc; ++k) s.set_coeff(k, small_matrix(rng, n));
  return s;
}

/// Naive matrix product, independent of the library's operator*.
inline ExactMatrix naive_product(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      GaussianRational acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

/// Evaluates a partial fraction function at a point away from its poles.
inline ExactMatrix evaluate(const RationalMatrixFunction& f, const GaussianRational& z) {
  std::size_t n = f.size();
  ExactMatrix out(n, n);
  for (int k = f.poly_min(); k <= f.poly_max(); ++k) out += pow(z, k) * f.poly_coeff(k);
  for (std::size_t s = 0; s < f.config().point_count(); ++s) {
    GaussianRational w = z - f.config().point(s).z();
    const auto& principal = f.principal(s);
    for (std::size_t j = 0; j < principal.size(); ++j)
      out += pow(w, -static_cast<long>(j + 1)) * principal[j];
  }
  return out;
}

}  // namespace lax::testing

namespace lax::testing {

/// Random function with the polynomial part on z^lo..z^hi and poles of order
/// up to max_pole at each Tyurin point; coefficients are arbitrary matrices.
inline RationalMatrixFunction random_function(Rng& rng, const ConfigPtr& config, int lo, int hi, int max_pole) {
  std::size_t n = config->spec().size();
  std::vector<ExactMatrix> poly;
  for (int k = lo; k <= hi; ++k) poly.push_back(small_matrix(rng, n));
  std::vector<std::vector<ExactMatrix>> principal(config->point_count());
  for (auto& p : principal) {
    int order = static_cast<int>(rng.uniform(0, max_pole));
    for (int j = 0; j < order; ++j) p.push_back(small_matrix(rng, n));
  }
  return RationalMatrixFunction(config, lo, std::move(poly), std::move(principal));
}

}  // namespace lax::testing

#include "laxalg/graded.hpp"

namespace lax::testing {

/// Random combination of the basis of g_m.
inline RationalMatrixFunction random_member(Rng& rng, BasisCache& cache, int m) {
  RationalMatrixFunction out(cache.config());
  for (const auto& b : cache.at(m).elements) out += rng.gaussian(2) * b;
  return out;
}

/// Checks f = g by evaluation at a few points away from the poles, with the
/// naive product as the only arithmetic shared with the library.
inline bool agree_pointwise(const RationalMatrixFunction& f, const RationalMatrixFunction& g) {
  for (GaussianRational z : {GaussianRational(Rational(7, 11), Rational(1, 5)), GaussianRational(Rational(-13, 3)),
                             GaussianRational(Rational(2, 9), Rational(-17, 4))})
    if (evaluate(f, z) != evaluate(g, z)) return false;
  return true;
}

}  // namespace lax::testing
