#include "laxalg/laurent.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "laxalg/errors.hpp"
#include "laxalg/random.hpp"
#include "test_support.hpp"

namespace lax {
namespace {

using testing::gi;

ExactMatrix E(std::size_t i, std::size_t j) { return ExactMatrix::unit(2, i, j); }

MatrixLaurentSeries Mono(const ExactMatrix& m, int k, int trunc) { return MatrixLaurentSeries::monomial(m, k, trunc); }

/// Coefficients agree on every exponent both series know.
void ExpectAgreeOnOverlap(const MatrixLaurentSeries& a, const MatrixLaurentSeries& b) {
  int lo = std::min(a.valuation(), b.valuation());
  int hi = std::min(a.trunc(), b.trunc());
  ASSERT_LE(lo, hi);
  for (int k = lo; k <= hi; ++k) EXPECT_EQ(a.coeff(k), b.coeff(k)) << "exponent " << k;
}

TEST(SeriesAdd, ZeroKeepsCoefficients) {
  Rng rng(1);
  MatrixLaurentSeries a = testing::random_series(rng, 2, -1, 2);
  MatrixLaurentSeries zero(2, 0, 1);
  MatrixLaurentSeries sum = a + zero;
  EXPECT_EQ(sum.trunc(), 1);
  for (int k = -1; k <= 1; ++k) EXPECT_EQ(sum.coeff(k), a.coeff(k));
}

TEST(SeriesAdd, Cancellation) {
  MatrixLaurentSeries sum = Mono(E(0, 1), -1, 2) + Mono(-E(0, 1), -1, 2);
  EXPECT_TRUE(sum.is_zero());
  EXPECT_FALSE(sum.exact_order().has_value());
}

TEST(SeriesAdd, PrecisionBookkeeping) {
  MatrixLaurentSeries sum = MatrixLaurentSeries(2, -1, 2) + MatrixLaurentSeries(2, 0, 1);
  EXPECT_EQ(sum.valuation(), -1);
  EXPECT_EQ(sum.trunc(), 1);
}

TEST(SeriesAdd, SizeMismatch) {
  EXPECT_THROW(MatrixLaurentSeries(2, 0, 1) + MatrixLaurentSeries(3, 0, 1), SizeMismatch);
  EXPECT_THROW(MatrixLaurentSeries(2, 0, 1) * MatrixLaurentSeries(3, 0, 1), SizeMismatch);
}

TEST(SeriesMul, InverseMonomials) {
  MatrixLaurentSeries p = Mono(ExactMatrix::identity(2), -1, 3) * Mono(ExactMatrix::identity(2), 1, 3);
  EXPECT_EQ(p.coeff(0), ExactMatrix::identity(2));
  EXPECT_EQ(p.exact_order(), 0);
}

TEST(SeriesMul, UnitMatrices) {
  MatrixLaurentSeries p = Mono(E(0, 1), 0, 0) * Mono(E(1, 0), 0, 0);
  EXPECT_EQ(p.coeff(0), E(0, 0));
}

TEST(SeriesMul, PrecisionBookkeeping) {
  MatrixLaurentSeries p = MatrixLaurentSeries(2, -1, 1) * MatrixLaurentSeries(2, -1, 1);
  EXPECT_EQ(p.valuation(), -2);
  EXPECT_EQ(p.trunc(), 0);
  EXPECT_THROW(p.coeff(1), InsufficientPrecision);
}

TEST(SeriesMul, MatchesNaiveCauchyProduct) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    MatrixLaurentSeries a = testing::random_series(rng, 2, -2, 2);
    MatrixLaurentSeries b = testing::random_series(rng, 2, -1, 3);
    MatrixLaurentSeries p = a * b;
    for (int k = p.valuation(); k <= p.trunc(); ++k) {
      ExactMatrix expected(2, 2);
      for (int i = a.valuation(); i <= a.trunc(); ++i) {
        int j = k - i;
        if (j < b.valuation() || j > b.trunc()) continue;
        expected += testing::naive_product(a.coeff(i), b.coeff(j));
      }
      EXPECT_EQ(p.coeff(k), expected);
    }
  }
}

TEST(SeriesBracket, SelfBracketVanishes) {
  Rng rng(2);
  MatrixLaurentSeries a = testing::random_series(rng, 3, -1, 2);
  EXPECT_TRUE(series_bracket(a, a).is_zero());
}

TEST(SeriesBracket, Sl2Relation) {
  MatrixLaurentSeries b = series_bracket(Mono(E(0, 1), 0, 0), Mono(E(1, 0), 0, 0));
  EXPECT_EQ(b.coeff(0), E(0, 0) - E(1, 1));
}

TEST(SeriesBracket, OppositeOrders) {
  Rng rng(3);
  ExactMatrix a = testing::small_matrix(rng, 2);
  ExactMatrix c = testing::small_matrix(rng, 2);
  MatrixLaurentSeries b = series_bracket(Mono(a, -1, 2), Mono(c, 1, 2));
  EXPECT_EQ(b.coeff(0), commutator(a, c));
  EXPECT_TRUE(b.coeff(1).is_zero());
}

TEST(SeriesDerivative, Examples) {
  Rng rng(4);
  ExactMatrix m = testing::small_matrix(rng, 2);
  MatrixLaurentSeries d = series_derivative(Mono(m, -1, 2));
  EXPECT_EQ(d.coeff(-2), -m);
  EXPECT_EQ(d.trunc(), 1);
  EXPECT_TRUE(series_derivative(Mono(m, 0, 2)).is_zero());
  EXPECT_EQ(series_derivative(Mono(m, 1, 2)).coeff(0), m);
}

TEST(SeriesResidue, Examples) {
  EXPECT_EQ(series_residue_trace_pairing(Mono(E(0, 1), 1, 3), Mono(E(1, 0), -1, 3), true), gi(-1));
  EXPECT_EQ(series_residue_trace_pairing(Mono(ExactMatrix::identity(2), 0, 2), Mono(ExactMatrix::identity(2), 0, 2),
                                         false),
            gi(0));
  MatrixLaurentSeries low(2, -3, -2);
  EXPECT_THROW(series_residue_trace_pairing(low, Mono(ExactMatrix::identity(2), 0, 0), false), InsufficientPrecision);
}

TEST(SeriesProperties, AssociativityAndJacobi) {
  Rng rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    int v = static_cast<int>(rng.uniform(-2, 0));
    MatrixLaurentSeries a = testing::random_series(rng, 2, v, 3);
    MatrixLaurentSeries b = testing::random_series(rng, 2, static_cast<int>(rng.uniform(-2, 0)), 3);
    MatrixLaurentSeries c = testing::random_series(rng, 2, static_cast<int>(rng.uniform(-2, 0)), 4);
    ExpectAgreeOnOverlap((a * b) * c, a * (b * c));
    MatrixLaurentSeries jacobi = series_bracket(a, series_bracket(b, c)) + series_bracket(b, series_bracket(c, a)) +
                                 series_bracket(c, series_bracket(a, b));
    ASSERT_LE(jacobi.valuation(), jacobi.trunc());
    EXPECT_TRUE(jacobi.is_zero());
  }
}

TEST(SeriesProperties, Leibniz) {
  Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    MatrixLaurentSeries a = testing::random_series(rng, 2, static_cast<int>(rng.uniform(-2, 0)), 3);
    MatrixLaurentSeries b = testing::random_series(rng, 2, static_cast<int>(rng.uniform(-2, 0)), 3);
    ExpectAgreeOnOverlap(series_derivative(a * b), series_derivative(a) * b + a * series_derivative(b));
  }
}

TEST(SeriesProperties, IntegrationByParts) {
  Rng rng(102);
  for (int trial = 0; trial < 100; ++trial) {
    MatrixLaurentSeries a = testing::random_series(rng, 3, static_cast<int>(rng.uniform(-2, 0)), 3);
    MatrixLaurentSeries b = testing::random_series(rng, 3, static_cast<int>(rng.uniform(-2, 0)), 3);
    GaussianRational lhs = series_residue_trace_pairing(b, series_derivative(a), false);
    GaussianRational rhs = series_residue_trace_pairing(a, b, true);
    EXPECT_EQ(lhs, -rhs);
  }
}

TEST(MatrixLaurentSeries, UnknownCoefficientsAreNotZero) {
  MatrixLaurentSeries s = Mono(E(0, 0), 0, 1);
  EXPECT_TRUE(s.coeff(-5).is_zero());
  EXPECT_THROW(s.coeff(2), InsufficientPrecision);
  EXPECT_THROW(s.truncated(3), InsufficientPrecision);
  EXPECT_EQ(s.shifted(-2).valuation(), -2);
  EXPECT_EQ(s.shifted(-2).trunc(), -1);
}

}  // namespace
}  // namespace lax
