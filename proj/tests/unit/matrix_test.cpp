#include "laxalg/matrix.hpp"

#include <gtest/gtest.h>

#include "laxalg/errors.hpp"
#include "laxalg/random.hpp"
#include "test_support.hpp"

namespace lax {
namespace {

using testing::gi;

ExactMatrix stack(const std::vector<Vector>& vs, std::size_t cols) { return ExactMatrix::from_rows(vs, cols); }

void ExpectNullspaceBasis(const ExactMatrix& m, const std::vector<Vector>& basis) {
  for (const Vector& v : basis) EXPECT_TRUE(is_zero(testing::naive_product(m, ExactMatrix::column(v)).col(0)));
  if (!basis.empty()) {
    EXPECT_EQ(mat_rank(stack(basis, m.cols())), basis.size());
  }
}

TEST(MatRank, ProportionalRows) { EXPECT_EQ(mat_rank({{gi(1), gi(2)}, {gi(2), gi(4)}}), 1u); }

TEST(MatRank, Identity) { EXPECT_EQ(mat_rank(ExactMatrix::identity(3)), 3u); }

TEST(MatRank, GaussianDependentRows) {
  ExactMatrix m{{gi(1), gi(0, 1)}, {gi(0, -1), gi(1)}};
  GaussianRational det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  ASSERT_TRUE(det.is_zero());
  EXPECT_EQ(mat_rank(m), 1u);
}

TEST(MatRank, EmptyAndZero) {
  EXPECT_EQ(mat_rank(ExactMatrix(0, 4)), 0u);
  EXPECT_EQ(mat_rank(ExactMatrix(3, 2)), 0u);
}

TEST(MatNullspace, SingleRow) {
  auto basis = mat_nullspace({{gi(1), gi(1)}});
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], (Vector{gi(-1), gi(1)}));
}

TEST(MatNullspace, IdentityHasNone) { EXPECT_TRUE(mat_nullspace(ExactMatrix::identity(2)).empty()); }

TEST(MatNullspace, TwoVectorsAnnihilated) {
  ExactMatrix m{{gi(1), gi(2), gi(3)}};
  auto basis = mat_nullspace(m);
  ASSERT_EQ(basis.size(), 2u);
  ExpectNullspaceBasis(m, basis);
}

TEST(MatNullspace, RankPlusNullityOnRandomMatrices) {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 6));
    std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 6));
    ExactMatrix m = testing::random_matrix(rng, rows, cols, 100);
    if (trial % 3 == 0 && rows > 1) {
      // Force a dependency so that rank deficiency is exercised.
      GaussianRational c = testing::random_fraction(rng, 100);
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = c * m(0, j);
    }
    auto basis = mat_nullspace(m);
    EXPECT_EQ(mat_rank(m) + basis.size(), cols);
    ExpectNullspaceBasis(m, basis);
  }
}

TEST(MatRank, AgreesWithRowReduce) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    ExactMatrix m = testing::random_matrix(rng, 4, 5, 9);
    for (std::size_t j = 0; j < 5; ++j) m(3, j) = m(0, j) + m(1, j);
    EXPECT_EQ(mat_rank(m), row_reduce(m).pivots.size());
    EXPECT_EQ(mat_rank(m), 3u);
  }
}

TEST(MatSolveAffine, Identity) {
  auto x = mat_solve_affine(ExactMatrix::identity(2), {gi(5), gi(7)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (Vector{gi(5), gi(7)}));
}

TEST(MatSolveAffine, FirstPivotRule) {
  ExactMatrix m{{gi(1), gi(1)}};
  auto x = mat_solve_affine(m, {gi(2)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (Vector{gi(2), gi(0)}));
  EXPECT_EQ(dot(m.row(0), *x), gi(2));
}

TEST(MatSolveAffine, Inconsistent) { EXPECT_FALSE(mat_solve_affine({{gi(1)}, {gi(1)}}, {gi(1), gi(2)}).has_value()); }

TEST(MatSolveAffine, RandomConsistentSystems) {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    ExactMatrix m = testing::random_matrix(rng, 3, 4, 20);
    Vector x0;
    for (int j = 0; j < 4; ++j) x0.push_back(testing::random_fraction(rng, 20));
    Vector b = m * x0;
    auto x = mat_solve_affine(m, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(testing::naive_product(m, ExactMatrix::column(*x)).col(0), b);
  }
}

TEST(ExactMatrix, ProductMatchesNaive) {
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    ExactMatrix a = testing::random_matrix(rng, 3, 4, 10);
    ExactMatrix b = testing::random_matrix(rng, 4, 2, 10);
    EXPECT_EQ(a * b, testing::naive_product(a, b));
  }
}

TEST(ExactMatrix, TraceOfProduct) {
  Rng rng(4);
  ExactMatrix a = testing::small_matrix(rng, 3);
  ExactMatrix b = testing::small_matrix(rng, 3);
  EXPECT_EQ(trace_of_product(a, b), testing::naive_product(a, b).trace());
  EXPECT_EQ(commutator(a, b), testing::naive_product(a, b) - testing::naive_product(b, a));
}

TEST(ExactMatrix, SizeMismatch) {
  EXPECT_THROW(ExactMatrix(2, 2) + ExactMatrix(3, 3), SizeMismatch);
  EXPECT_THROW(ExactMatrix(2, 3) * ExactMatrix(2, 3), SizeMismatch);
}

}  // namespace
}  // namespace lax
