#include "laxalg/central.hpp"

#include <gtest/gtest.h>

#include "laxalg/config.hpp"
#include "laxalg/errors.hpp"
#include "laxalg/tyurin_local.hpp"
#include "test_support.hpp"

namespace lax {
namespace {

using testing::gi;

ConfigPtr RandomConfig(Family family, int n, std::size_t points, std::uint64_t seed = 42) {
  AlgebraSpec spec(family, n);
  return make_config(spec, random_tyurin_points(spec, points, seed));
}

ExactMatrix E() { return ExactMatrix::unit(2, 0, 1); }
ExactMatrix F() { return ExactMatrix::unit(2, 1, 0); }
ExactMatrix H() { return ExactMatrix{{gi(1), gi(0)}, {gi(0), gi(-1)}}; }

/// res_{z=0} tr(X z^i d(Y z^j)) = j tr(XY) when i + j = 0: the monomial oracle.
GaussianRational MonomialCocycle(const ExactMatrix& x, int i, const ExactMatrix& y, int j) {
  if (i + j != 0) return GaussianRational();
  return GaussianRational(j) * testing::naive_product(x, y).trace();
}

TEST(Cocycle, LoopAlgebraExamples) {
  auto config = RandomConfig(Family::sl, 2, 0);
  auto lambda = construct_connection(config, 6);
  ASSERT_TRUE(lambda.is_zero());
  auto ez = RationalMatrixFunction::monomial(config, E(), 1);
  auto fz = RationalMatrixFunction::monomial(config, F(), -1);
  EXPECT_EQ(cocycle(lambda, ez, fz), gi(-1));
  EXPECT_EQ(cocycle(lambda, fz, ez), gi(1));
  EXPECT_EQ(cocycle(lambda, ez, ez), gi(0));
}

TEST(Cocycle, ScalarMonomials) {
  auto config = RandomConfig(Family::gl, 3, 0);
  auto lambda = construct_connection(config, 6);
  auto a = RationalMatrixFunction::monomial(config, ExactMatrix::identity(3), 1);
  auto b = RationalMatrixFunction::monomial(config, ExactMatrix::identity(3), -1);
  EXPECT_EQ(cocycle(lambda, a, b), gi(-3));
}

TEST(Cocycle, MatchesMonomialOracleAtKZero) {
  AlgebraSpec spec(Family::sl, 2);
  auto config = make_config(spec, {});
  auto lambda = construct_connection(config, 6);
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j)
      for (const auto& x : spec.basis())
        for (const auto& y : spec.basis())
          EXPECT_EQ(cocycle(lambda, RationalMatrixFunction::monomial(config, x, i),
                            RationalMatrixFunction::monomial(config, y, j)),
                    MonomialCocycle(x, i, y, j));
}

class ConnectionTest : public ::testing::TestWithParam<std::pair<Family, int>> {
 protected:
  ConfigPtr Config(std::size_t points) { return RandomConfig(GetParam().first, GetParam().second, points, 17); }
};

TEST_P(ConnectionTest, ConditionsHoldOnSubstitution) {
  auto config = Config(2);
  auto lambda = construct_connection(config, 6);
  ASSERT_TRUE(check_connection(lambda).valid) << check_connection(lambda).first_violation;
  const AlgebraSpec& spec = config->spec();
  for (std::size_t s = 0; s < config->point_count(); ++s) {
    const Vector& alpha = config->point(s).alpha();
    auto local = localize(lambda.coefficient, MarkedPoint::tyurin(s), 1);
    EXPECT_TRUE(local.coeff(-2).is_zero());
    const Vector& bt = lambda.beta_tilde[s];
    EXPECT_EQ(local.coeff(-1), residue_shape(spec, alpha, bt));
    Vector sigma_alpha = spec.family() == Family::sp ? spec.sigma() * alpha : alpha;
    EXPECT_EQ(dot(bt, sigma_alpha), gi(1));
    EXPECT_EQ(local.coeff(0) * alpha, lambda.kappa_tilde[s] * alpha);
    if (spec.family() == Family::sp) {
      EXPECT_TRUE(dot(alpha, spec.sigma() * (local.coeff(1) * alpha)).is_zero());
    }
  }
}

TEST_P(ConnectionTest, ResidueLemmas) {
  auto config = Config(2);
  auto lambda = construct_connection(config, 6);
  const AlgebraSpec& spec = config->spec();
  GaussianRational c(family_factor(spec));
  BasisCache cache(config);
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto L = testing::random_member(rng, cache, static_cast<int>(rng.uniform(-2, 2)));
    auto L2 = testing::random_member(rng, cache, static_cast<int>(rng.uniform(-2, 2)));
    for (std::size_t s = 0; s < config->point_count(); ++s) {
      MarkedPoint at = MarkedPoint::tyurin(s);
      const TyurinPoint& pt = config->point(s);
      auto pair = residue_eigenvalue_check(*config, s, L, L2);
      // Independent route: series residue against the eigenvalue read off the bracket.
      GaussianRational lhs = series_residue_trace_pairing(localize(L, at, 3), localize(L2, at, 4), true);
      auto br = check_local(spec, pt, localize(bracket(L, L2), at, 2));
      ASSERT_TRUE(br.satisfied);
      EXPECT_EQ(pair.lhs, lhs);
      EXPECT_EQ(pair.rhs, c * *br.kappa);
      EXPECT_TRUE(pair.agree());

      auto conn = connection_residue_check(lambda, s, L);
      auto own = check_local(spec, pt, localize(L, at, 2));
      GaussianRational res = series_residue_trace_pairing(localize(L, at, 3), localize(lambda.coefficient, at, 3), false);
      EXPECT_EQ(conn.lhs, res);
      EXPECT_EQ(conn.rhs, c * *own.kappa);
      EXPECT_TRUE(conn.agree());

      for (const auto& d : regularity_defect(lambda, s, L, L2)) EXPECT_TRUE(d.is_zero());
    }
  }
}

TEST_P(ConnectionTest, CocycleIdentityAndAntisymmetry) {
  auto config = Config(2);
  auto lambda = construct_connection(config, 6);
  BasisCache cache(config);
  Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = testing::random_member(rng, cache, static_cast<int>(rng.uniform(-2, 2)));
    auto b = testing::random_member(rng, cache, static_cast<int>(rng.uniform(-2, 2)));
    auto c = testing::random_member(rng, cache, static_cast<int>(rng.uniform(-1, 1)));
    EXPECT_EQ(cocycle(lambda, a, b), -cocycle(lambda, b, a));
    EXPECT_TRUE(cocycle(lambda, a, a).is_zero());
    EXPECT_TRUE(cocycle_identity_check(lambda, a, b, c).is_zero());
    EXPECT_EQ(cocycle(lambda, a + c, b), cocycle(lambda, a, b) + cocycle(lambda, c, b));
  }
}

TEST_P(ConnectionTest, TableMatchesDirectCocycleAndWindow) {
  auto config = Config(2);
  auto lambda = construct_connection(config, 6);
  BasisCache cache(config);
  auto table = cocycle_table(cache, lambda, -2, 2);
  EXPECT_TRUE(table.antisymmetric);
  EXPECT_TRUE(table.local);
  EXPECT_TRUE(table.regular);
  for (const auto& e : table.values) {
    EXPECT_EQ(e.value, cocycle(lambda, cache.at(e.k).elements[e.i], cache.at(e.l).elements[e.j]));
    if (e.k + e.l < table.window.lower || e.k + e.l > table.window.upper) {
      EXPECT_TRUE(e.value.is_zero());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Families, ConnectionTest,
                         ::testing::Values(std::pair{Family::gl, 2}, std::pair{Family::sl, 2},
                                           std::pair{Family::sl, 3}, std::pair{Family::so, 3},
                                           std::pair{Family::so, 4}, std::pair{Family::sp, 1},
                                           std::pair{Family::sp, 2}));

TEST(Connection, ZeroAtKZero) {
  auto lambda = construct_connection(RandomConfig(Family::so, 3, 0), 6);
  EXPECT_TRUE(lambda.is_zero());
  EXPECT_FALSE(lambda.m_plus.has_value());
  EXPECT_FALSE(lambda.m_minus.has_value());
  LocalityWindow w = locality_window(lambda);
  EXPECT_EQ(w.lower, 0);
  EXPECT_EQ(w.upper, 0);
}

TEST(Connection, WindowFromValuations) {
  auto lambda = construct_connection(RandomConfig(Family::sl, 2, 2), 6);
  ASSERT_TRUE(lambda.m_plus.has_value());
  ASSERT_TRUE(lambda.m_minus.has_value());
  LocalityWindow w = locality_window(lambda);
  EXPECT_EQ(w.upper, std::max(0, -1 - *lambda.m_plus));
  EXPECT_EQ(w.lower_alt, std::min(0, 1 - *lambda.m_minus));
  EXPECT_LE(w.lower_alt, w.lower);
}

TEST(Connection, CorruptedFormBreaksRegularity) {
  auto config = RandomConfig(Family::sl, 2, 1);
  auto lambda = construct_connection(config, 6);
  // A multiple of the identity would be invisible to tr([L, L'] Lambda); shift the residue by E11 instead.
  lambda.coefficient += RationalMatrixFunction::pole(config, ExactMatrix::unit(2, 0, 0), 0, 1);
  EXPECT_FALSE(check_connection(lambda).valid);
  BasisCache cache(config);
  bool violated = false;
  for (int k = -1; k <= 1 && !violated; ++k)
    for (const auto& a : cache.at(k).elements)
      for (const auto& b : cache.at(-k).elements) {
        try {
          cocycle(lambda, a, b);
        } catch (const RegularityViolation&) {
          violated = true;
        }
      }
  EXPECT_TRUE(violated);
}

TEST(CocycleIdentity, Examples) {
  auto config = RandomConfig(Family::sl, 2, 0);
  auto lambda = construct_connection(config, 6);
  auto ez = RationalMatrixFunction::monomial(config, E(), 1);
  auto fz = RationalMatrixFunction::monomial(config, F(), -1);
  auto h = RationalMatrixFunction::monomial(config, H(), 0);
  EXPECT_TRUE(cocycle_identity_check(lambda, ez, fz, h).is_zero());
  EXPECT_TRUE(cocycle_identity_check(lambda, ez, RationalMatrixFunction(config), h).is_zero());
}

TEST(CocycleIdentity, RandomSl2Triples) {
  auto config = RandomConfig(Family::sl, 2, 1);
  auto lambda = construct_connection(config, 6);
  BasisCache cache(config);
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = testing::random_member(rng, cache, static_cast<int>(rng.uniform(-2, 2)));
    auto b = testing::random_member(rng, cache, static_cast<int>(rng.uniform(-2, 2)));
    auto c = testing::random_member(rng, cache, static_cast<int>(rng.uniform(-2, 2)));
    ASSERT_TRUE(cocycle_identity_check(lambda, a, b, c).is_zero()) << "trial " << trial;
  }
}

TEST(CocycleTable, LoopAlgebraPattern) {
  auto config = RandomConfig(Family::sl, 2, 0);
  auto lambda = construct_connection(config, 6);
  BasisCache cache(config);
  auto table = cocycle_table(cache, lambda, -2, 2);
  EXPECT_EQ(table.values.size(), 15u * 15u);
  for (const auto& e : table.values) {
    const auto& x = cache.at(e.k).elements[e.i];
    const auto& y = cache.at(e.l).elements[e.j];
    EXPECT_EQ(e.value, MonomialCocycle(x.poly_coeff(e.k), e.k, y.poly_coeff(e.l), e.l));
  }
}

}  // namespace
}  // namespace lax
