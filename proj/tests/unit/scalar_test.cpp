#include "laxalg/scalar.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "laxalg/errors.hpp"
#include "laxalg/random.hpp"
#include "test_support.hpp"

namespace lax {
namespace {

using testing::gi;
using testing::gq;

TEST(GaussianRational, ModulusSquaredIdentity) {
  GaussianRational a = gq(1, 2, 1, 1);
  GaussianRational b = gq(1, 2, -1, 1);
  EXPECT_EQ(gr_arith(a, b, ArithOp::mul), gq(5, 4));
  EXPECT_EQ(a * a.conj(), GaussianRational(a.norm()));
}

TEST(GaussianRational, AdditiveIdentity) {
  GaussianRational x = gq(-7, 3, 2, 5);
  EXPECT_EQ(gr_arith(GaussianRational(), x, ArithOp::add), x);
}

TEST(GaussianRational, SelfDivision) {
  GaussianRational x = gi(2, 3);
  EXPECT_EQ(gr_arith(x, x, ArithOp::div), gi(1));
}

TEST(GaussianRational, DivisionByZeroThrows) {
  EXPECT_THROW(gr_arith(gi(1), GaussianRational(), ArithOp::div), DivisionByZero);
  EXPECT_THROW(GaussianRational().inverse(), DivisionByZero);
  EXPECT_THROW(pow(GaussianRational(), -1), DivisionByZero);
}

TEST(GaussianRational, CanonicalFormMakesEqualityStructural) {
  GaussianRational a{Rational(2, 4), Rational(-3, 9)};
  a = a + GaussianRational();
  EXPECT_EQ(a, gq(1, 2, -1, 3));
  EXPECT_EQ(a.re().get_den(), 2);
}

TEST(GaussianRational, ISquaredIsMinusOne) {
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), gi(-1));
  EXPECT_EQ(pow(GaussianRational::i(), 4), gi(1));
  EXPECT_EQ(pow(gi(0, 2), -2), gq(-1, 4));
}

TEST(GaussianRational, QuotientTimesDivisorIsDividend) {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    GaussianRational a = testing::random_fraction(rng, 100);
    GaussianRational b = testing::random_fraction(rng, 100);
    if (b.is_zero()) continue;
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(gr_arith(gr_arith(a, b, ArithOp::sub), b, ArithOp::add), a);
  }
}

TEST(GaussianRational, FieldAxiomsOnRandomTriples) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    GaussianRational a = testing::random_fraction(rng, 30);
    GaussianRational b = testing::random_fraction(rng, 30);
    GaussianRational c = testing::random_fraction(rng, 30);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(ParseGaussian, Forms) {
  EXPECT_EQ(parse_gaussian("3"), gi(3));
  EXPECT_EQ(parse_gaussian("-2/6"), gq(-1, 3));
  EXPECT_EQ(parse_gaussian("i"), gi(0, 1));
  EXPECT_EQ(parse_gaussian("-i"), gi(0, -1));
  EXPECT_EQ(parse_gaussian("3i"), gi(0, 3));
  EXPECT_EQ(parse_gaussian("2/3 i"), gq(0, 1, 2, 3));
  EXPECT_EQ(parse_gaussian("1/2+3/4 i"), gq(1, 2, 3, 4));
  EXPECT_EQ(parse_gaussian("1-2 i"), gi(1, -2));
}

TEST(ParseGaussian, RejectsGarbage) {
  EXPECT_THROW(parse_gaussian(""), ParseError);
  EXPECT_THROW(parse_gaussian("abc"), ParseError);
  EXPECT_THROW(parse_gaussian("1/0"), ParseError);
  EXPECT_THROW(parse_gaussian("1+"), ParseError);
}

TEST(ParseGaussian, RoundTripsThroughToString) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    GaussianRational x = testing::random_fraction(rng, 50);
    EXPECT_EQ(parse_gaussian(to_string(x)), x) << to_string(x);
  }
}

TEST(ParseRational, UnicodeMinus) {
  EXPECT_EQ(parse_rational("−3/4"), Rational(-3, 4));
  EXPECT_EQ(to_string(Rational(6, 3)), "2");
}

TEST(GaussianRational, StreamsShorthand) {
  std::ostringstream os;
  os << gq(1, 2, -3, 1);
  EXPECT_EQ(parse_gaussian(os.str()), gq(1, 2, -3, 1));
}

}  // namespace
}  // namespace lax
