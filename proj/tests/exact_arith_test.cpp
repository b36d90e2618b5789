#include <lonely/exact_arith.hpp>

#include <gtest/gtest.h>

#include <random>

using lonely::i64;
using lonely::Rational;

TEST(RationalTest, StoredReduced) {
  Rational q(6, -8);
  EXPECT_EQ(q.num(), -3);
  EXPECT_EQ(q.den(), 4);
  EXPECT_EQ(Rational(0, 5).den(), 1);
}

TEST(RationalTest, ZeroDenominatorRejected) { EXPECT_THROW(Rational(1, 0), lonely::InvalidInput); }

TEST(RationalTest, Arithmetic) {
  EXPECT_EQ(Rational(1, 6) + Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(1, 6) - Rational(1, 3), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_THROW(Rational(1) / Rational(0), lonely::InvalidInput);
}

TEST(RationalTest, FloorAndCeilOfNegatives) {
  EXPECT_EQ(Rational(-7, 3).floor(), -3);
  EXPECT_EQ(Rational(-7, 3).ceil(), -2);
  EXPECT_EQ(Rational(7, 3).floor(), 2);
  EXPECT_EQ(Rational(6, 3).ceil(), 2);
}

TEST(RationalTest, OverflowIsReportedNotWrapped) {
  const Rational big(INT64_MAX / 2 + 1);
  EXPECT_THROW(big + big, lonely::OverflowError);
  EXPECT_THROW(big * Rational(3), lonely::OverflowError);
  EXPECT_THROW(lonely::checked::mul(INT64_MAX, 2), lonely::OverflowError);
  EXPECT_THROW(lonely::checked::add(INT64_MAX, 1), lonely::OverflowError);
  // Reduction happens before narrowing, so large cancelling products are fine.
  EXPECT_EQ(Rational(INT64_MAX, 3) * Rational(3, INT64_MAX), Rational(1));
}

TEST(RationalTest, ParseAndFormat) {
  EXPECT_EQ(Rational::parse("3/16"), Rational(3, 16));
  EXPECT_EQ(Rational::parse("6/32"), Rational(3, 16));
  EXPECT_EQ(Rational::parse("5"), Rational(5));
  EXPECT_EQ(Rational::parse("-2/4"), Rational(-1, 2));
  EXPECT_EQ(Rational(5).str(), "5/1");
  EXPECT_EQ(Rational(3, 16).str(), "3/16");
  EXPECT_THROW(Rational::parse("1/0"), lonely::InvalidInput);
  EXPECT_THROW(Rational::parse("x/2"), lonely::InvalidInput);
  EXPECT_THROW(Rational::parse(""), lonely::InvalidInput);
  EXPECT_THROW(Rational::parse("1/2/3"), lonely::InvalidInput);
}

TEST(FracTest, Examples) {
  EXPECT_EQ(lonely::frac(Rational(7, 3)), Rational(1, 3));
  EXPECT_EQ(lonely::frac(Rational(5)), Rational(0));
  EXPECT_EQ(lonely::frac(Rational(9, 16)), Rational(9, 16));
  EXPECT_THROW(lonely::frac(Rational(-1, 2)), lonely::InvalidInput);
}

TEST(ModIntTest, Examples) {
  EXPECT_EQ(lonely::mod_int(20, 16), 4);
  EXPECT_EQ(lonely::mod_int(0, 7), 0);
  EXPECT_EQ(lonely::mod_int(33, 6), 3);
  EXPECT_THROW(lonely::mod_int(3, 0), lonely::InvalidInput);
}

TEST(RationalProperty, FracBoundsAndIntegerRemainder) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> num(0, 100000), den(1, 997);
  for (int i = 0; i < 2000; ++i) {
    const Rational q(num(rng), den(rng));
    const Rational r = lonely::frac(q);
    EXPECT_GE(r, Rational(0));
    EXPECT_LT(r, Rational(1));
    EXPECT_TRUE((q - r).is_integer());
  }
}

TEST(RationalProperty, ReductionIdempotentAndOrderMatchesCrossMultiplication) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<i64> num(-5000, 5000), den(1, 500);
  for (int i = 0; i < 2000; ++i) {
    const i64 a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational x(a, b), y(c, d);
    const Rational doubled(2 * a, 2 * b);
    EXPECT_EQ(doubled.num(), x.num());
    EXPECT_EQ(doubled.den(), x.den());
    EXPECT_EQ(x < y, a * d < c * b);
    EXPECT_EQ(x == y, a * d == c * b);
  }
}
