#include <lonely/dyadic.hpp>
#include <lonely/oracle.hpp>

#include "brute_force.hpp"

#include <gtest/gtest.h>

using lonely::i64;
using lonely::Rational;
using lonely::SearchRange;
using lonely::SpeedVector;

namespace {
SpeedVector V(std::initializer_list<i64> v) { return SpeedVector::from_values(v); }
} // namespace

TEST(DyadicExponent, BitLengthAtPowersOfTwo) {
  EXPECT_EQ(lonely::dyadic_exponent(1), 1);
  EXPECT_EQ(lonely::dyadic_exponent(2), 2);
  EXPECT_EQ(lonely::dyadic_exponent(3), 3);
  EXPECT_EQ(lonely::dyadic_exponent(4), 3);
  EXPECT_EQ(lonely::dyadic_exponent(5), 4);
  EXPECT_EQ(lonely::dyadic_exponent(32), 6);
  EXPECT_EQ(lonely::dyadic_exponent(33), 7);
  EXPECT_THROW(lonely::dyadic_exponent(0), lonely::InvalidInput);
  for (i64 n1 = 2; n1 <= 4096; ++n1) {
    const int e = lonely::dyadic_exponent(n1);
    EXPECT_GE(i64{1} << (e - 1), n1);
    EXPECT_LT(i64{1} << (e - 2), n1);
  }
}

TEST(DyadicDenominator, Examples) {
  EXPECT_EQ(lonely::dyadic_denominator(V({4, 3, 2})), 128);
  EXPECT_EQ(lonely::dyadic_denominator(V({1})), 4);
  EXPECT_EQ(lonely::dyadic_denominator(V({5, 1})), 240);
  EXPECT_THROW(lonely::dyadic_denominator(V({i64{1} << 61, 1})), lonely::OverflowError);
}

TEST(FindDyadicTime, Examples) {
  const auto a = lonely::find_dyadic_time(V({4, 3, 2}));
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, (lonely::DyadicWitness{3, 128, 16, Rational(1, 8)}));
  const auto b = lonely::find_dyadic_time(V({1}));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->m, 2);
  EXPECT_EQ(b->time, Rational(1, 2));
  EXPECT_EQ(lonely::find_dyadic_time(V({5, 1}))->m, 80);
  EXPECT_EQ(lonely::find_dyadic_time(V({7, 2}))->m, 64);
  const auto c = lonely::find_dyadic_time(V({17, 16, 7, 6, 5, 4, 2}));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->exponent, 6);
  EXPECT_EQ(c->denominator, 8704);
  EXPECT_EQ(c->m, 612);
}

TEST(FirstGridTime, ReportsNoneOnCoarseGrid) {
  // Suitable times for (2,1) are exactly 1/3 and 2/3; quarters miss both.
  EXPECT_FALSE(lonely::first_grid_time(V({2, 1}), 4));
  EXPECT_FALSE(lonely::first_grid_time(V({2, 1}), 4, SearchRange::Half));
  EXPECT_EQ(lonely::first_grid_time(V({2, 1}), 3), 1);
  EXPECT_THROW(lonely::first_grid_time(V({2, 1}), 0), lonely::InvalidInput);
}

TEST(DyadicProperty, HalfRangeAgreesWithFullRange) {
  lonely::testing::for_each_vector(10, [](const SpeedVector& n) {
    const auto full = lonely::find_dyadic_time(n, SearchRange::Full);
    const auto half = lonely::find_dyadic_time(n, SearchRange::Half);
    ASSERT_EQ(full.has_value(), half.has_value()) << n.str();
    if (!full) return;
    EXPECT_EQ(*full, *half) << n.str();
    EXPECT_LE(half->m, (half->denominator + 1) / 2);
    EXPECT_TRUE(lonely::is_suitable(n, full->time));
    EXPECT_TRUE(lonely::is_suitable(n, Rational(full->denominator - full->m, full->denominator)));
  });
}

TEST(DyadicProperty, MinimalNumeratorAndCoprimeCoverage) {
  lonely::testing::for_each_vector(10, [](const SpeedVector& n) {
    const auto w = lonely::find_dyadic_time(n);
    if (lonely::gcd_of(n) == 1 && lonely::is_instance(n)) {
      ASSERT_TRUE(w) << n.str();
    }
    if (!w) return;
    for (i64 m = 1; m < w->m; ++m) EXPECT_FALSE(lonely::is_suitable(n, Rational(m, w->denominator)));
    EXPECT_GE(w->time, *lonely::earliest_suitable_time(n));
  });
}
