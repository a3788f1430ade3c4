#include <gtest/gtest.h>

#include <cfenv>
#include <cmath>

#include "counting_float.hpp"
#include "mw/eft.hpp"
#include "mw/rational.hpp"
#include "mw/rng.hpp"

namespace {

using mw::Rational;

Rational exact(double x) { return Rational::from_double(x); }

TEST(QuickTwoSum, ZeroSecondOperand) {
  const auto r = mw::quick_two_sum(3.5, 0.0);
  EXPECT_EQ(r.s, 3.5);
  EXPECT_EQ(r.e, 0.0);
}

TEST(QuickTwoSum, OperandBelowUlp) {
  const auto r = mw::quick_two_sum(1.0, 0x1p-60);
  EXPECT_EQ(r.s, 1.0);
  EXPECT_EQ(r.e, 0x1p-60);
}

TEST(QuickTwoSum, TieRoundsToEven) {
  const auto r = mw::quick_two_sum(0x1p53, 1.0);
  EXPECT_EQ(r.s, 0x1p53);
  EXPECT_EQ(r.e, 1.0);
}

TEST(TwoSum, ZeroFirstOperand) {
  const auto r = mw::two_sum(0.0, -2.25);
  EXPECT_EQ(r.s, -2.25);
  EXPECT_EQ(r.e, 0.0);
}

TEST(TwoSum, AgreesWithQuickTwoSumWhenOrdered) {
  const auto a = mw::two_sum(1.0, 0x1p-60);
  const auto b = mw::quick_two_sum(1.0, 0x1p-60);
  EXPECT_EQ(a.s, b.s);
  EXPECT_EQ(a.e, b.e);
}

TEST(TwoSum, SixOperations) {
  using mw::testing::CountingFloat;
  mw::testing::op_counts() = {};
  (void)mw::two_sum(CountingFloat(1.0), CountingFloat(0x1p-70));
  EXPECT_EQ(mw::testing::op_counts().total(), 6U);
}

TEST(TwoSum, ExactOverWideExponentRange) {
  mw::Rng rng(11);
  for (int t = 0; t < 20000; ++t) {
    const double a = std::ldexp(rng.uniform(-1.0, 1.0), static_cast<int>(rng.uniform_int(-500, 500)));
    const double b = std::ldexp(rng.uniform(-1.0, 1.0), static_cast<int>(rng.uniform_int(-500, 500)));
    const auto r = mw::two_sum(a, b);
    ASSERT_EQ(exact(r.s) + exact(r.e), exact(a) + exact(b)) << a << " + " << b;
    ASSERT_EQ(r.s, a + b);
  }
}

TEST(TwoProd, ExactProduct) {
  const auto r = mw::two_prod(1.7, 1.0);
  EXPECT_EQ(r.s, 1.7);
  EXPECT_EQ(r.e, 0.0);
}

TEST(TwoProd, SquareOfTwoToThirtyPlusOne) {
  const double x = 0x1p30 + 1.0;
  const auto r = mw::two_prod(x, x);
  EXPECT_EQ(r.s, 0x1p60 + 0x1p31);
  EXPECT_EQ(r.e, 1.0);
}

TEST(TwoProd, ExactOnRandomPairs) {
  mw::Rng rng(12);
  for (int t = 0; t < 20000; ++t) {
    const double a = std::ldexp(rng.uniform(1.0, 2.0), static_cast<int>(rng.uniform_int(-300, 300)));
    const double b = std::ldexp(rng.uniform(-2.0, -1.0), static_cast<int>(rng.uniform_int(-300, 300)));
    const auto r = mw::two_prod(a, b);
    ASSERT_EQ(exact(r.s) + exact(r.e), exact(a) * exact(b));
  }
}

TEST(RoundingMode, DetectsNonNearest) {
  EXPECT_TRUE(mw::round_to_nearest_active());
  EXPECT_NO_THROW(mw::require_round_to_nearest());
  std::fesetround(FE_UPWARD);
  const bool active = mw::round_to_nearest_active();
  std::fesetround(FE_TONEAREST);
  EXPECT_FALSE(active);
}

}  // namespace
