#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mw/rational.hpp"
#include "mw/rng.hpp"

namespace {

using mw::Rational;

TEST(Rational, BasicFractions) {
  EXPECT_EQ(Rational(1) / Rational(3) + Rational(1) / Rational(6), Rational(1) / Rational(2));
  EXPECT_EQ(Rational(-4) / Rational(6), Rational(-2) / Rational(3));
  EXPECT_LT(Rational(1) / Rational(3), Rational(1) / Rational(2));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, AddThenSubtractIsExact) {
  mw::Rng rng(2);
  for (int t = 0; t < 2000; ++t) {
    const Rational a = Rational::from_double(std::ldexp(rng.uniform(-1, 1), rng.uniform_int(-400, 400)));
    const Rational b = Rational::from_double(std::ldexp(rng.uniform(-1, 1), rng.uniform_int(-400, 400)));
    ASSERT_EQ((a + b) - b, a);
    ASSERT_TRUE((a + b).is_dyadic());
  }
}

TEST(Rational, FromDoubleToDouble) {
  mw::Rng rng(3);
  for (int t = 0; t < 2000; ++t) {
    const double x = std::ldexp(rng.uniform(-1, 1), static_cast<int>(rng.uniform_int(-1000, 1000)));
    ASSERT_EQ(Rational::from_double(x).to_double(), x);
  }
  EXPECT_THROW(Rational::from_double(std::numeric_limits<double>::infinity()), std::domain_error);
  EXPECT_THROW(Rational::from_double(std::nan("")), std::domain_error);
}

TEST(Rational, ToDoubleRoundsCorrectly) {
  EXPECT_EQ((Rational(1) / Rational(3)).to_double(), 1.0 / 3.0);
  EXPECT_EQ((Rational(2) / Rational(7)).to_double(), 2.0 / 7.0);
  // Halfway between 1 and 1 + 2^-52 rounds to even (1).
  EXPECT_EQ((Rational(1) + Rational::from_double(0x1p-53)).to_double(), 1.0);
  EXPECT_EQ((Rational(1) + Rational::from_double(0x1p-53) + Rational::from_double(0x1p-200)).to_double(),
            1.0 + 0x1p-52);
}

TEST(Rational, Decimal) {
  EXPECT_EQ(Rational::from_decimal("0.5"), Rational(1) / Rational(2));
  EXPECT_EQ(Rational::from_decimal("-1.25e2"), Rational(-125));
  EXPECT_EQ(Rational::from_decimal("+3E-1"), Rational(3) / Rational(10));
  EXPECT_THROW(Rational::from_decimal("1.2.3"), std::invalid_argument);
  EXPECT_THROW(Rational::from_decimal(""), std::invalid_argument);
  EXPECT_THROW(Rational::from_decimal("e5"), std::invalid_argument);
  EXPECT_EQ(Rational(1).to_decimal(4), "1.000e+00");
  EXPECT_EQ((Rational(-2) / Rational(3)).to_decimal(5), "-6.6667e-01");
  EXPECT_EQ(Rational(0).to_decimal(3), "0.00e+00");
  EXPECT_EQ(Rational::from_decimal("9.9996").to_decimal(4), "1.000e+01");
}

TEST(Rational, Log2AndLdexp) {
  EXPECT_EQ(Rational(8).floor_log2(), 3);
  EXPECT_EQ((Rational(1) / Rational(3)).floor_log2(), -2);
  EXPECT_EQ(Rational(3).ldexp(-5), Rational(3) / Rational(32));
  EXPECT_EQ((Rational(1) / Rational(3)).ldexp(2), Rational(4) / Rational(3));
}

}  // namespace
