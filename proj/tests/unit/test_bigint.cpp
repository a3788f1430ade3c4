#include <gtest/gtest.h>

#include <stdexcept>

#include "mw/bigint.hpp"
#include "mw/rng.hpp"

namespace {

using mw::BigUInt;

TEST(BigUInt, DecimalRoundTrip) {
  const std::string s = "123456789012345678901234567890123456789012345678901234567890";
  EXPECT_EQ(BigUInt::from_decimal(s).to_decimal(), s);
  EXPECT_EQ(BigUInt().to_decimal(), "0");
  EXPECT_THROW(BigUInt::from_decimal("12a"), std::invalid_argument);
}

TEST(BigUInt, Pow2AndShifts) {
  const BigUInt p = BigUInt::pow2(200);
  EXPECT_EQ(p.bit_length(), 201U);
  EXPECT_EQ(p.trailing_zeros(), 200U);
  EXPECT_EQ(p >> 200, BigUInt(1));
  EXPECT_EQ(BigUInt(3) << 130 >> 129, BigUInt(6));
  EXPECT_TRUE(p.bit(200));
  EXPECT_FALSE(p.any_bits_below(200));
  EXPECT_TRUE((p + BigUInt(1)).any_bits_below(1));
}

TEST(BigUInt, Pow10) {
  EXPECT_EQ(BigUInt::pow10(30).to_decimal(), "1" + std::string(30, '0'));
}

TEST(BigUInt, ArithmeticIdentities) {
  mw::Rng rng(1);
  for (int t = 0; t < 300; ++t) {
    BigUInt a(rng.next()), b(rng.next() | 1U);
    for (int i = 0; i < t % 7; ++i) a = a * BigUInt(rng.next()) + BigUInt(rng.next());
    for (int i = 0; i < t % 4; ++i) b = b * BigUInt(rng.next()) + BigUInt(1);
    BigUInt q, r;
    BigUInt::divmod(a, b, q, r);
    ASSERT_EQ(q * b + r, a);
    ASSERT_LT(r, b);
    ASSERT_EQ((a + b) - b, a);
  }
}

TEST(BigUInt, DivByZeroThrows) {
  BigUInt q, r;
  EXPECT_THROW(BigUInt::divmod(BigUInt(5), BigUInt(), q, r), std::domain_error);
}

TEST(BigUInt, SmallOps) {
  BigUInt x(10);
  x.mul_add_small(10, 7);
  EXPECT_EQ(x, BigUInt(107));
  EXPECT_EQ(x.div_small(10), 7U);
  EXPECT_EQ(x, BigUInt(10));
}

TEST(BigUInt, GcdAndIsqrt) {
  EXPECT_EQ(gcd(BigUInt(84), BigUInt(36)), BigUInt(12));
  EXPECT_EQ(isqrt(BigUInt(99)), BigUInt(9));
  EXPECT_EQ(isqrt(BigUInt(100)), BigUInt(10));
  const BigUInt big = BigUInt::pow2(300);
  EXPECT_EQ(isqrt(big), BigUInt::pow2(150));
  EXPECT_EQ(isqrt(big - BigUInt(1)), BigUInt::pow2(150) - BigUInt(1));
}

TEST(BigUInt, ToDoubleRoundsToEven) {
  EXPECT_EQ((BigUInt::pow2(53) + BigUInt(1)).to_double(), 0x1p53);
  EXPECT_EQ((BigUInt::pow2(53) + BigUInt(3)).to_double(), 0x1p53 + 4.0);
  EXPECT_EQ(BigUInt::pow2(100).to_double(), 0x1p100);
}

}  // namespace
