// Fixed-precision binary floating point for the oracle's transcendental and
// high-precision paths.
//
// A value is (-1)^neg * mant * 2^exp with mant either zero or exactly `bits`
// bits long. Every operation rounds to nearest, ties to even, at the
// requested precision (default 300). There is no overflow or underflow: the
// exponent is a plain long.

#ifndef MW_BIGFLOAT_HPP
#define MW_BIGFLOAT_HPP

#include <string>

#include "mw/bigint.hpp"
#include "mw/rational.hpp"

namespace mw {

inline constexpr int kOracleBits = 300;

class BigFloat {
 public:
  BigFloat() = default;
  static BigFloat from_double(double x, int bits = kOracleBits);
  static BigFloat from_rational(const Rational& q, int bits = kOracleBits);
  /// Decimal string, correctly rounded. Throws std::invalid_argument.
  static BigFloat from_decimal(std::string_view text, int bits = kOracleBits);
  /// Rounds (neg, m * 2^e) to `bits`; `sticky` marks nonzero bits below m.
  static BigFloat round(bool neg, BigUInt m, long e, int bits, bool sticky = false);

  bool is_zero() const noexcept { return mant_.is_zero(); }
  bool is_negative() const noexcept { return neg_; }
  int sign() const noexcept { return is_zero() ? 0 : (neg_ ? -1 : 1); }
  const BigUInt& mantissa() const noexcept { return mant_; }
  long exponent() const noexcept { return exp_; }
  /// floor(log2 |x|); requires a nonzero value.
  long ilogb() const;

  Rational to_rational() const;
  double to_double() const { return to_rational().to_double(); }
  std::string to_decimal(int digits) const { return to_rational().to_decimal(digits); }

  BigFloat operator-() const;
  BigFloat abs() const;
  BigFloat ldexp(long k) const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) noexcept = default;
  friend std::strong_ordering operator<=>(const BigFloat& a, const BigFloat& b);

 private:
  bool neg_ = false;
  BigUInt mant_;
  long exp_ = 0;
};

BigFloat add(const BigFloat& a, const BigFloat& b, int bits = kOracleBits);
BigFloat sub(const BigFloat& a, const BigFloat& b, int bits = kOracleBits);
BigFloat mul(const BigFloat& a, const BigFloat& b, int bits = kOracleBits);
/// Throws std::domain_error on a zero divisor.
BigFloat div(const BigFloat& a, const BigFloat& b, int bits = kOracleBits);

inline BigFloat operator+(const BigFloat& a, const BigFloat& b) { return add(a, b); }
inline BigFloat operator-(const BigFloat& a, const BigFloat& b) { return sub(a, b); }
inline BigFloat operator*(const BigFloat& a, const BigFloat& b) { return mul(a, b); }
inline BigFloat operator/(const BigFloat& a, const BigFloat& b) { return div(a, b); }

// Elementary functions. sqrt is correctly rounded; the others are evaluated
// with 64 guard bits and then rounded, so they are accurate to about one ulp.
// Domain errors throw std::domain_error.
BigFloat bf_sqrt(const BigFloat& x, int bits = kOracleBits);
BigFloat bf_pi(int bits = kOracleBits);
BigFloat bf_ln2(int bits = kOracleBits);
BigFloat bf_exp(const BigFloat& x, int bits = kOracleBits);
BigFloat bf_log(const BigFloat& x, int bits = kOracleBits);
BigFloat bf_cos(const BigFloat& x, int bits = kOracleBits);
BigFloat bf_sin(const BigFloat& x, int bits = kOracleBits);
/// x^(p/q) for x > 0, q > 0.
BigFloat bf_pow(const BigFloat& x, long p, long q, int bits = kOracleBits);

}  // namespace mw

#endif  // MW_BIGFLOAT_HPP
