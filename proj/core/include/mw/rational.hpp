// Exact rational numbers for the verification oracle.
//
// Values coming from base floats are dyadic (power-of-two denominators);
// those take a shift-based fast path and never run a gcd. General
// denominators appear only through division.

#ifndef MW_RATIONAL_HPP
#define MW_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "mw/bigint.hpp"

namespace mw {

class Rational {
 public:
  Rational() : den_(1) {}
  Rational(std::int64_t v);  // NOLINT(google-explicit-constructor)
  Rational(bool negative, BigUInt num, BigUInt den);

  /// Exact value of a finite double. Throws std::domain_error for NaN/Inf.
  static Rational from_double(double x);
  /// Parses [+-]digits[.digits][(e|E)[+-]digits]. Throws std::invalid_argument.
  static Rational from_decimal(std::string_view text);

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_negative() const noexcept { return neg_; }
  int sign() const noexcept { return is_zero() ? 0 : (neg_ ? -1 : 1); }
  bool is_dyadic() const noexcept;
  const BigUInt& numerator() const noexcept { return num_; }
  const BigUInt& denominator() const noexcept { return den_; }

  Rational operator-() const;
  Rational abs() const;
  /// this * 2^k, exact.
  Rational ldexp(long k) const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws std::domain_error on a zero divisor.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Nearest double, ties to even. Results in the subnormal range may be
  /// double-rounded.
  double to_double() const;
  /// floor(log2 |x|); requires a nonzero value.
  long floor_log2() const;
  /// Scientific notation with `digits` significant digits, rounded to nearest.
  std::string to_decimal(int digits) const;

 private:
  void normalize();
  bool neg_ = false;
  BigUInt num_;
  BigUInt den_;
};

}  // namespace mw

#endif  // MW_RATIONAL_HPP
