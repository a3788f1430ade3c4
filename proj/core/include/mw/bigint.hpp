// Arbitrary-size unsigned integers for the verification oracle.
//
// Little-endian 64-bit limbs with no leading zero limbs; zero is the empty
// vector. Schoolbook multiplication and Knuth's algorithm D are plenty at the
// sizes the oracle uses (a few hundred to a few thousand bits).

#ifndef MW_BIGINT_HPP
#define MW_BIGINT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mw {

class BigUInt {
 public:
  using Limb = std::uint64_t;

  BigUInt() = default;
  BigUInt(std::uint64_t v) {  // NOLINT(google-explicit-constructor)
    if (v != 0) limbs_.push_back(v);
  }

  static BigUInt pow2(std::size_t k);
  static BigUInt pow10(unsigned k);
  /// Parses a run of decimal digits. Throws std::invalid_argument otherwise.
  static BigUInt from_decimal(std::string_view digits);

  bool is_zero() const noexcept { return limbs_.empty(); }
  std::size_t bit_length() const noexcept;
  /// Number of trailing zero bits; 0 for zero.
  std::size_t trailing_zeros() const noexcept;
  bool bit(std::size_t i) const noexcept;
  /// True when any of the low k bits is set.
  bool any_bits_below(std::size_t k) const noexcept;
  std::uint64_t low64() const noexcept { return limbs_.empty() ? 0 : limbs_[0]; }
  bool is_odd() const noexcept { return !limbs_.empty() && (limbs_[0] & 1U); }
  const std::vector<Limb>& limbs() const noexcept { return limbs_; }

  std::strong_ordering operator<=>(const BigUInt& o) const noexcept;
  bool operator==(const BigUInt& o) const noexcept { return limbs_ == o.limbs_; }

  BigUInt& operator+=(const BigUInt& o);
  /// Requires *this >= o.
  BigUInt& operator-=(const BigUInt& o);
  BigUInt& operator*=(const BigUInt& o);
  BigUInt& operator<<=(std::size_t k);
  BigUInt& operator>>=(std::size_t k);

  friend BigUInt operator+(BigUInt a, const BigUInt& b) { return a += b; }
  friend BigUInt operator-(BigUInt a, const BigUInt& b) { return a -= b; }
  friend BigUInt operator*(const BigUInt& a, const BigUInt& b);
  friend BigUInt operator<<(BigUInt a, std::size_t k) { return a <<= k; }
  friend BigUInt operator>>(BigUInt a, std::size_t k) { return a >>= k; }

  /// In-place multiply-add by single limbs: *this = *this * m + a.
  void mul_add_small(std::uint64_t m, std::uint64_t a);
  /// In-place division by a nonzero limb; returns the remainder.
  std::uint64_t div_small(std::uint64_t d);

  /// Quotient and remainder; throws std::domain_error when b is zero.
  static void divmod(const BigUInt& a, const BigUInt& b, BigUInt& q, BigUInt& r);

  std::string to_decimal() const;
  /// Nearest double (ties to even) to this integer.
  double to_double() const;

 private:
  void trim() noexcept;
  std::vector<Limb> limbs_;
};

BigUInt gcd(BigUInt a, BigUInt b);
/// floor(sqrt(n)).
BigUInt isqrt(const BigUInt& n);

}  // namespace mw

#endif  // MW_BIGINT_HPP
