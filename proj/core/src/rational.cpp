#include "mw/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace mw {

namespace {

struct Signed {
  bool neg;
  BigUInt mag;
};

Signed signed_add(bool na, const BigUInt& a, bool nb, const BigUInt& b) {
  if (na == nb) return {na, a + b};
  if (a >= b) return {na, a - b};
  return {nb, b - a};
}

std::size_t log2_exact(const BigUInt& pow2) { return pow2.bit_length() - 1; }

// round-half-even of n / d
BigUInt div_round(const BigUInt& n, const BigUInt& d) {
  BigUInt q, r;
  BigUInt::divmod(n, d, q, r);
  const BigUInt twice = r << 1;
  const auto c = twice <=> d;
  if (c > 0 || (c == 0 && q.is_odd())) q += BigUInt(1);
  return q;
}

}  // namespace

Rational::Rational(std::int64_t v) : neg_(v < 0), den_(1) {
  const std::uint64_t mag = v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v)
                                  : static_cast<std::uint64_t>(v);
  num_ = BigUInt(mag);
}

Rational::Rational(bool negative, BigUInt num, BigUInt den)
    : neg_(negative), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

bool Rational::is_dyadic() const noexcept {
  return den_.bit_length() - 1 == den_.trailing_zeros();
}

void Rational::normalize() {
  if (num_.is_zero()) {
    neg_ = false;
    den_ = BigUInt(1);
    return;
  }
  if (is_dyadic()) {
    const std::size_t k = std::min(num_.trailing_zeros(), log2_exact(den_));
    if (k != 0) {
      num_ >>= k;
      den_ >>= k;
    }
    return;
  }
  BigUInt g = gcd(num_, den_);
  if (g != BigUInt(1)) {
    BigUInt q, r;
    BigUInt::divmod(num_, g, q, r);
    num_ = std::move(q);
    BigUInt::divmod(den_, g, q, r);
    den_ = std::move(q);
  }
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite double has no rational value");
  Rational r;
  if (x == 0.0) return r;
  int e = 0;
  const double m = std::frexp(std::fabs(x), &e);  // m in [0.5, 1)
  const auto mant = static_cast<std::uint64_t>(std::ldexp(m, 53));
  const long exp2 = static_cast<long>(e) - 53;
  r.neg_ = x < 0;
  r.num_ = BigUInt(mant);
  r.den_ = BigUInt(1);
  if (exp2 >= 0) {
    r.num_ <<= static_cast<std::size_t>(exp2);
  } else {
    r.den_ = BigUInt::pow2(static_cast<std::size_t>(-exp2));
  }
  r.normalize();
  return r;
}

Rational Rational::from_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  std::string digits;
  std::size_t int_digits = 0, frac_digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    digits += text[i++];
    ++int_digits;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      digits += text[i++];
      ++frac_digits;
    }
  }
  if (int_digits + frac_digits == 0) throw std::invalid_argument("no digits in number");
  long exp10 = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) eneg = text[i++] == '-';
    const std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      exp10 = exp10 * 10 + (text[i++] - '0');
      if (exp10 > 100000) throw std::invalid_argument("exponent out of range");
    }
    if (i == start) throw std::invalid_argument("missing exponent digits");
    if (eneg) exp10 = -exp10;
  }
  if (i != text.size()) throw std::invalid_argument("trailing characters in number");

  exp10 -= static_cast<long>(frac_digits);
  BigUInt num = BigUInt::from_decimal(digits);
  BigUInt den(1);
  if (exp10 >= 0) num *= BigUInt::pow10(static_cast<unsigned>(exp10));
  else den = BigUInt::pow10(static_cast<unsigned>(-exp10));
  return Rational(negative, std::move(num), std::move(den));
}

Rational Rational::operator-() const {
  Rational r = *this;
  if (!r.is_zero()) r.neg_ = !r.neg_;
  return r;
}

Rational Rational::abs() const {
  Rational r = *this;
  r.neg_ = false;
  return r;
}

Rational Rational::ldexp(long k) const {
  if (is_zero() || k == 0) return *this;
  Rational r = *this;
  if (k > 0) r.num_ <<= static_cast<std::size_t>(k);
  else r.den_ <<= static_cast<std::size_t>(-k);
  r.normalize();
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Rational r;
  if (a.is_dyadic() && b.is_dyadic()) {
    const std::size_t ea = log2_exact(a.den_), eb = log2_exact(b.den_);
    const std::size_t e = std::max(ea, eb);
    auto s = signed_add(a.neg_, a.num_ << (e - ea), b.neg_, b.num_ << (e - eb));
    r.neg_ = s.neg;
    r.num_ = std::move(s.mag);
    r.den_ = a.den_.bit_length() >= b.den_.bit_length() ? a.den_ : b.den_;
  } else if (a.den_ == b.den_) {
    auto s = signed_add(a.neg_, a.num_, b.neg_, b.num_);
    r.neg_ = s.neg;
    r.num_ = std::move(s.mag);
    r.den_ = a.den_;
  } else {
    auto s = signed_add(a.neg_, a.num_ * b.den_, b.neg_, b.num_ * a.den_);
    r.neg_ = s.neg;
    r.num_ = std::move(s.mag);
    r.den_ = a.den_ * b.den_;
  }
  r.normalize();
  return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  Rational r;
  if (a.is_zero() || b.is_zero()) return r;
  r.neg_ = a.neg_ != b.neg_;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  Rational r;
  if (a.is_zero()) return r;
  r.neg_ = a.neg_ != b.neg_;
  r.num_ = a.num_ * b.den_;
  r.den_ = a.den_ * b.num_;
  r.normalize();
  return r;
}

bool operator==(const Rational& a, const Rational& b) noexcept {
  return a.neg_ == b.neg_ && a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.sign() != b.sign()) return a.sign() <=> b.sign();
  if (a.is_zero()) return std::strong_ordering::equal;
  std::strong_ordering mag = std::strong_ordering::equal;
  if (a.is_dyadic() && b.is_dyadic()) {
    const std::size_t ea = log2_exact(a.den_), eb = log2_exact(b.den_);
    const std::size_t e = std::max(ea, eb);
    mag = (a.num_ << (e - ea)) <=> (b.num_ << (e - eb));
  } else {
    mag = (a.num_ * b.den_) <=> (b.num_ * a.den_);
  }
  if (a.neg_) return 0 <=> mag;
  return mag;
}

long Rational::floor_log2() const {
  if (is_zero()) throw std::domain_error("log2 of zero");
  const long l = static_cast<long>(num_.bit_length()) - static_cast<long>(den_.bit_length());
  bool ge;
  if (l >= 0) ge = num_ >= (den_ << static_cast<std::size_t>(l));
  else ge = (num_ << static_cast<std::size_t>(-l)) >= den_;
  return ge ? l : l - 1;
}

double Rational::to_double() const {
  if (is_zero()) return 0.0;
  // Scale so the integer quotient carries at least 55 bits, then round to 53.
  const long l = static_cast<long>(num_.bit_length()) - static_cast<long>(den_.bit_length());
  const long shift = 55 - l;
  BigUInt n = num_, d = den_;
  if (shift >= 0) n <<= static_cast<std::size_t>(shift);
  else d <<= static_cast<std::size_t>(-shift);
  BigUInt q, r;
  BigUInt::divmod(n, d, q, r);
  const std::size_t qb = q.bit_length();
  const std::size_t drop = qb - 53;
  std::uint64_t mant = (q >> drop).low64();
  const bool half = q.bit(drop - 1);
  const bool sticky = q.any_bits_below(drop - 1) || !r.is_zero();
  if (half && (sticky || (mant & 1U))) ++mant;
  const long e2 = static_cast<long>(drop) - shift;
  if (e2 > std::numeric_limits<int>::max() / 2) return neg_ ? -HUGE_VAL : HUGE_VAL;
  if (e2 < std::numeric_limits<int>::min() / 2) return neg_ ? -0.0 : 0.0;
  const double v = std::ldexp(static_cast<double>(mant), static_cast<int>(e2));
  return neg_ ? -v : v;
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  const auto du = static_cast<unsigned>(digits);
  if (is_zero()) {
    std::string s = "0";
    if (digits > 1) s += "." + std::string(du - 1, '0');
    return s + "e+00";
  }
  long e10 = static_cast<long>(std::floor(static_cast<double>(floor_log2()) * 0.30102999566398120));
  const BigUInt lo = BigUInt::pow10(du - 1);
  const BigUInt hi = BigUInt::pow10(du);
  BigUInt n;
  for (int guard = 0; guard < 8; ++guard) {
    const long k = static_cast<long>(digits) - 1 - e10;
    if (k >= 0) n = div_round(num_ * BigUInt::pow10(static_cast<unsigned>(k)), den_);
    else n = div_round(num_, den_ * BigUInt::pow10(static_cast<unsigned>(-k)));
    if (n >= hi) {
      ++e10;
    } else if (n < lo) {
      --e10;
    } else {
      break;
    }
  }
  std::string ds = n.to_decimal();
  std::string out = neg_ ? "-" : "";
  out += ds[0];
  if (ds.size() > 1) {
    out += '.';
    out.append(ds, 1, std::string::npos);
  }
  out += 'e';
  out += e10 < 0 ? '-' : '+';
  const long ae = e10 < 0 ? -e10 : e10;
  if (ae < 10) out += '0';
  out += std::to_string(ae);
  return out;
}

}  // namespace mw
