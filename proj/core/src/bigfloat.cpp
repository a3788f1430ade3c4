#include "mw/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace mw {

namespace {

long len(const BigUInt& m) { return static_cast<long>(m.bit_length()); }

BigFloat from_int(long v, int bits) { return BigFloat::from_double(static_cast<double>(v), bits); }

// Fixed-point sum of sign * sum_k 1 / ((2k+1) x^(2k+1)) scaled by 2^frac,
// i.e. atan(1/x) (alternating) or atanh(1/x).
BigUInt arc_series(std::uint64_t x, std::size_t frac, bool alternating) {
  BigUInt pos, negsum;
  BigUInt term = BigUInt::pow2(frac);
  term.div_small(x);
  const std::uint64_t x2 = x * x;
  for (std::uint64_t k = 0; !term.is_zero(); ++k) {
    BigUInt t = term;
    t.div_small(2 * k + 1);
    if (alternating && (k & 1U)) negsum += t;
    else pos += t;
    term.div_small(x2);
  }
  return pos - negsum;
}

}  // namespace

BigFloat BigFloat::round(bool neg, BigUInt m, long e, int bits, bool sticky) {
  BigFloat r;
  if (m.is_zero()) return r;
  const long l = len(m);
  if (l > bits) {
    const auto drop = static_cast<std::size_t>(l - bits);
    BigUInt q = m >> drop;
    const bool half = m.bit(drop - 1);
    const bool st = sticky || m.any_bits_below(drop - 1);
    if (half && (st || q.is_odd())) {
      q += BigUInt(1);
      if (len(q) > bits) {
        q >>= 1;
        e += 1;
      }
    }
    m = std::move(q);
    e += static_cast<long>(drop);
  } else if (l < bits) {
    m <<= static_cast<std::size_t>(bits - l);
    e -= bits - l;
  }
  r.neg_ = neg;
  r.mant_ = std::move(m);
  r.exp_ = e;
  return r;
}

BigFloat BigFloat::from_double(double x, int bits) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite double");
  if (x == 0.0) return {};
  int e = 0;
  const double m = std::frexp(std::fabs(x), &e);
  return round(x < 0, BigUInt(static_cast<std::uint64_t>(std::ldexp(m, 53))), e - 53L, bits);
}

BigFloat BigFloat::from_rational(const Rational& q, int bits) {
  if (q.is_zero()) return {};
  BigUInt n = q.numerator(), d = q.denominator();
  const long s = bits + 3 - (len(n) - len(d));
  if (s >= 0) n <<= static_cast<std::size_t>(s);
  else d <<= static_cast<std::size_t>(-s);
  BigUInt quot, rem;
  BigUInt::divmod(n, d, quot, rem);
  return round(q.is_negative(), std::move(quot), -s, bits, !rem.is_zero());
}

BigFloat BigFloat::from_decimal(std::string_view text, int bits) {
  return from_rational(Rational::from_decimal(text), bits);
}

long BigFloat::ilogb() const {
  if (is_zero()) throw std::domain_error("ilogb of zero");
  return exp_ + len(mant_) - 1;
}

Rational BigFloat::to_rational() const {
  if (is_zero()) return {};
  if (exp_ >= 0) return Rational(neg_, mant_ << static_cast<std::size_t>(exp_), BigUInt(1));
  return Rational(neg_, mant_, BigUInt::pow2(static_cast<std::size_t>(-exp_)));
}

BigFloat BigFloat::operator-() const {
  BigFloat r = *this;
  if (!r.is_zero()) r.neg_ = !r.neg_;
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r = *this;
  r.neg_ = false;
  return r;
}

BigFloat BigFloat::ldexp(long k) const {
  BigFloat r = *this;
  if (!r.is_zero()) r.exp_ += k;
  return r;
}

std::strong_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (a.sign() != b.sign()) return a.sign() <=> b.sign();
  if (a.is_zero()) return std::strong_ordering::equal;
  std::strong_ordering mag = a.ilogb() <=> b.ilogb();
  if (mag == 0) {
    const long e = std::min(a.exponent(), b.exponent());
    mag = (a.mantissa() << static_cast<std::size_t>(a.exponent() - e)) <=>
          (b.mantissa() << static_cast<std::size_t>(b.exponent() - e));
  }
  return a.is_negative() ? 0 <=> mag : mag;
}

BigFloat add(const BigFloat& a, const BigFloat& b, int bits) {
  if (b.is_zero()) return BigFloat::round(a.is_negative(), a.mantissa(), a.exponent(), bits);
  if (a.is_zero()) return BigFloat::round(b.is_negative(), b.mantissa(), b.exponent(), bits);
  const BigFloat* hi = &a;
  const BigFloat* lo = &b;
  if (lo->ilogb() > hi->ilogb()) std::swap(hi, lo);

  BigUInt lm = lo->mantissa();
  long le = lo->exponent();
  // A far smaller operand only acts as a sticky bit; replace it by one.
  const long width = std::max<long>(len(hi->mantissa()), bits) + 8;
  if (lo->ilogb() < hi->ilogb() - width) {
    lm = BigUInt(1);
    le = hi->ilogb() - width;
  }
  const long e = std::min(hi->exponent(), le);
  BigUInt hm = hi->mantissa() << static_cast<std::size_t>(hi->exponent() - e);
  lm <<= static_cast<std::size_t>(le - e);
  if (hi->is_negative() == lo->is_negative())
    return BigFloat::round(hi->is_negative(), hm + lm, e, bits);
  if (hm >= lm) return BigFloat::round(hi->is_negative(), hm - lm, e, bits);
  return BigFloat::round(lo->is_negative(), lm - hm, e, bits);
}

BigFloat sub(const BigFloat& a, const BigFloat& b, int bits) { return add(a, -b, bits); }

BigFloat mul(const BigFloat& a, const BigFloat& b, int bits) {
  if (a.is_zero() || b.is_zero()) return {};
  return BigFloat::round(a.is_negative() != b.is_negative(), a.mantissa() * b.mantissa(),
                         a.exponent() + b.exponent(), bits);
}

BigFloat div(const BigFloat& a, const BigFloat& b, int bits) {
  if (b.is_zero()) throw std::domain_error("BigFloat division by zero");
  if (a.is_zero()) return {};
  const long s = std::max<long>(0, bits + 3 - (len(a.mantissa()) - len(b.mantissa())));
  BigUInt q, r;
  BigUInt::divmod(a.mantissa() << static_cast<std::size_t>(s), b.mantissa(), q, r);
  return BigFloat::round(a.is_negative() != b.is_negative(), std::move(q),
                         a.exponent() - b.exponent() - s, bits, !r.is_zero());
}

BigFloat bf_sqrt(const BigFloat& x, int bits) {
  if (x.is_negative()) throw std::domain_error("sqrt of a negative number");
  if (x.is_zero()) return {};
  long s = std::max<long>(0, 2L * bits + 6 - len(x.mantissa()));
  if (((x.exponent() - s) & 1L) != 0) ++s;
  const BigUInt m = x.mantissa() << static_cast<std::size_t>(s);
  BigUInt r = isqrt(m);
  const bool exact = r * r == m;
  return BigFloat::round(false, std::move(r), (x.exponent() - s) / 2, bits, !exact);
}

BigFloat bf_pi(int bits) {
  const auto frac = static_cast<std::size_t>(bits + 48);
  BigUInt v = arc_series(5, frac, true);
  v.mul_add_small(16, 0);
  BigUInt w = arc_series(239, frac, true);
  w.mul_add_small(4, 0);
  return BigFloat::round(false, v - w, -static_cast<long>(frac), bits);
}

BigFloat bf_ln2(int bits) {
  const auto frac = static_cast<std::size_t>(bits + 48);
  BigUInt v = arc_series(3, frac, false);
  return BigFloat::round(false, std::move(v), 1 - static_cast<long>(frac), bits);
}

BigFloat bf_exp(const BigFloat& x, int bits) {
  if (x.is_zero()) return BigFloat::from_double(1.0, bits);
  const double xd = x.to_double();
  if (std::fabs(xd) > 1e15) throw std::domain_error("exp argument out of range");
  const int wp = bits + 64;
  const long n = std::lround(xd / 0.69314718055994530942);
  const int lnbits = wp + 64;
  BigFloat r = sub(x, mul(from_int(n, lnbits), bf_ln2(lnbits), lnbits), wp);

  constexpr int kSquarings = 16;
  r = r.ldexp(-kSquarings);
  BigFloat sum = BigFloat::from_double(1.0, wp);
  BigFloat term = sum;
  for (long k = 1; !term.is_zero() && term.ilogb() > -wp - 4; ++k) {
    term = div(mul(term, r, wp), from_int(k, wp), wp);
    sum = add(sum, term, wp);
  }
  for (int i = 0; i < kSquarings; ++i) sum = mul(sum, sum, wp);
  sum = sum.ldexp(n);
  return BigFloat::round(false, sum.mantissa(), sum.exponent(), bits);
}

BigFloat bf_log(const BigFloat& x, int bits) {
  if (x.sign() <= 0) throw std::domain_error("log of a non-positive number");
  const int wp = bits + 64;
  long k = x.ilogb();
  BigFloat m = x.ldexp(-k);  // [1, 2)
  if (m.to_double() > 1.4142135623730951) {
    m = m.ldexp(-1);
    ++k;
  }
  const BigFloat one = BigFloat::from_double(1.0, wp);
  const BigFloat y = div(sub(m, one, wp), add(m, one, wp), wp);
  BigFloat sum;
  if (!y.is_zero()) {
    const BigFloat y2 = mul(y, y, wp);
    BigFloat pw = y;
    sum = y;
    for (long j = 1;; ++j) {
      pw = mul(pw, y2, wp);
      const BigFloat t = div(pw, from_int(2 * j + 1, wp), wp);
      if (t.is_zero() || t.ilogb() < y.ilogb() - wp - 4) break;
      sum = add(sum, t, wp);
    }
    sum = sum.ldexp(1);
  }
  const int lnbits = wp + 64;
  const BigFloat kl = mul(from_int(k, lnbits), bf_ln2(lnbits), lnbits);
  return add(kl, sum, bits);
}

namespace {

// Reduces x by multiples of pi/2 and returns (sin r, cos r, k mod 4).
struct Reduced {
  BigFloat s, c;
  long quadrant;
};

Reduced reduce_trig(const BigFloat& x, int wp) {
  const long extra = x.is_zero() ? 0 : std::max<long>(0, x.ilogb()) + 8;
  const int rp = wp + static_cast<int>(extra);
  const BigFloat half_pi = bf_pi(rp).ldexp(-1);
  const double qd = x.is_zero() ? 0.0 : div(x, half_pi, 64).to_double();
  const long k = std::lround(qd);
  const BigFloat r = sub(x, mul(from_int(k, rp), half_pi, rp), wp);

  BigFloat s = r, c = BigFloat::from_double(1.0, wp);
  if (!r.is_zero()) {
    const BigFloat r2 = mul(r, r, wp);
    BigFloat ts = r, tc = c;
    for (long j = 1; j < 10000; ++j) {
      ts = -div(mul(ts, r2, wp), from_int((2 * j) * (2 * j + 1), wp), wp);
      tc = -div(mul(tc, r2, wp), from_int((2 * j - 1) * (2 * j), wp), wp);
      const bool ds = ts.is_zero() || ts.ilogb() < r.ilogb() - wp - 4;
      const bool dc = tc.is_zero() || tc.ilogb() < -wp - 4;
      if (!ds) s = add(s, ts, wp);
      if (!dc) c = add(c, tc, wp);
      if (ds && dc) break;
    }
  }
  return {s, c, ((k % 4) + 4) % 4};
}

}  // namespace

BigFloat bf_cos(const BigFloat& x, int bits) {
  const Reduced t = reduce_trig(x, bits + 64);
  BigFloat v;
  switch (t.quadrant) {
    case 0: v = t.c; break;
    case 1: v = -t.s; break;
    case 2: v = -t.c; break;
    default: v = t.s; break;
  }
  return BigFloat::round(v.is_negative(), v.mantissa(), v.exponent(), bits);
}

BigFloat bf_sin(const BigFloat& x, int bits) {
  const Reduced t = reduce_trig(x, bits + 64);
  BigFloat v;
  switch (t.quadrant) {
    case 0: v = t.s; break;
    case 1: v = t.c; break;
    case 2: v = -t.s; break;
    default: v = -t.c; break;
  }
  return BigFloat::round(v.is_negative(), v.mantissa(), v.exponent(), bits);
}

BigFloat bf_pow(const BigFloat& x, long p, long q, int bits) {
  if (q <= 0) throw std::domain_error("pow exponent denominator must be positive");
  if (x.sign() <= 0) throw std::domain_error("pow of a non-positive base");
  const int wp = bits + 64;
  const BigFloat e = BigFloat::from_rational(Rational(p) / Rational(q), wp);
  return bf_exp(mul(e, bf_log(x, wp), wp), bits);
}

}  // namespace mw
