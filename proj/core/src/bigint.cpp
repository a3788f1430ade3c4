#include "mw/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace mw {

namespace {
using u128 = unsigned __int128;
}

void BigUInt::trim() noexcept {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUInt BigUInt::pow2(std::size_t k) {
  BigUInt r;
  r.limbs_.assign(k / 64 + 1, 0);
  r.limbs_[k / 64] = Limb{1} << (k % 64);
  return r;
}

BigUInt BigUInt::pow10(unsigned k) {
  BigUInt r(1);
  while (k >= 19) {
    r.mul_add_small(10000000000000000000ULL, 0);
    k -= 19;
  }
  std::uint64_t m = 1;
  while (k-- > 0) m *= 10;
  r.mul_add_small(m, 0);
  return r;
}

BigUInt BigUInt::from_decimal(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty digit string");
  BigUInt r;
  std::size_t i = 0;
  while (i < digits.size()) {
    std::uint64_t chunk = 0, scale = 1;
    std::size_t j = 0;
    for (; j < 19 && i < digits.size(); ++j, ++i) {
      const char c = digits[i];
      if (c < '0' || c > '9') throw std::invalid_argument("not a decimal digit");
      chunk = chunk * 10 + static_cast<std::uint64_t>(c - '0');
      scale *= 10;
    }
    r.mul_add_small(scale, chunk);
  }
  return r;
}

std::size_t BigUInt::bit_length() const noexcept {
  if (limbs_.empty()) return 0;
  return 64 * (limbs_.size() - 1) + static_cast<std::size_t>(std::bit_width(limbs_.back()));
}

std::size_t BigUInt::trailing_zeros() const noexcept {
  for (std::size_t i = 0; i < limbs_.size(); ++i)
    if (limbs_[i] != 0) return 64 * i + static_cast<std::size_t>(std::countr_zero(limbs_[i]));
  return 0;
}

bool BigUInt::bit(std::size_t i) const noexcept {
  const std::size_t w = i / 64;
  return w < limbs_.size() && ((limbs_[w] >> (i % 64)) & 1U);
}

bool BigUInt::any_bits_below(std::size_t k) const noexcept {
  const std::size_t full = std::min(k / 64, limbs_.size());
  for (std::size_t i = 0; i < full; ++i)
    if (limbs_[i] != 0) return true;
  if (full < limbs_.size() && k % 64 != 0) {
    const Limb mask = (Limb{1} << (k % 64)) - 1;
    if (limbs_[full] & mask) return true;
  }
  return false;
}

std::strong_ordering BigUInt::operator<=>(const BigUInt& o) const noexcept {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() <=> o.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;)
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
  return std::strong_ordering::equal;
}

BigUInt& BigUInt::operator+=(const BigUInt& o) {
  if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
  Limb carry = 0;
  std::size_t i = 0;
  for (; i < o.limbs_.size(); ++i) {
    const u128 s = static_cast<u128>(limbs_[i]) + o.limbs_[i] + carry;
    limbs_[i] = static_cast<Limb>(s);
    carry = static_cast<Limb>(s >> 64);
  }
  for (; carry != 0 && i < limbs_.size(); ++i) {
    limbs_[i] += carry;
    carry = limbs_[i] == 0 ? 1 : 0;
  }
  if (carry != 0) limbs_.push_back(carry);
  return *this;
}

BigUInt& BigUInt::operator-=(const BigUInt& o) {
  if (*this < o) throw std::domain_error("BigUInt subtraction underflow");
  Limb borrow = 0;
  std::size_t i = 0;
  for (; i < o.limbs_.size(); ++i) {
    const Limb a = limbs_[i];
    const Limb d = a - o.limbs_[i] - borrow;
    borrow = (a < o.limbs_[i]) || (a - o.limbs_[i] < borrow) ? 1 : 0;
    limbs_[i] = d;
  }
  for (; borrow != 0 && i < limbs_.size(); ++i) {
    borrow = limbs_[i] == 0 ? 1 : 0;
    limbs_[i] -= 1;
  }
  trim();
  return *this;
}

BigUInt operator*(const BigUInt& a, const BigUInt& b) {
  BigUInt r;
  if (a.is_zero() || b.is_zero()) return r;
  const auto& x = a.limbs_;
  const auto& y = b.limbs_;
  r.limbs_.assign(x.size() + y.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    BigUInt::Limb carry = 0;
    const u128 xi = x[i];
    for (std::size_t j = 0; j < y.size(); ++j) {
      const u128 t = xi * y[j] + r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<BigUInt::Limb>(t);
      carry = static_cast<BigUInt::Limb>(t >> 64);
    }
    r.limbs_[i + y.size()] = carry;
  }
  r.trim();
  return r;
}

BigUInt& BigUInt::operator*=(const BigUInt& o) { return *this = *this * o; }

BigUInt& BigUInt::operator<<=(std::size_t k) {
  if (limbs_.empty() || k == 0) return *this;
  const std::size_t words = k / 64;
  const unsigned bits = static_cast<unsigned>(k % 64);
  if (bits != 0) {
    Limb carry = 0;
    for (auto& l : limbs_) {
      const Limb next = l >> (64 - bits);
      l = (l << bits) | carry;
      carry = next;
    }
    if (carry != 0) limbs_.push_back(carry);
  }
  if (words != 0) limbs_.insert(limbs_.begin(), words, 0);
  return *this;
}

BigUInt& BigUInt::operator>>=(std::size_t k) {
  const std::size_t words = k / 64;
  if (words >= limbs_.size()) {
    limbs_.clear();
    return *this;
  }
  limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(words));
  const unsigned bits = static_cast<unsigned>(k % 64);
  if (bits != 0) {
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      const Limb hi = i + 1 < limbs_.size() ? limbs_[i + 1] << (64 - bits) : 0;
      limbs_[i] = (limbs_[i] >> bits) | hi;
    }
  }
  trim();
  return *this;
}

void BigUInt::mul_add_small(std::uint64_t m, std::uint64_t a) {
  Limb carry = a;
  for (auto& l : limbs_) {
    const u128 t = static_cast<u128>(l) * m + carry;
    l = static_cast<Limb>(t);
    carry = static_cast<Limb>(t >> 64);
  }
  if (carry != 0) limbs_.push_back(carry);
  trim();
}

std::uint64_t BigUInt::div_small(std::uint64_t d) {
  if (d == 0) throw std::domain_error("division by zero");
  u128 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    const u128 cur = (rem << 64) | limbs_[i];
    limbs_[i] = static_cast<Limb>(cur / d);
    rem = cur % d;
  }
  trim();
  return static_cast<std::uint64_t>(rem);
}

void BigUInt::divmod(const BigUInt& a, const BigUInt& b, BigUInt& q, BigUInt& r) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a < b) {
    q = BigUInt();
    r = a;
    return;
  }
  if (b.limbs_.size() == 1) {
    BigUInt quot = a;
    const std::uint64_t rem = quot.div_small(b.limbs_[0]);
    q = std::move(quot);
    r = BigUInt(rem);
    return;
  }

  // Knuth, TAOCP vol. 2, 4.3.1, algorithm D with base 2^64.
  const std::size_t n = b.limbs_.size();
  const std::size_t m = a.limbs_.size() - n;
  const unsigned s = static_cast<unsigned>(std::countl_zero(b.limbs_.back()));

  std::vector<Limb> vn(n), un(a.limbs_.size() + 1);
  for (std::size_t i = n; i-- > 0;) {
    vn[i] = b.limbs_[i] << s;
    if (s != 0 && i > 0) vn[i] |= b.limbs_[i - 1] >> (64 - s);
  }
  un[a.limbs_.size()] = s != 0 ? a.limbs_.back() >> (64 - s) : 0;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    un[i] = a.limbs_[i] << s;
    if (s != 0 && i > 0) un[i] |= a.limbs_[i - 1] >> (64 - s);
  }

  std::vector<Limb> qd(m + 1, 0);
  const u128 base = static_cast<u128>(1) << 64;
  for (std::size_t j = m + 1; j-- > 0;) {
    const u128 num = (static_cast<u128>(un[j + n]) << 64) | un[j + n - 1];
    u128 qhat = num / vn[n - 1];
    u128 rhat = num % vn[n - 1];
    while (qhat >= base ||
           qhat * vn[n - 2] > ((rhat << 64) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= base) break;
    }

    Limb carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const u128 p = qhat * vn[i] + carry;
      const Limb plo = static_cast<Limb>(p);
      carry = static_cast<Limb>(p >> 64);
      const Limb t = un[i + j];
      un[i + j] = t - plo;
      if (t < plo) ++carry;
    }
    const Limb top = un[j + n];
    un[j + n] = top - carry;
    if (top < carry) {
      --qhat;
      Limb c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const u128 sum = static_cast<u128>(un[i + j]) + vn[i] + c;
        un[i + j] = static_cast<Limb>(sum);
        c = static_cast<Limb>(sum >> 64);
      }
      un[j + n] += c;
    }
    qd[j] = static_cast<Limb>(qhat);
  }

  q.limbs_ = std::move(qd);
  q.trim();
  r.limbs_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    r.limbs_[i] = un[i] >> s;
    if (s != 0) r.limbs_[i] |= un[i + 1] << (64 - s);
  }
  r.trim();
}

std::string BigUInt::to_decimal() const {
  if (is_zero()) return "0";
  BigUInt t = *this;
  std::vector<std::uint64_t> chunks;
  while (!t.is_zero()) chunks.push_back(t.div_small(10000000000000000000ULL));
  std::string out = std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out.append(19 - part.size(), '0');
    out += part;
  }
  return out;
}

double BigUInt::to_double() const {
  const std::size_t len = bit_length();
  if (len <= 53) return static_cast<double>(low64());
  const std::size_t drop = len - 53;
  BigUInt top = *this >> drop;
  std::uint64_t mant = top.low64();
  const bool half = bit(drop - 1);
  const bool sticky = any_bits_below(drop - 1);
  if (half && (sticky || (mant & 1U))) ++mant;
  return std::ldexp(static_cast<double>(mant), static_cast<int>(drop));
}

BigUInt gcd(BigUInt a, BigUInt b) {
  while (!b.is_zero()) {
    BigUInt q, r;
    BigUInt::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigUInt isqrt(const BigUInt& n) {
  if (n.is_zero()) return n;
  BigUInt x = BigUInt::pow2((n.bit_length() + 1) / 2);
  for (;;) {
    BigUInt q, r;
    BigUInt::divmod(n, x, q, r);
    BigUInt y = (x + q) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

}  // namespace mw
