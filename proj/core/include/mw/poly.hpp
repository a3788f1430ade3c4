// Polynomial evaluation: Horner, Estrin and lane-batched Estrin, at real and
// complex arguments.

#ifndef MW_POLY_HPP
#define MW_POLY_HPP

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mw/arith.hpp"
#include "mw/batch.hpp"
#include "mw/complex.hpp"
#include "mw/convert.hpp"
#include "mw/oracle.hpp"
#include "mw/rng.hpp"

namespace mw {

/// p(x) = sum a[i] x^i; a[i] multiplies x^i.
template <int K>
struct MWPolynomial {
  std::vector<MultiWord<K>> a;

  MWPolynomial() = default;
  explicit MWPolynomial(std::vector<MultiWord<K>> coeffs) : a(std::move(coeffs)) {
    if (a.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
  }
  std::size_t degree() const noexcept { return a.empty() ? 0 : a.size() - 1; }
};

enum class EvalMethod { Horner, Estrin };

namespace detail {

template <int K, class T>
MultiWord<K, T> promote(const MultiWord<K>& x) {
  if constexpr (std::is_same_v<T, double>) {
    return x;
  } else {
    MultiWord<K, T> r;
    for (int c = 0; c < K; ++c) r[c] = T(x[c]);
    return r;
  }
}

template <int K, class T>
ComplexMW<K, T> promote_real(const MultiWord<K>& x) {
  return {promote<K, T>(x), MultiWord<K, T>{}};
}

// Estrin over any value type with add and mul: pad to a power of two with
// zeros, then repeatedly replace pairs (e, o) by e + o * x and square x.
template <class Val, class Add, class Mul>
Val estrin_reduce(std::vector<Val> v, Val x, Add&& addf, Mul&& mulf) {
  std::size_t len = 1;
  while (len < v.size()) len *= 2;
  v.resize(len, Val{});
  while (len > 1) {
    for (std::size_t i = 0; i < len / 2; ++i) v[i] = addf(mulf(v[2 * i + 1], x), v[2 * i]);
    len /= 2;
    if (len > 1) x = mulf(x, x);
  }
  return v[0];
}

}  // namespace detail

/// b = a[n]; b = b * x + a[i] for i = n-1 .. 0.
template <Variant V, int K, class T>
MultiWord<K, T> horner_eval(const MWPolynomial<K>& p, const MultiWord<K, T>& x) {
  auto b = detail::promote<K, T>(p.a.back());
  for (std::size_t i = p.a.size() - 1; i-- > 0;)
    b = add<V>(mul<V>(b, x), detail::promote<K, T>(p.a[i]));
  return b;
}

template <Variant V, int K, class T>
MultiWord<K, T> estrin_eval(const MWPolynomial<K>& p, const MultiWord<K, T>& x) {
  std::vector<MultiWord<K, T>> v;
  v.reserve(p.a.size());
  for (const auto& c : p.a) v.push_back(detail::promote<K, T>(c));
  return detail::estrin_reduce(
      std::move(v), x, [](const auto& a, const auto& b) { return add<V>(a, b); },
      [](const auto& a, const auto& b) { return mul<V>(a, b); });
}

template <int K>
MultiWord<K> horner_eval(const MWPolynomial<K>& p, const MultiWord<K>& x, Variant v) {
  return with_variant(v, [&]<Variant V>() { return horner_eval<V>(p, x); });
}

template <int K>
MultiWord<K> estrin_eval(const MWPolynomial<K>& p, const MultiWord<K>& x, Variant v) {
  return with_variant(v, [&]<Variant V>() { return estrin_eval<V>(p, x); });
}

/// Estrin on W arguments at once; lane i equals estrin_eval at lane i bitwise.
template <int K, int W>
LaneBatch<K, W> estrin_eval_batched(const MWPolynomial<K>& p, const LaneBatch<K, W>& xs,
                                    Variant v) {
  return with_variant(v, [&]<Variant V>() { return estrin_eval<V>(p, xs); });
}

template <int K, int W>
LaneBatch<K, W> horner_eval_batched(const MWPolynomial<K>& p, const LaneBatch<K, W>& xs,
                                    Variant v) {
  return with_variant(v, [&]<Variant V>() { return horner_eval<V>(p, xs); });
}

/// Real-coefficient polynomial at a complex argument (3M products).
template <Variant V, int K, class T>
ComplexMW<K, T> eval_complex(const MWPolynomial<K>& p, const ComplexMW<K, T>& z,
                             EvalMethod method) {
  if (method == EvalMethod::Horner) {
    auto b = detail::promote_real<K, T>(p.a.back());
    for (std::size_t i = p.a.size() - 1; i-- > 0;)
      b = cadd<V>(cmul<V>(b, z), detail::promote_real<K, T>(p.a[i]));
    return b;
  }
  std::vector<ComplexMW<K, T>> v;
  v.reserve(p.a.size());
  for (const auto& c : p.a) v.push_back(detail::promote_real<K, T>(c));
  return detail::estrin_reduce(
      std::move(v), z, [](const auto& a, const auto& b) { return cadd<V>(a, b); },
      [](const auto& a, const auto& b) { return cmul<V>(a, b); });
}

template <int K>
ComplexMW<K> eval_complex(const MWPolynomial<K>& p, const ComplexMW<K>& z, EvalMethod method,
                          Variant v) {
  return with_variant(v, [&]<Variant V>() { return eval_complex<V>(p, z, method); });
}

/// Coefficients uniform in [-1, 1) as base floats; the leading one is
/// redrawn until nonzero.
template <int K>
MWPolynomial<K> random_polynomial(std::size_t degree, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<MultiWord<K>> a(degree + 1);
  for (auto& c : a) c = MultiWord<K>::from_base(rng.uniform(-1.0, 1.0));
  while (a.back()[0] == 0.0) a.back() = MultiWord<K>::from_base(rng.uniform(-1.0, 1.0));
  return MWPolynomial<K>(std::move(a));
}

template <int K>
BigFloat oracle_eval(const MWPolynomial<K>& p, const MultiWord<K>& x) {
  std::vector<BigFloat> c;
  for (const auto& a : p.a) c.push_back(to_bigfloat(a));
  return oracle_horner(c, to_bigfloat(x));
}

template <int K>
BigComplex oracle_eval(const MWPolynomial<K>& p, const ComplexMW<K>& z) {
  std::vector<BigComplex> c;
  for (const auto& a : p.a) c.push_back({to_bigfloat(a), BigFloat{}});
  return oracle_horner(c, to_bigcomplex(z));
}

// Text format: "POLY K n", then n + 1 decimal coefficients a[0] .. a[n].

template <int K>
void write_polynomial(std::ostream& os, const MWPolynomial<K>& p) {
  os << "POLY " << K << ' ' << p.degree() << '\n';
  for (const auto& c : p.a) os << to_exact_decimal_string(c) << '\n';
}

template <int K>
MWPolynomial<K> read_polynomial(std::istream& is) {
  std::string tag;
  int file_k = 0;
  long n = -1;
  if (!(is >> tag >> file_k >> n) || tag != "POLY" || n < 0)
    throw std::runtime_error("polynomial file: expected header 'POLY K n'");
  if (file_k != K) throw std::runtime_error("polynomial file: precision does not match");
  std::vector<MultiWord<K>> a(static_cast<std::size_t>(n) + 1);
  for (auto& c : a) {
    std::string tok;
    if (!(is >> tok)) throw std::runtime_error("polynomial file: too few coefficients");
    c = from_decimal_string<K>(tok);
  }
  return MWPolynomial<K>(std::move(a));
}

}  // namespace mw

#endif  // MW_POLY_HPP
