// Complex multiword values and arithmetic.
//
// cmul uses three real multiplications (ac, bd, (a+b)(c+d)); cmul4 keeps the
// four-multiplication form as a reference.

#ifndef MW_COMPLEX_HPP
#define MW_COMPLEX_HPP

#include "mw/arith.hpp"
#include "mw/multiword.hpp"

namespace mw {

template <int K, class T = double>
struct ComplexMW {
  MultiWord<K, T> re{};
  MultiWord<K, T> im{};
};

using ComplexDD = ComplexMW<2>;
using ComplexTD = ComplexMW<3>;
using ComplexQD = ComplexMW<4>;

template <int K, class T>
inline ComplexMW<K, T> conj(const ComplexMW<K, T>& z) {
  return {z.re, neg(z.im)};
}

template <int K, class T>
inline ComplexMW<K, T> cneg(const ComplexMW<K, T>& z) {
  return {neg(z.re), neg(z.im)};
}

template <Variant V = Variant::Standard, int K, class T>
inline ComplexMW<K, T> cadd(const ComplexMW<K, T>& a, const ComplexMW<K, T>& b) {
  return {add<V>(a.re, b.re), add<V>(a.im, b.im)};
}

template <Variant V = Variant::Standard, int K, class T>
inline ComplexMW<K, T> csub(const ComplexMW<K, T>& a, const ComplexMW<K, T>& b) {
  return {sub<V>(a.re, b.re), sub<V>(a.im, b.im)};
}

/// 3M product: re = ac - bd, im = (a + b)(c + d) - ac - bd.
template <Variant V = Variant::Standard, int K, class T>
inline ComplexMW<K, T> cmul(const ComplexMW<K, T>& x, const ComplexMW<K, T>& y) {
  const auto ac = mul<V>(x.re, y.re);
  const auto bd = mul<V>(x.im, y.im);
  const auto s = mul<V>(add<V>(x.re, x.im), add<V>(y.re, y.im));
  return {sub<V>(ac, bd), sub<V>(sub<V>(s, ac), bd)};
}

/// Four-multiplication product: re = ac - bd, im = ad + bc.
template <Variant V = Variant::Standard, int K, class T>
inline ComplexMW<K, T> cmul4(const ComplexMW<K, T>& x, const ComplexMW<K, T>& y) {
  return {sub<V>(mul<V>(x.re, y.re), mul<V>(x.im, y.im)),
          add<V>(mul<V>(x.re, y.im), mul<V>(x.im, y.re))};
}

/// Squared modulus re^2 + im^2.
template <Variant V = Variant::Standard, int K, class T>
inline MultiWord<K, T> cnorm(const ComplexMW<K, T>& z) {
  return add<V>(mul<V>(z.re, z.re), mul<V>(z.im, z.im));
}

/// x / y as x * conj(y) / |y|^2, without Smith scaling. Division by zero gives
/// non-finite components.
template <Variant V = Variant::Standard, int K, class T>
inline ComplexMW<K, T> cdiv(const ComplexMW<K, T>& x, const ComplexMW<K, T>& y) {
  const auto num = cmul<V>(x, conj(y));
  const auto den = cnorm<V>(y);
  return {div<V>(num.re, den), div<V>(num.im, den)};
}

template <int K, class T>
inline ComplexMW<K, T> cadd(const ComplexMW<K, T>& a, const ComplexMW<K, T>& b, Variant v) {
  return v == Variant::BranchFree ? cadd<Variant::BranchFree>(a, b) : cadd<Variant::Standard>(a, b);
}
template <int K, class T>
inline ComplexMW<K, T> csub(const ComplexMW<K, T>& a, const ComplexMW<K, T>& b, Variant v) {
  return v == Variant::BranchFree ? csub<Variant::BranchFree>(a, b) : csub<Variant::Standard>(a, b);
}
template <int K, class T>
inline ComplexMW<K, T> cmul(const ComplexMW<K, T>& a, const ComplexMW<K, T>& b, Variant v) {
  return v == Variant::BranchFree ? cmul<Variant::BranchFree>(a, b) : cmul<Variant::Standard>(a, b);
}
template <int K, class T>
inline ComplexMW<K, T> cdiv(const ComplexMW<K, T>& a, const ComplexMW<K, T>& b, Variant v) {
  return v == Variant::BranchFree ? cdiv<Variant::BranchFree>(a, b) : cdiv<Variant::Standard>(a, b);
}

}  // namespace mw

#endif  // MW_COMPLEX_HPP
