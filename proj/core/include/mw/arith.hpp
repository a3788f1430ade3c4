// Variant-selected arithmetic on multiword values: add, sub, mul, div.
//
// The Variant is a template parameter on the hot path so kernels pick their
// algorithms once; runtime-Variant overloads forward to it. Every entry point
// accepts scalar (T = double) and lane-batched (T = Lanes<W>) values.
//
// Standard DD addition is the accurate two-TwoSum form. QD's sloppy form
// (dw_add_sloppy) has no relative error bound under cancellation.

#ifndef MW_ARITH_HPP
#define MW_ARITH_HPP

#include "mw/dw.hpp"
#include "mw/multiword.hpp"
#include "mw/qw.hpp"
#include "mw/tw.hpp"

namespace mw {

template <Variant V = Variant::Standard, int K, class T>
inline MultiWord<K, T> add(const MultiWord<K, T>& a, const MultiWord<K, T>& b) {
  if constexpr (K == 1) {
    return {{a[0] + b[0]}};
  } else if constexpr (K == 2) {
    if constexpr (V == Variant::BranchFree) return dw_add_bf(a, b);
    else return dw_add_accurate(a, b);
  } else if constexpr (K == 3) {
    if constexpr (V == Variant::BranchFree) return tw_add_bf(a, b);
    else return tw_add(a, b);
  } else {
    if constexpr (V == Variant::BranchFree) return qw_add_bf(a, b);
    else return qw_add(a, b);
  }
}

template <Variant V = Variant::Standard, int K, class T>
inline MultiWord<K, T> mul(const MultiWord<K, T>& a, const MultiWord<K, T>& b) {
  if constexpr (K == 1) {
    return {{a[0] * b[0]}};
  } else if constexpr (K == 2) {
    if constexpr (V == Variant::BranchFree) return dw_mul_bf(a, b);
    else return dw_mul(a, b);
  } else if constexpr (K == 3) {
    if constexpr (V == Variant::BranchFree) return tw_mul_bf(a, b);
    else return tw_mul(a, b);
  } else {
    if constexpr (V == Variant::BranchFree) return qw_mul_bf(a, b);
    else return qw_mul(a, b);
  }
}

template <Variant V = Variant::Standard, int K, class T>
inline MultiWord<K, T> sub(const MultiWord<K, T>& a, const MultiWord<K, T>& b) {
  return add<V>(a, neg(b));
}

/// Newton iterations used by div: 53 * 2^i must reach the K-word precision.
template <int K>
inline constexpr int newton_iterations = K <= 1 ? 0 : K == 2 ? 2 : 3;

/// a / b via a Newton-refined reciprocal: x <- x + x * (1 - b * x), seeded
/// with 1 / b[0], then one multiplication by a. Division by zero yields
/// non-finite components; it is not trapped.
template <Variant V = Variant::Standard, int K, class T>
inline MultiWord<K, T> div(const MultiWord<K, T>& a, const MultiWord<K, T>& b) {
  const auto one = MultiWord<K, T>::from_base(T(1.0));
  auto x = MultiWord<K, T>::from_base(T(1.0) / b[0]);
  for (int it = 0; it < newton_iterations<K>; ++it) {
    auto r = sub<V>(one, mul<V>(b, x));
    x = add<V>(x, mul<V>(x, r));
  }
  return mul<V>(a, x);
}

// Runtime-Variant forms.
template <int K, class T>
inline MultiWord<K, T> add(const MultiWord<K, T>& a, const MultiWord<K, T>& b, Variant v) {
  return v == Variant::BranchFree ? add<Variant::BranchFree>(a, b) : add<Variant::Standard>(a, b);
}
template <int K, class T>
inline MultiWord<K, T> sub(const MultiWord<K, T>& a, const MultiWord<K, T>& b, Variant v) {
  return v == Variant::BranchFree ? sub<Variant::BranchFree>(a, b) : sub<Variant::Standard>(a, b);
}
template <int K, class T>
inline MultiWord<K, T> mul(const MultiWord<K, T>& a, const MultiWord<K, T>& b, Variant v) {
  return v == Variant::BranchFree ? mul<Variant::BranchFree>(a, b) : mul<Variant::Standard>(a, b);
}
template <int K, class T>
inline MultiWord<K, T> div(const MultiWord<K, T>& a, const MultiWord<K, T>& b, Variant v) {
  return v == Variant::BranchFree ? div<Variant::BranchFree>(a, b) : div<Variant::Standard>(a, b);
}

/// Calls f.template operator()<V>() with V matching the runtime variant.
template <class F>
decltype(auto) with_variant(Variant v, F&& f) {
  if (v == Variant::BranchFree) return f.template operator()<Variant::BranchFree>();
  return f.template operator()<Variant::Standard>();
}

}  // namespace mw

#endif  // MW_ARITH_HPP
