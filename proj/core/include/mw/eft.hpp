// Error-free transformations on the base floating-point format.
//
// Every routine here is generic over the "base float" type T. T is either
// double, a lane vector (mw::Lanes<W>) or an instrumented wrapper used by the
// operation-count tests. T must provide +, -, * and a fused_mul_add(a, b, c)
// overload found by argument-dependent lookup (or in namespace mw).
//
// All proofs behind these routines assume round-to-nearest-ties-even and no
// FP contraction/reassociation. The build passes -ffp-contract=off and never
// enables -ffast-math for the targets that include this header.

#ifndef MW_EFT_HPP
#define MW_EFT_HPP

#include <cmath>

namespace mw {

template <class T>
struct SumAndErr {
  T s;
  T e;
};

inline double fused_mul_add(double a, double b, double c) { return std::fma(a, b, c); }

/// (s, e) with s = fl(a + b) and a + b = s + e, valid only when |a| >= |b| or a == 0.
/// The precondition is not checked.
template <class T>
inline SumAndErr<T> quick_two_sum(T a, T b) {
  T s = a + b;
  T e = b - (s - a);
  return {s, e};
}

/// (s, e) with s = fl(a + b) and a + b = s + e for any finite a, b. Six flops.
template <class T>
inline SumAndErr<T> two_sum(T a, T b) {
  T s = a + b;
  T v = s - a;
  T e = (a - (s - v)) + (b - v);
  return {s, e};
}

/// (p, e) with p = fl(a * b) and a * b = p + e, computed with one FMA.
/// Exact as long as the product neither overflows nor lands in the
/// subnormal range.
template <class T>
inline SumAndErr<T> two_prod(T a, T b) {
  T p = a * b;
  T e = fused_mul_add(a, b, -p);
  return {p, e};
}

/// True when the current thread's rounding mode is round-to-nearest.
bool round_to_nearest_active() noexcept;

/// Throws std::runtime_error if the rounding mode is not round-to-nearest.
void require_round_to_nearest();

}  // namespace mw

#endif  // MW_EFT_HPP
