// Double-word (DD) addition and multiplication.
//
// None of these branch; they are generic over the base type and run as-is
// on lane vectors.

#ifndef MW_DW_HPP
#define MW_DW_HPP

#include "mw/eft.hpp"
#include "mw/multiword.hpp"

namespace mw {

/// QD's default (sloppy) addition: one TwoSum, error merge, QuickTwoSum.
/// Loses relative accuracy when the leading components cancel.
template <class T>
MultiWord<2, T> dw_add_sloppy(const MultiWord<2, T>& a, const MultiWord<2, T>& b) {
  auto [s, e] = two_sum(a[0], b[0]);
  e = e + (a[1] + b[1]);
  auto r = quick_two_sum(s, e);
  return {{r.s, r.e}};
}

/// Accurate (IEEE-style) addition with a relative error bound for all inputs.
template <class T>
MultiWord<2, T> dw_add_accurate(const MultiWord<2, T>& a, const MultiWord<2, T>& b) {
  auto [s1, s2] = two_sum(a[0], b[0]);
  auto [t1, t2] = two_sum(a[1], b[1]);
  s2 = s2 + t1;
  auto q = quick_two_sum(s1, s2);
  s1 = q.s;
  s2 = q.e + t2;
  q = quick_two_sum(s1, s2);
  return {{q.s, q.e}};
}

/// Branch-free reformulation of the accurate addition.
template <class T>
MultiWord<2, T> dw_add_bf(const MultiWord<2, T>& a, const MultiWord<2, T>& b) {
  auto [g1, g1e] = two_sum(a[0], b[0]);
  auto [g2, g2e] = two_sum(a[1], b[1]);
  auto [g3, g3e] = quick_two_sum(g1, g2);
  T g4 = g1e + g2e;
  T g5 = g4 + g3e;
  auto r = quick_two_sum(g3, g5);
  return {{r.s, r.e}};
}

/// QD's default multiplication. The final combine is a QuickTwoSum.
template <class T>
MultiWord<2, T> dw_mul(const MultiWord<2, T>& a, const MultiWord<2, T>& b) {
  auto [p1, p2] = two_prod(a[0], b[0]);
  p2 = p2 + (a[0] * b[1] + a[1] * b[0]);
  auto r = quick_two_sum(p1, p2);
  return {{r.s, r.e}};
}

/// Branch-free multiplication: all products first, then error handling.
template <class T>
MultiWord<2, T> dw_mul_bf(const MultiWord<2, T>& a, const MultiWord<2, T>& b) {
  auto [p00, pe00] = two_prod(a[0], b[0]);
  T p01 = a[0] * b[1];
  T p10 = a[1] * b[0];
  T g1 = p01 + p10;
  T g2 = pe00 + g1;
  auto r = quick_two_sum(p00, g2);
  return {{r.s, r.e}};
}

}  // namespace mw

#endif  // MW_DW_HPP
