// Triple-word (TD) addition and multiplication.
//
// The conventional routines are QD's quad-double algorithms with the fourth
// component fixed at zero; they finish with a branching renormalization.
// The branch-free routines finish with a fixed QuickTwoSum chain instead.

#ifndef MW_TW_HPP
#define MW_TW_HPP

#include <array>

#include "mw/eft.hpp"
#include "mw/multiword.hpp"
#include "mw/renormalize.hpp"

namespace mw {

/// Renormalizes (s0, s1, s2, t0) into a non-overlapping triple-word.
/// QD's four-input renorm; the fourth output component is dropped.
template <class T>
MultiWord<3, T> tw_renormalize(T s0, T s1, T s2, T t0) {
  auto r = renormalize4(s0, s1, s2, t0);
  return {{r[0], r[1], r[2]}};
}

/// Branch-free part of the conventional addition: the four-term expansion
/// handed to tw_renormalize.
template <class T>
std::array<T, 4> tw_add_expansion(const MultiWord<3, T>& a, const MultiWord<3, T>& b) {
  T s0 = a[0] + b[0];
  T s1 = a[1] + b[1];
  T s2 = a[2] + b[2];
  T v0 = s0 - a[0];
  T v1 = s1 - a[1];
  T v2 = s2 - a[2];
  T u0 = s0 - v0;
  T u1 = s1 - v1;
  T u2 = s2 - v2;
  T w0 = a[0] - u0;
  T w1 = a[1] - u1;
  T w2 = a[2] - u2;
  u0 = b[0] - v0;
  u1 = b[1] - v1;
  u2 = b[2] - v2;
  T t0 = w0 + u0;
  T t1 = w1 + u1;
  T t2 = w2 + u2;

  auto r = two_sum(s1, t0);
  s1 = r.s;
  t0 = r.e;
  auto [i1, i2] = two_sum(s2, t0);
  r = two_sum(t1, i1);
  s2 = r.s;
  T i3 = r.e;
  r = two_sum(i2, i3);
  t0 = r.s;
  t1 = r.e;
  t0 = t0 + t1 + t2;
  return {s0, s1, s2, t0};
}

template <class T>
MultiWord<3, T> tw_add(const MultiWord<3, T>& a, const MultiWord<3, T>& b) {
  auto x = tw_add_expansion(a, b);
  return tw_renormalize(x[0], x[1], x[2], x[3]);
}

/// Which reading of the conventional TD multiplication to run.
/// Verbatim keeps the printed final steps, which feed a stale error term into
/// the renormalization and drop the accumulated O(eps^3) sum; Cleaned carries
/// that sum forward the way QD's accurate multiplication does.
enum class TwMulForm { Verbatim, Cleaned };

template <class T>
std::array<T, 4> tw_mul_expansion(const MultiWord<3, T>& a, const MultiWord<3, T>& b,
                                  TwMulForm form = TwMulForm::Verbatim) {
  auto [p0, q0] = two_prod(a[0], b[0]);
  auto [p1, q1] = two_prod(a[0], b[1]);
  auto [p2, q2] = two_prod(a[1], b[0]);
  auto [p3, q3] = two_prod(a[0], b[2]);
  auto [p4, q4] = two_prod(a[1], b[1]);
  auto [p5, q5] = two_prod(a[2], b[0]);

  // three_sum(p1, p2, q0)
  auto [i1, i2] = two_sum(p1, p2);
  auto r = two_sum(q0, i1);
  p1 = r.s;
  T i3 = r.e;
  r = two_sum(i2, i3);
  p2 = r.s;
  q0 = r.e;

  // three_sum(p2, q1, q2)
  r = two_sum(p2, q1);
  i1 = r.s;
  i2 = r.e;
  r = two_sum(q2, i1);
  p2 = r.s;
  i3 = r.e;
  r = two_sum(i2, i3);
  q1 = r.s;
  q2 = r.e;

  // three_sum(p3, p4, p5)
  r = two_sum(p3, p4);
  i1 = r.s;
  i2 = r.e;
  r = two_sum(p5, i1);
  p3 = r.s;
  i3 = r.e;
  r = two_sum(i2, i3);
  p4 = r.s;
  p5 = r.e;

  auto [s0, t0] = two_sum(p2, p3);
  auto [s1, t1] = two_sum(q1, p4);
  T s2 = q2 + p5;
  r = two_sum(s1, t0);
  s1 = r.s;
  t0 = r.e;
  s2 = s2 + (t0 + t1);
  r = two_sum(q0, q3);
  q0 = r.s;
  q3 = r.e;
  r = two_sum(q4, q5);
  q4 = r.s;
  q5 = r.e;
  r = two_sum(q0, q4);
  t0 = r.s;
  t1 = r.e;
  t1 = t1 + (q3 + q5);

  if (form == TwMulForm::Verbatim) {
    r = two_sum(q3, s1);
    t0 = r.s;
    return {p0, p1, s0, t0};
  }
  r = two_sum(t0, s1);
  T e = r.e + (t1 + s2);
  return {p0, p1, s0, r.s + e};
}

template <class T>
MultiWord<3, T> tw_mul(const MultiWord<3, T>& a, const MultiWord<3, T>& b,
                       TwMulForm form = TwMulForm::Verbatim) {
  auto x = tw_mul_expansion(a, b, form);
  return tw_renormalize(x[0], x[1], x[2], x[3]);
}

template <class T>
MultiWord<3, T> tw_add_bf(const MultiWord<3, T>& x, const MultiWord<3, T>& y) {
  auto [a1, b1] = two_sum(x[0], y[0]);
  auto [c1, d1] = two_sum(x[1], y[1]);
  auto [e1, f1] = two_sum(x[2], y[2]);
  auto [a2, c2] = quick_two_sum(a1, c1);
  T b2 = b1 + f1;
  auto [d2, e2] = two_sum(d1, e1);
  auto [a3, d3] = quick_two_sum(a2, d2);
  auto [b3, c3] = two_sum(b2, c2);
  T c4 = c3 + e2;
  auto [c5, d5] = two_sum(c4, d3);
  auto [b6, c6] = two_sum(b3, c5);
  auto [r0, b7] = quick_two_sum(a3, b6);
  T c7 = c6 + d5;
  auto [r1, r2] = quick_two_sum(b7, c7);
  return {{r0, r1, r2}};
}

template <class T>
MultiWord<3, T> tw_mul_bf(const MultiWord<3, T>& x, const MultiWord<3, T>& y) {
  auto [a0, b0] = two_prod(x[0], y[0]);
  auto [c0, e0] = two_prod(x[0], y[1]);
  auto [d0, f0] = two_prod(x[1], y[0]);
  T g0 = x[0] * y[2];
  T h0 = x[1] * y[1];
  T i0 = x[2] * y[0];
  auto [c1, d1] = two_sum(c0, d0);
  T e1 = e0 + f0;
  T g1 = g0 + i0;
  auto [b2, c2] = two_sum(b0, c1);
  T g2 = g1 + h0;
  auto [a3, b3] = quick_two_sum(a0, b2);
  T c3 = c2 + d1;
  T e3 = e1 + g2;
  T c4 = c3 + e3;
  auto [b5, c5] = quick_two_sum(b3, c4);
  auto [r0, b6] = quick_two_sum(a3, b5);
  auto [r1, r2] = quick_two_sum(b6, c5);
  return {{r0, r1, r2}};
}

}  // namespace mw

#endif  // MW_TW_HPP
