// Quad-word (QD) addition and multiplication.
//
// Conventional routines follow the QD library (sloppy and IEEE-style
// addition, accurate multiplication) and end in a branching renormalization.
// The branch-free routines use a fixed sequence of TwoSum/QuickTwoSum calls.

#ifndef MW_QW_HPP
#define MW_QW_HPP

#include <array>
#include <cmath>

#include "mw/eft.hpp"
#include "mw/multiword.hpp"
#include "mw/renormalize.hpp"

namespace mw {

template <class T>
MultiWord<4, T> qw_renormalize(T x0, T x1, T x2, T x3, T x4) {
  auto r = renormalize5(x0, x1, x2, x3, x4);
  return {{r[0], r[1], r[2], r[3]}};
}

template <class T>
std::array<T, 5> qw_add_sloppy_expansion(const MultiWord<4, T>& a, const MultiWord<4, T>& b) {
  std::array<T, 4> s, t;
  for (int i = 0; i < 4; ++i) {
    const auto k = static_cast<std::size_t>(i);
    s[k] = a[i] + b[i];
    T v = s[k] - a[i];
    T u = s[k] - v;
    T w = a[i] - u;
    u = b[i] - v;
    t[k] = w + u;
  }
  auto r = two_sum(s[1], t[0]);
  s[1] = r.s;
  T t0 = r.e;
  // three_sum(s2, t0, t1)
  r = two_sum(s[2], t0);
  T x1 = r.s, x2 = r.e;
  r = two_sum(t[1], x1);
  s[2] = r.s;
  T x3 = r.e;
  r = two_sum(x2, x3);
  t0 = r.s;
  T t1 = r.e;
  // three_sum2(s3, t0, t2)
  r = two_sum(s[3], t0);
  x1 = r.s;
  x2 = r.e;
  r = two_sum(t[2], x1);
  s[3] = r.s;
  x3 = r.e;
  t0 = x2 + x3;
  t0 = t0 + t1 + t[3];
  return {s[0], s[1], s[2], s[3], t0};
}

/// QD's sloppy addition. Cheap, but loses relative accuracy under
/// cancellation of the leading components.
template <class T>
MultiWord<4, T> qw_add_sloppy(const MultiWord<4, T>& a, const MultiWord<4, T>& b) {
  auto x = qw_add_sloppy_expansion(a, b);
  return qw_renormalize(x[0], x[1], x[2], x[3], x[4]);
}

namespace detail {

// QD's quick_three_accum: folds c into (a, b); returns a finished component
// or zero when the accumulator absorbed it.
template <class T>
T quick_three_accum(T& a, T& b, T c) {
  const T zero(0.0);
  auto r = two_sum(b, c);
  T s = r.s;
  b = r.e;
  r = two_sum(a, s);
  s = r.s;
  a = r.e;
  const bool za = a != zero;
  const bool zb = b != zero;
  if (za && zb) return s;
  if (!zb) {
    b = a;
    a = s;
  } else {
    a = s;
  }
  return zero;
}

template <class T>
MultiWord<4, T> qw_add_ieee_scalar(const MultiWord<4, T>& a, const MultiWord<4, T>& b) {
  using std::fabs;
  const T zero(0.0);
  int i = 0, j = 0, k = 0;
  T u, v, t;
  std::array<T, 4> x{zero, zero, zero, zero};

  if (fabs(a[i]) > fabs(b[j])) u = a[i++];
  else u = b[j++];
  if (fabs(a[i]) > fabs(b[j])) v = a[i++];
  else v = b[j++];
  auto q = quick_two_sum(u, v);
  u = q.s;
  v = q.e;

  while (k < 4) {
    if (i >= 4 && j >= 4) {
      x[static_cast<std::size_t>(k)] = u;
      if (k < 3) x[static_cast<std::size_t>(++k)] = v;
      break;
    }
    if (i >= 4) t = b[j++];
    else if (j >= 4) t = a[i++];
    else if (fabs(a[i]) > fabs(b[j])) t = a[i++];
    else t = b[j++];

    T s = quick_three_accum(u, v, t);
    if (s != zero) x[static_cast<std::size_t>(k++)] = s;
  }
  for (int m = i; m < 4; ++m) x[3] = x[3] + a[m];
  for (int m = j; m < 4; ++m) x[3] = x[3] + b[m];

  auto r = renormalize4(x[0], x[1], x[2], x[3]);
  return {{r[0], r[1], r[2], r[3]}};
}

}  // namespace detail

/// QD's IEEE-style addition: merges components by magnitude, keeping a
/// relative error bound under cancellation. Branches on data everywhere, so
/// lane batches run it lane by lane.
template <class T>
MultiWord<4, T> qw_add_ieee(const MultiWord<4, T>& a, const MultiWord<4, T>& b) {
  if constexpr (is_lanes_v<T>) {
    MultiWord<4, T> out;
    for (int l = 0; l < T::width; ++l)
      set_lane(out, l, detail::qw_add_ieee_scalar(lane(a, l), lane(b, l)));
    return out;
  } else {
    return detail::qw_add_ieee_scalar(a, b);
  }
}

/// The conventional QD addition used by the Standard variant.
template <class T>
MultiWord<4, T> qw_add(const MultiWord<4, T>& a, const MultiWord<4, T>& b) {
  return qw_add_ieee(a, b);
}

template <class T>
std::array<T, 5> qw_mul_expansion(const MultiWord<4, T>& a, const MultiWord<4, T>& b) {
  auto [p0, q0] = two_prod(a[0], b[0]);
  auto [p1, q1] = two_prod(a[0], b[1]);
  auto [p2, q2] = two_prod(a[1], b[0]);
  auto [p3, q3] = two_prod(a[0], b[2]);
  auto [p4, q4] = two_prod(a[1], b[1]);
  auto [p5, q5] = two_prod(a[2], b[0]);

  auto three_sum = [](T& x, T& y, T& z) {
    auto r1 = two_sum(x, y);
    auto r2 = two_sum(z, r1.s);
    x = r2.s;
    auto r3 = two_sum(r1.e, r2.e);
    y = r3.s;
    z = r3.e;
  };
  three_sum(p1, p2, q0);
  three_sum(p2, q1, q2);
  three_sum(p3, p4, p5);

  auto [s0, t0] = two_sum(p2, p3);
  auto [s1, t1] = two_sum(q1, p4);
  T s2 = q2 + p5;
  auto r = two_sum(s1, t0);
  s1 = r.s;
  t0 = r.e;
  s2 = s2 + (t0 + t1);

  // O(eps^3) terms
  auto [p6, q6] = two_prod(a[0], b[3]);
  auto [p7, q7] = two_prod(a[1], b[2]);
  auto [p8, q8] = two_prod(a[2], b[1]);
  auto [p9, q9] = two_prod(a[3], b[0]);

  r = two_sum(q0, q3);
  q0 = r.s;
  q3 = r.e;
  r = two_sum(q4, q5);
  q4 = r.s;
  q5 = r.e;
  r = two_sum(p6, p7);
  p6 = r.s;
  p7 = r.e;
  r = two_sum(p8, p9);
  p8 = r.s;
  p9 = r.e;
  r = two_sum(q0, q4);
  t0 = r.s;
  t1 = r.e + (q3 + q5);
  r = two_sum(p6, p8);
  T r0 = r.s;
  T r1 = r.e + (p7 + p9);
  r = two_sum(t0, r0);
  q3 = r.s;
  q4 = r.e + (t1 + r1);
  r = two_sum(q3, s1);
  t0 = r.s;
  t1 = r.e + q4;

  // O(eps^4) terms
  t1 = t1 + (a[1] * b[3] + a[2] * b[2] + a[3] * b[1] + q6 + q7 + q8 + q9 + s2);
  return {p0, p1, s0, t0, t1};
}

/// QD's accurate multiplication.
template <class T>
MultiWord<4, T> qw_mul(const MultiWord<4, T>& a, const MultiWord<4, T>& b) {
  auto x = qw_mul_expansion(a, b);
  return qw_renormalize(x[0], x[1], x[2], x[3], x[4]);
}

template <class T>
MultiWord<4, T> qw_add_bf(const MultiWord<4, T>& x, const MultiWord<4, T>& y) {
  auto [a1, b1] = two_sum(x[0], y[0]);
  auto [c1, d1] = two_sum(x[1], y[1]);
  auto [e1, f1] = two_sum(x[2], y[2]);
  auto [g1, h1] = two_sum(x[3], y[3]);
  auto [a2, c2] = quick_two_sum(a1, c1);
  T b2 = b1 + h1;
  auto [d2, e2] = two_sum(d1, e1);
  auto [f2, g2] = two_sum(f1, g1);
  auto [b3, g3] = two_sum(b2, g2);
  auto [c3, d3] = quick_two_sum(c2, d2);
  auto [e3, f3] = two_sum(e2, f2);
  auto [a4, c4] = quick_two_sum(a2, c3);
  auto [d4, e4] = quick_two_sum(d3, e3);
  auto [b5, d5] = two_sum(b3, d4);
  T e5 = e4 + f3;
  auto [b6, c6] = two_sum(b5, c4);
  auto [d6, e6] = two_sum(d5, e5);
  auto [a7, b7] = quick_two_sum(a4, b6);
  auto [c7, d7] = quick_two_sum(c6, d6);
  T e8 = e6 + g3;
  auto [b8, c8] = quick_two_sum(b7, c7);
  T d9 = d7 + e8;
  auto [r0, b10] = quick_two_sum(a7, b8);
  auto [c10, d10] = quick_two_sum(c8, d9);
  auto [r1, c11] = quick_two_sum(b10, c10);
  auto [r2, r3] = quick_two_sum(c11, d10);
  return {{r0, r1, r2, r3}};
}

template <class T>
MultiWord<4, T> qw_mul_bf(const MultiWord<4, T>& x, const MultiWord<4, T>& y) {
  auto [a0, b0] = two_prod(x[0], y[0]);
  auto [c0, e0] = two_prod(x[0], y[1]);
  auto [d0, f0] = two_prod(x[1], y[0]);
  auto [g0, j0] = two_prod(x[0], y[2]);
  auto [h0, k0] = two_prod(x[1], y[1]);
  auto [i0, l0] = two_prod(x[2], y[0]);
  T m0 = x[0] * y[3];
  T n0 = x[1] * y[2];
  T o0 = x[2] * y[1];
  T p0 = x[3] * y[0];
  auto [c1, d1] = two_sum(c0, d0);
  auto [e1, f1] = two_sum(e0, f0);
  auto [g1, i1] = two_sum(g0, i0);
  T j1 = j0 + l0;
  T m1 = m0 + p0;
  T n1 = n0 + o0;
  auto [b2, c2] = two_sum(b0, c1);
  auto [e2, h2] = two_sum(e1, h0);
  T f2 = f1 + j1;
  T i2 = i1 + k0;
  T m2 = m1 + n1;
  auto [a3, b3] = quick_two_sum(a0, b2);
  auto [c3, d3] = quick_two_sum(c2, d1);
  auto [e3, g3] = two_sum(e2, g1);
  T f3 = f2 + m2;
  T h3 = h2 + i2;
  auto [c4, e4] = two_sum(c3, e3);
  T d4 = d3 + h3;
  T f4 = f3 + g3;
  T d5 = d4 + e4;
  auto [c6, d6] = two_sum(c4, d5);
  auto [b7, c7] = two_sum(b3, c6);
  T d7 = d6 + f4;
  auto [r0, b8] = quick_two_sum(a3, b7);
  auto [c8, d8] = two_sum(c7, d7);
  auto [r1, c9] = two_sum(b8, c8);
  auto [r2, r3] = quick_two_sum(c9, d8);
  return {{r0, r1, r2, r3}};
}

}  // namespace mw

#endif  // MW_QW_HPP
