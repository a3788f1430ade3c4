// Conventional (branching) renormalization of floating-point expansions,
// following the QD library's renorm(). These are the bottleneck the
// branch-free algorithms remove: the data-dependent branches keep them from
// being vectorized, so lane-batched callers run them lane by lane.

#ifndef MW_RENORMALIZE_HPP
#define MW_RENORMALIZE_HPP

#include <array>
#include <cmath>

#include "mw/eft.hpp"
#include "mw/lanes.hpp"

namespace mw {

/// Four-input renormalization: 3 + 2 QuickTwoSum calls on every path.
template <class T>
std::array<T, 4> renormalize4(T c0, T c1, T c2, T c3) {
  using std::isfinite;
  if (!isfinite(c0)) return {c0, c1, c2, c3};
  const T zero(0.0);
  T s0, s1, s2 = zero, s3 = zero;

  auto r = quick_two_sum(c2, c3);
  s0 = r.s;
  c3 = r.e;
  r = quick_two_sum(c1, s0);
  s0 = r.s;
  c2 = r.e;
  r = quick_two_sum(c0, s0);
  c0 = r.s;
  c1 = r.e;

  s0 = c0;
  s1 = c1;
  if (s1 != zero) {
    r = quick_two_sum(s1, c2);
    s1 = r.s;
    s2 = r.e;
    if (s2 != zero) {
      r = quick_two_sum(s2, c3);
      s2 = r.s;
      s3 = r.e;
    } else {
      r = quick_two_sum(s1, c3);
      s1 = r.s;
      s2 = r.e;
    }
  } else {
    r = quick_two_sum(s0, c2);
    s0 = r.s;
    s1 = r.e;
    if (s1 != zero) {
      r = quick_two_sum(s1, c3);
      s1 = r.s;
      s2 = r.e;
    } else {
      r = quick_two_sum(s0, c3);
      s0 = r.s;
      s1 = r.e;
    }
  }
  return {s0, s1, s2, s3};
}

/// Five-input renormalization: 4 + up to 3 QuickTwoSum calls.
template <class T>
std::array<T, 4> renormalize5(T c0, T c1, T c2, T c3, T c4) {
  using std::isfinite;
  if (!isfinite(c0)) return {c0, c1, c2, c3};
  const T zero(0.0);
  T s0, s1, s2 = zero, s3 = zero;

  auto r = quick_two_sum(c3, c4);
  s0 = r.s;
  c4 = r.e;
  r = quick_two_sum(c2, s0);
  s0 = r.s;
  c3 = r.e;
  r = quick_two_sum(c1, s0);
  s0 = r.s;
  c2 = r.e;
  r = quick_two_sum(c0, s0);
  c0 = r.s;
  c1 = r.e;

  s0 = c0;
  s1 = c1;
  if (s1 != zero) {
    r = quick_two_sum(s1, c2);
    s1 = r.s;
    s2 = r.e;
    if (s2 != zero) {
      r = quick_two_sum(s2, c3);
      s2 = r.s;
      s3 = r.e;
      if (s3 != zero) {
        s3 = s3 + c4;
      } else {
        r = quick_two_sum(s2, c4);
        s2 = r.s;
        s3 = r.e;
      }
    } else {
      r = quick_two_sum(s1, c3);
      s1 = r.s;
      s2 = r.e;
      if (s2 != zero) {
        r = quick_two_sum(s2, c4);
        s2 = r.s;
        s3 = r.e;
      } else {
        r = quick_two_sum(s1, c4);
        s1 = r.s;
        s2 = r.e;
      }
    }
  } else {
    r = quick_two_sum(s0, c2);
    s0 = r.s;
    s1 = r.e;
    if (s1 != zero) {
      r = quick_two_sum(s1, c3);
      s1 = r.s;
      s2 = r.e;
      if (s2 != zero) {
        r = quick_two_sum(s2, c4);
        s2 = r.s;
        s3 = r.e;
      } else {
        r = quick_two_sum(s1, c4);
        s1 = r.s;
        s2 = r.e;
      }
    } else {
      r = quick_two_sum(s0, c3);
      s0 = r.s;
      s1 = r.e;
      if (s1 != zero) {
        r = quick_two_sum(s1, c4);
        s1 = r.s;
        s2 = r.e;
      } else {
        r = quick_two_sum(s0, c4);
        s0 = r.s;
        s1 = r.e;
      }
    }
  }
  return {s0, s1, s2, s3};
}

// Lane-batched forms: a scalar epilogue per lane.
template <int W>
std::array<Lanes<W>, 4> renormalize4(Lanes<W> c0, Lanes<W> c1, Lanes<W> c2, Lanes<W> c3) {
  std::array<Lanes<W>, 4> out;
  for (int l = 0; l < W; ++l) {
    auto r = renormalize4(c0[l], c1[l], c2[l], c3[l]);
    for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)][l] = r[static_cast<std::size_t>(i)];
  }
  return out;
}

template <int W>
std::array<Lanes<W>, 4> renormalize5(Lanes<W> c0, Lanes<W> c1, Lanes<W> c2, Lanes<W> c3,
                                     Lanes<W> c4) {
  std::array<Lanes<W>, 4> out;
  for (int l = 0; l < W; ++l) {
    auto r = renormalize5(c0[l], c1[l], c2[l], c3[l], c4[l]);
    for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)][l] = r[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace mw

#endif  // MW_RENORMALIZE_HPP
