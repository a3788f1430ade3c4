// Multi-component (multiword) floating-point values.
//
// A MultiWord<K, T> holds K base floats whose unevaluated sum is the value.
// With T = double, K = 2, 3, 4 gives double-double (106 bits),
// triple-double (159 bits) and quad-double (212 bits). With T = Lanes<W>
// the same layout stores W independent values component-planar: component i
// of every lane sits in one contiguous Lanes<W>.

#ifndef MW_MULTIWORD_HPP
#define MW_MULTIWORD_HPP

#include <array>
#include <concepts>
#include <cstdint>
#include <cstring>

#include "mw/lanes.hpp"

namespace mw {

/// Selects the conventional renormalizing algorithms or the branch-free ones.
enum class Variant { Standard, BranchFree };

inline const char* to_string(Variant v) noexcept {
  return v == Variant::Standard ? "std" : "bf";
}

template <int K, class T = double>
struct MultiWord {
  static_assert(K >= 1 && K <= 4, "1 to 4 components supported");
  static constexpr int size = K;
  using value_type = T;

  std::array<T, K> c{};

  T& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const T& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  /// The base float x as a K-word value with zero tail.
  static MultiWord from_base(const T& x) {
    MultiWord r;
    r.c[0] = x;
    for (int i = 1; i < K; ++i) r.c[static_cast<std::size_t>(i)] = T(0.0);
    return r;
  }
};

using DD = MultiWord<2>;
using TD = MultiWord<3>;
using QD = MultiWord<4>;

/// Nominal precision in bits, 53 per binary64 component.
template <int K>
inline constexpr int precision_bits = K == 2 ? 106 : K == 3 ? 159 : K == 4 ? 212 : 53;

/// Decimal digits printed by default: 34, 49, 64 for DD, TD, QD.
template <int K>
inline constexpr int default_decimal_digits = K == 2 ? 34 : K == 3 ? 49 : K == 4 ? 64 : 17;

template <int K, class T>
inline MultiWord<K, T> neg(const MultiWord<K, T>& a) {
  MultiWord<K, T> r;
  for (int i = 0; i < K; ++i) r[i] = -a[i];
  return r;
}

template <int K, std::floating_point T>
inline bool operator==(const MultiWord<K, T>& a, const MultiWord<K, T>& b) {
  for (int i = 0; i < K; ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

/// Bit-for-bit equality of every component (distinguishes -0 from +0).
template <int K>
inline bool bitwise_equal(const MultiWord<K, double>& a, const MultiWord<K, double>& b) {
  return std::memcmp(a.c.data(), b.c.data(), sizeof(double) * K) == 0;
}

/// Lane `lane` of a lane-batched value, as a scalar multiword.
template <int K, int W>
inline MultiWord<K> lane(const MultiWord<K, Lanes<W>>& x, int lane_index) {
  MultiWord<K> r;
  for (int i = 0; i < K; ++i) r[i] = x[i][lane_index];
  return r;
}

template <int K, int W>
inline void set_lane(MultiWord<K, Lanes<W>>& x, int lane_index, const MultiWord<K>& v) {
  for (int i = 0; i < K; ++i) x[i][lane_index] = v[i];
}

/// Every lane set to v.
template <int W, int K>
inline MultiWord<K, Lanes<W>> splat(const MultiWord<K>& v) {
  MultiWord<K, Lanes<W>> r;
  for (int i = 0; i < K; ++i) r[i] = Lanes<W>(v[i]);
  return r;
}

}  // namespace mw

#endif  // MW_MULTIWORD_HPP
