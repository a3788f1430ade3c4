// Fixed-width lane vector of base floats.
//
// Lanes<W> behaves like a double under +, -, *, / and fused_mul_add, applied
// lane by lane. The loops are fixed-trip and branch-free, so the compiler
// maps them onto the target's vector registers (two lanes per 128-bit
// register, four per 256-bit, eight per 512-bit). Each lane performs exactly
// the IEEE operation the scalar code would perform, which is what makes
// batched results bitwise equal to scalar ones.

#ifndef MW_LANES_HPP
#define MW_LANES_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <type_traits>

namespace mw {

template <int W>
struct alignas(W * sizeof(double)) Lanes {
  static_assert(W == 1 || W == 2 || W == 4 || W == 8, "lane width must be 1, 2, 4 or 8");
  static constexpr int width = W;

  std::array<double, W> v{};

  Lanes() = default;
  explicit Lanes(double x) { v.fill(x); }

  double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

  static Lanes load(const double* p) {
    Lanes r;
    for (int i = 0; i < W; ++i) r.v[i] = p[i];
    return r;
  }
  void store(double* p) const {
    for (int i = 0; i < W; ++i) p[i] = v[i];
  }

  friend Lanes operator+(const Lanes& a, const Lanes& b) {
    Lanes r;
    for (int i = 0; i < W; ++i) r.v[i] = a.v[i] + b.v[i];
    return r;
  }
  friend Lanes operator-(const Lanes& a, const Lanes& b) {
    Lanes r;
    for (int i = 0; i < W; ++i) r.v[i] = a.v[i] - b.v[i];
    return r;
  }
  friend Lanes operator*(const Lanes& a, const Lanes& b) {
    Lanes r;
    for (int i = 0; i < W; ++i) r.v[i] = a.v[i] * b.v[i];
    return r;
  }
  friend Lanes operator/(const Lanes& a, const Lanes& b) {
    Lanes r;
    for (int i = 0; i < W; ++i) r.v[i] = a.v[i] / b.v[i];
    return r;
  }
  friend Lanes operator-(const Lanes& a) {
    Lanes r;
    for (int i = 0; i < W; ++i) r.v[i] = -a.v[i];
    return r;
  }
  friend Lanes fused_mul_add(const Lanes& a, const Lanes& b, const Lanes& c) {
    Lanes r;
    for (int i = 0; i < W; ++i) r.v[i] = std::fma(a.v[i], b.v[i], c.v[i]);
    return r;
  }
};

template <class T>
struct is_lanes : std::false_type {};
template <int W>
struct is_lanes<Lanes<W>> : std::true_type {};
template <class T>
inline constexpr bool is_lanes_v = is_lanes<T>::value;

/// Lane count of T: W for Lanes<W>, 1 for scalar base floats.
template <class T>
inline constexpr int lane_count_v = 1;
template <int W>
inline constexpr int lane_count_v<Lanes<W>> = W;

/// Widest lane count the running CPU handles natively (8, 4 or 2).
int native_lane_width() noexcept;

}  // namespace mw

#endif  // MW_LANES_HPP
