// Reproducible random numbers for test data.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The standard distributions are not (their algorithms vary by
// library), so uniforms and normals are derived here explicitly:
//   uniform01: top 53 bits of one draw, scaled by 2^-53, in [0, 1)
//   normal:    Box-Muller, cos branch only, one pair of uniforms per call
// Given a seed, every implementation of these rules produces the same values.

#ifndef MW_RNG_HPP
#define MW_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace mw {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(span == 0 ? eng_() : eng_() % span);
  }

  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace mw

#endif  // MW_RNG_HPP
