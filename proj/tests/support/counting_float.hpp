// A double that counts the arithmetic operations performed on it. Sign flips,
// comparisons and fabs are free; an FMA counts as one operation.

#ifndef MW_TEST_COUNTING_FLOAT_HPP
#define MW_TEST_COUNTING_FLOAT_HPP

#include <cmath>
#include <cstdint>

namespace mw::testing {

struct OpCounts {
  std::uint64_t add = 0, mul = 0, div = 0, fma = 0;
  std::uint64_t total() const { return add + mul + div + fma; }
};

inline OpCounts& op_counts() {
  thread_local OpCounts c;
  return c;
}

struct CountingFloat {
  double v = 0.0;

  CountingFloat() = default;
  explicit CountingFloat(double x) : v(x) {}

  friend CountingFloat operator+(CountingFloat a, CountingFloat b) {
    ++op_counts().add;
    return CountingFloat(a.v + b.v);
  }
  friend CountingFloat operator-(CountingFloat a, CountingFloat b) {
    ++op_counts().add;
    return CountingFloat(a.v - b.v);
  }
  friend CountingFloat operator*(CountingFloat a, CountingFloat b) {
    ++op_counts().mul;
    return CountingFloat(a.v * b.v);
  }
  friend CountingFloat operator/(CountingFloat a, CountingFloat b) {
    ++op_counts().div;
    return CountingFloat(a.v / b.v);
  }
  friend CountingFloat operator-(CountingFloat a) { return CountingFloat(-a.v); }
  friend CountingFloat fused_mul_add(CountingFloat a, CountingFloat b, CountingFloat c) {
    ++op_counts().fma;
    return CountingFloat(std::fma(a.v, b.v, c.v));
  }
  friend CountingFloat fabs(CountingFloat a) { return CountingFloat(std::fabs(a.v)); }
  friend bool isfinite(CountingFloat a) { return std::isfinite(a.v); }
  friend bool operator==(CountingFloat a, CountingFloat b) { return a.v == b.v; }
  friend bool operator!=(CountingFloat a, CountingFloat b) { return a.v != b.v; }
  friend bool operator<(CountingFloat a, CountingFloat b) { return a.v < b.v; }
  friend bool operator>(CountingFloat a, CountingFloat b) { return a.v > b.v; }
};

}  // namespace mw::testing

#endif  // MW_TEST_COUNTING_FLOAT_HPP
