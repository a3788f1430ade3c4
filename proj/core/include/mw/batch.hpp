// Lane-batched multiword values and operations.
//
// LaneBatch<K, W> is a MultiWord whose components are Lanes<W>: component i
// of all W values is one contiguous array. Every operation is the scalar
// template instantiated on lanes, so each lane performs the same IEEE
// operations as the scalar path and the results are bitwise equal. The
// branch-free variants run straight-line across lanes; the renormalizing
// TD/QD variants fall back to a per-lane scalar loop inside renormalization.

#ifndef MW_BATCH_HPP
#define MW_BATCH_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "mw/arith.hpp"
#include "mw/multiword.hpp"

namespace mw {

template <int K, int W>
using LaneBatch = MultiWord<K, Lanes<W>>;

/// Packs values into ceil(n / W) batches; the tail is padded with zeros.
/// Throws std::invalid_argument for an empty input.
template <int K, int W>
std::vector<LaneBatch<K, W>> pack(std::span<const MultiWord<K>> values) {
  if (values.empty()) throw std::invalid_argument("pack: no values");
  std::vector<LaneBatch<K, W>> out((values.size() + W - 1) / W);
  for (std::size_t i = 0; i < values.size(); ++i)
    set_lane(out[i / W], static_cast<int>(i % W), values[i]);
  return out;
}

/// Inverse of pack; `count` drops the padding lanes.
template <int K, int W>
std::vector<MultiWord<K>> unpack(std::span<const LaneBatch<K, W>> batches, std::size_t count) {
  if (count > batches.size() * W) throw std::invalid_argument("unpack: count exceeds lanes");
  std::vector<MultiWord<K>> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = lane(batches[i / W], static_cast<int>(i % W));
  return out;
}

template <int K, int W>
LaneBatch<K, W> batch_add(const LaneBatch<K, W>& a, const LaneBatch<K, W>& b, Variant v) {
  return add(a, b, v);
}

template <int K, int W>
LaneBatch<K, W> batch_mul(const LaneBatch<K, W>& a, const LaneBatch<K, W>& b, Variant v) {
  return mul(a, b, v);
}

template <int K, int W>
LaneBatch<K, W> batch_div(const LaneBatch<K, W>& a, const LaneBatch<K, W>& b, Variant v) {
  return div(a, b, v);
}

/// Runs f.template operator()<W>() for the compiled width nearest to `width`
/// (2, 4 or 8). Throws std::invalid_argument for other widths.
template <class F>
decltype(auto) with_lane_width(int width, F&& f) {
  switch (width) {
    case 2: return f.template operator()<2>();
    case 4: return f.template operator()<4>();
    case 8: return f.template operator()<8>();
    default: throw std::invalid_argument("lane width must be 2, 4 or 8");
  }
}

}  // namespace mw

#endif  // MW_BATCH_HPP
