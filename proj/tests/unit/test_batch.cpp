#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "mw/batch.hpp"
#include "mw/rng.hpp"

namespace {

using mw::MultiWord;
using mw::Variant;

template <int K>
MultiWord<K> random_mw(mw::Rng& rng) {
  MultiWord<K> x;
  x[0] = std::ldexp(rng.uniform(-2.0, 2.0), static_cast<int>(rng.uniform_int(-200, 200)));
  for (int i = 1; i < K; ++i) x[i] = x[i - 1] * 0x1p-53 * rng.uniform(-1.0, 1.0);
  return x;
}

template <int K, int W>
void check_lanes_match(Variant v, std::uint64_t seed) {
  mw::Rng rng(seed);
  for (int t = 0; t < 300; ++t) {
    mw::LaneBatch<K, W> a, b;
    MultiWord<K> xs[W], ys[W];
    for (int l = 0; l < W; ++l) {
      xs[l] = random_mw<K>(rng);
      ys[l] = random_mw<K>(rng);
      mw::set_lane(a, l, xs[l]);
      mw::set_lane(b, l, ys[l]);
    }
    const auto s = mw::batch_add(a, b, v), p = mw::batch_mul(a, b, v), q = mw::batch_div(a, b, v);
    for (int l = 0; l < W; ++l) {
      ASSERT_TRUE(mw::bitwise_equal(mw::lane(s, l), mw::add(xs[l], ys[l], v)));
      ASSERT_TRUE(mw::bitwise_equal(mw::lane(p, l), mw::mul(xs[l], ys[l], v)));
      ASSERT_TRUE(mw::bitwise_equal(mw::lane(q, l), mw::div(xs[l], ys[l], v)));
    }
  }
}

TEST(Batch, LanesMatchScalarDD) {
  for (Variant v : {Variant::Standard, Variant::BranchFree}) {
    check_lanes_match<2, 2>(v, 1);
    check_lanes_match<2, 4>(v, 2);
    check_lanes_match<2, 8>(v, 3);
  }
}

TEST(Batch, LanesMatchScalarTD) {
  for (Variant v : {Variant::Standard, Variant::BranchFree}) {
    check_lanes_match<3, 2>(v, 4);
    check_lanes_match<3, 4>(v, 5);
    check_lanes_match<3, 8>(v, 6);
  }
}

TEST(Batch, LanesMatchScalarQD) {
  for (Variant v : {Variant::Standard, Variant::BranchFree}) {
    check_lanes_match<4, 2>(v, 7);
    check_lanes_match<4, 4>(v, 8);
    check_lanes_match<4, 8>(v, 9);
  }
}

TEST(Batch, IdenticalLanesGiveIdenticalResults) {
  const auto x = mw::TD{{1.5, 0x1p-55, -0x1p-110}}, y = mw::TD{{-0.75, 0x1p-60, 0.0}};
  const auto a = mw::splat<4>(x), b = mw::splat<4>(y);
  const auto r = mw::batch_mul(a, b, Variant::Standard);
  const auto s = mw::mul(x, y, Variant::Standard);
  for (int l = 0; l < 4; ++l) EXPECT_TRUE(mw::bitwise_equal(mw::lane(r, l), s));
}

TEST(Batch, LanesAreIndependent) {
  // One lane with huge values must not perturb a neighbouring tiny lane.
  mw::LaneBatch<2, 2> a, b;
  mw::set_lane(a, 0, mw::DD{{1e300, 1e283}});
  mw::set_lane(b, 0, mw::DD{{1e300, -1e283}});
  mw::set_lane(a, 1, mw::DD{{1e-300, 0.0}});
  mw::set_lane(b, 1, mw::DD{{3e-300, 0.0}});
  const auto r = mw::batch_add(a, b, Variant::BranchFree);
  EXPECT_TRUE(mw::bitwise_equal(mw::lane(r, 1), mw::add(mw::DD{{1e-300, 0.0}}, mw::DD{{3e-300, 0.0}},
                                                        Variant::BranchFree)));
}

TEST(Batch, PackUnpackRoundTrip) {
  mw::Rng rng(10);
  std::vector<mw::QD> v(11);
  for (auto& x : v) x = random_mw<4>(rng);
  const auto packed = mw::pack<4, 4>(std::span<const mw::QD>(v));
  ASSERT_EQ(packed.size(), 3U);
  // Padding lanes are zero.
  for (int l = 3; l < 4; ++l)
    for (int c = 0; c < 4; ++c) EXPECT_EQ(packed[2][c][l], 0.0);
  const auto back = mw::unpack<4, 4>(std::span<const mw::LaneBatch<4, 4>>(packed), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_TRUE(mw::bitwise_equal(back[i], v[i]));
  EXPECT_THROW((mw::pack<4, 4>(std::span<const mw::QD>())), std::invalid_argument);
  EXPECT_THROW((mw::unpack<4, 4>(std::span<const mw::LaneBatch<4, 4>>(packed), 13)),
               std::invalid_argument);
}

TEST(Batch, LaneWidthDispatch) {
  EXPECT_EQ(mw::with_lane_width(4, []<int W>() { return W; }), 4);
  EXPECT_THROW(mw::with_lane_width(3, []<int W>() { return W; }), std::invalid_argument);
  const int w = mw::native_lane_width();
  EXPECT_TRUE(w == 2 || w == 4 || w == 8);
}

}  // namespace
