#include <gtest/gtest.h>

#include <cmath>

#include "counting_float.hpp"
#include "mw/arith.hpp"
#include "mw/complex.hpp"
#include "mw/oracle.hpp"
#include "mw/rng.hpp"

namespace {

using mw::MultiWord;
using mw::Rational;
using mw::Variant;

template <int K>
MultiWord<K> random_mw(mw::Rng& rng, int lo = -100, int hi = 100) {
  MultiWord<K> x;
  x[0] = std::ldexp(rng.uniform(1.0, 2.0), static_cast<int>(rng.uniform_int(lo, hi)));
  if (rng.next() & 1U) x[0] = -x[0];
  for (int i = 1; i < K; ++i) x[i] = x[i - 1] * 0x1p-53 * rng.uniform(-1.0, 1.0);
  return x;
}

// log2 of |approx - exact| / |exact|, or -inf when exact.
double rel_err_log2(const Rational& approx, const Rational& exact) {
  const Rational d = (approx - exact).abs();
  if (d.is_zero()) return -INFINITY;
  return static_cast<double>(d.floor_log2() - exact.floor_log2());
}

// |c[i+1]| <= ulp(c[i]) / 2 for consecutive nonzero components.
template <int K>
bool nonoverlapping(const MultiWord<K>& x) {
  for (int i = 0; i + 1 < K; ++i) {
    if (x[i] == 0.0) {
      if (x[i + 1] != 0.0) return false;
      continue;
    }
    const double half_ulp = std::ldexp(1.0, std::ilogb(x[i]) - 53);
    if (std::fabs(x[i + 1]) > half_ulp) return false;
  }
  return true;
}

template <class T>
class MultiWordTyped : public ::testing::Test {};

template <int K, Variant V>
struct Cfg {
  static constexpr int k = K;
  static constexpr Variant v = V;
};

using Configs = ::testing::Types<Cfg<2, Variant::Standard>, Cfg<2, Variant::BranchFree>,
                                 Cfg<3, Variant::Standard>, Cfg<3, Variant::BranchFree>,
                                 Cfg<4, Variant::Standard>, Cfg<4, Variant::BranchFree>>;
TYPED_TEST_SUITE(MultiWordTyped, Configs);

TYPED_TEST(MultiWordTyped, AddZeroIsIdentity) {
  constexpr int K = TypeParam::k;
  mw::Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_mw<K>(rng);
    const auto r = mw::add<TypeParam::v>(x, MultiWord<K>{});
    EXPECT_EQ(mw::to_oracle(r), mw::to_oracle(x));
  }
}

TYPED_TEST(MultiWordTyped, AddNegationCancels) {
  constexpr int K = TypeParam::k;
  mw::Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_mw<K>(rng);
    const auto r = mw::sub<TypeParam::v>(x, x);
    for (int i = 0; i < K; ++i) EXPECT_EQ(r[i], 0.0);
  }
}

TYPED_TEST(MultiWordTyped, MulOneIsIdentity) {
  constexpr int K = TypeParam::k;
  mw::Rng rng(3);
  const auto one = MultiWord<K>::from_base(1.0);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_mw<K>(rng);
    EXPECT_EQ(mw::to_oracle(mw::mul<TypeParam::v>(x, one)), mw::to_oracle(x));
  }
}

TYPED_TEST(MultiWordTyped, SmallIntegersMultiplyExactly) {
  constexpr int K = TypeParam::k;
  const auto r = mw::mul<TypeParam::v>(MultiWord<K>::from_base(2.0), MultiWord<K>::from_base(3.0));
  EXPECT_EQ(r[0], 6.0);
  for (int i = 1; i < K; ++i) EXPECT_EQ(r[i], 0.0);
}

TYPED_TEST(MultiWordTyped, DivByOneAndSelf) {
  constexpr int K = TypeParam::k;
  constexpr int b = mw::precision_bits<K>;
  mw::Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_mw<K>(rng);
    EXPECT_LE(rel_err_log2(mw::to_oracle(mw::div<TypeParam::v>(x, MultiWord<K>::from_base(1.0))),
                           mw::to_oracle(x)),
              -b + 4);
    EXPECT_LE(rel_err_log2(mw::to_oracle(mw::div<TypeParam::v>(x, x)), Rational(1)), -b + 4);
  }
}

TYPED_TEST(MultiWordTyped, OneThird) {
  constexpr int K = TypeParam::k;
  const auto r = mw::div<TypeParam::v>(MultiWord<K>::from_base(1.0), MultiWord<K>::from_base(3.0));
  EXPECT_LE(rel_err_log2(mw::to_oracle(r), Rational(1) / Rational(3)),
            -mw::precision_bits<K> + 2);
}

TYPED_TEST(MultiWordTyped, OracleSweep) {
  constexpr int K = TypeParam::k;
  constexpr Variant V = TypeParam::v;
  constexpr int bound = -mw::precision_bits<K> + 4;
  mw::Rng rng(5 + K);
  for (int t = 0; t < 3000; ++t) {
    const auto x = random_mw<K>(rng);
    auto y = random_mw<K>(rng);
    if (t % 4 == 0) {  // near cancellation
      y = mw::neg(x);
      y[K - 1] = y[K - 1] * 0.75;
    }
    const Rational rx = mw::to_oracle(x), ry = mw::to_oracle(y);
    const Rational s = rx + ry;
    if (!s.is_zero()) ASSERT_LE(rel_err_log2(mw::to_oracle(mw::add<V>(x, y)), s), bound);
    ASSERT_LE(rel_err_log2(mw::to_oracle(mw::mul<V>(x, y)), rx * ry), bound);
    ASSERT_LE(rel_err_log2(mw::to_oracle(mw::div<V>(x, y)) * ry, rx), bound);
  }
}

TYPED_TEST(MultiWordTyped, StandardOutputsAreNonoverlapping) {
  constexpr int K = TypeParam::k;
  if constexpr (TypeParam::v == Variant::Standard) {
    mw::Rng rng(6);
    for (int t = 0; t < 2000; ++t) {
      const auto x = random_mw<K>(rng), y = random_mw<K>(rng);
      ASSERT_TRUE(nonoverlapping(mw::add<Variant::Standard>(x, y)));
      ASSERT_TRUE(nonoverlapping(mw::mul<Variant::Standard>(x, y)));
    }
  }
}

TYPED_TEST(MultiWordTyped, NegOfZeroIsZero) {
  constexpr int K = TypeParam::k;
  const auto z = mw::neg(MultiWord<K>{});
  for (int i = 0; i < K; ++i) EXPECT_EQ(z[i], 0.0);
}

TEST(DoubleWord, SloppyAndAccurateOnSmallCase) {
  const mw::DD a{{1.0, 0x1p-60}}, b{{0x1p-53, 0.0}};
  const Rational exact = mw::to_oracle(a) + mw::to_oracle(b);
  EXPECT_LE(rel_err_log2(mw::to_oracle(mw::dw_add_sloppy(a, b)), exact), -104);
  EXPECT_LE(rel_err_log2(mw::to_oracle(mw::dw_add_accurate(a, b)), exact), -104);
  EXPECT_LE(rel_err_log2(mw::to_oracle(mw::dw_add_bf(a, b)), exact), -104);
}

TEST(DoubleWord, BranchFreeAgreesWithAccurate) {
  mw::Rng rng(7);
  for (int t = 0; t < 5000; ++t) {
    const auto x = random_mw<2>(rng), y = random_mw<2>(rng);
    const Rational p = mw::to_oracle(mw::dw_add_bf(x, y));
    const Rational q = mw::to_oracle(mw::dw_add_accurate(x, y));
    if (!q.is_zero()) ASSERT_LE(rel_err_log2(p, q), -104);
  }
}

TEST(DoubleWord, SloppyLosesAccuracyUnderCancellation) {
  // (1 + 2^-60) + (-1 + 2^-100): the sloppy merge drops the small tails' error.
  const mw::DD a{{1.0, 0x1p-60}}, b{{-1.0, 0x1p-100}};
  const Rational exact = mw::to_oracle(a) + mw::to_oracle(b);
  EXPECT_EQ(mw::to_oracle(mw::dw_add_accurate(a, b)), exact);
}

TEST(TripleWord, RenormalizeExamples) {
  auto r = mw::tw_renormalize(5.0, 0.0, 0.0, 0.0);
  EXPECT_EQ(r[0], 5.0);
  EXPECT_EQ(r[1], 0.0);
  EXPECT_EQ(r[2], 0.0);
  r = mw::tw_renormalize(1.0, 0x1p-60, 0x1p-120, 0.0);
  EXPECT_EQ(r[0], 1.0);
  EXPECT_EQ(r[1], 0x1p-60);
  EXPECT_EQ(r[2], 0x1p-120);
  r = mw::tw_renormalize(1.0, 1.0, 0x1p-60, 0.0);
  EXPECT_EQ(mw::to_oracle(r), Rational(2) + Rational::from_double(0x1p-60));
  EXPECT_TRUE(nonoverlapping(r));
}

TEST(QuadWord, RenormalizeExamples) {
  auto r = mw::qw_renormalize(5.0, 0.0, 0.0, 0.0, 0.0);
  EXPECT_EQ(r[0], 5.0);
  for (int i = 1; i < 4; ++i) EXPECT_EQ(r[i], 0.0);
  r = mw::qw_renormalize(1.0, 0x1p-60, 0x1p-120, 0x1p-180, 0.0);
  EXPECT_EQ(r[3], 0x1p-180);
  r = mw::qw_renormalize(1.0, 1.0, 0x1p-60, 0.0, 0.0);
  EXPECT_EQ(mw::to_oracle(r), Rational(2) + Rational::from_double(0x1p-60));
  EXPECT_TRUE(nonoverlapping(r));
}

TEST(Complex, MulByOneAndISquared) {
  using C = mw::ComplexMW<3>;
  const C one{mw::TD::from_base(1.0), {}};
  const C i{{}, mw::TD::from_base(1.0)};
  const C z{mw::TD::from_base(1.25), mw::TD::from_base(-0.5)};
  const C r = mw::cmul<Variant::Standard>(z, one);
  EXPECT_EQ(mw::to_oracle(r.re), mw::to_oracle(z.re));
  EXPECT_EQ(mw::to_oracle(r.im), mw::to_oracle(z.im));
  const C m = mw::cmul<Variant::BranchFree>(i, i);
  EXPECT_EQ(m.re[0], -1.0);
  EXPECT_EQ(m.im[0], 0.0);
}

TEST(Complex, ThreeMultMatchesFourMult) {
  mw::Rng rng(8);
  for (int t = 0; t < 2000; ++t) {
    const mw::ComplexMW<4> x{random_mw<4>(rng, -4, 4), random_mw<4>(rng, -4, 4)};
    const mw::ComplexMW<4> y{random_mw<4>(rng, -4, 4), random_mw<4>(rng, -4, 4)};
    const auto a = mw::cmul<Variant::Standard>(x, y), b = mw::cmul4<Variant::Standard>(x, y);
    // Entrywise within 2 ulps of |x||y|.
    const double scale = std::hypot(x.re[0], x.im[0]) * std::hypot(y.re[0], y.im[0]);
    const Rational ulp = Rational::from_double(std::ldexp(1.0, std::ilogb(scale) - 211));
    ASSERT_LE((mw::to_oracle(a.re) - mw::to_oracle(b.re)).abs(), ulp * Rational(2));
    ASSERT_LE((mw::to_oracle(a.im) - mw::to_oracle(b.im)).abs(), ulp * Rational(2));
  }
}

TEST(Complex, DivisionInvertsMultiplication) {
  mw::Rng rng(9);
  for (int t = 0; t < 500; ++t) {
    const mw::ComplexMW<2> x{random_mw<2>(rng, -3, 3), random_mw<2>(rng, -3, 3)};
    const mw::ComplexMW<2> y{random_mw<2>(rng, -3, 3), random_mw<2>(rng, -3, 3)};
    const auto q = mw::cdiv<Variant::Standard>(mw::cmul<Variant::Standard>(x, y), y);
    const double scale = std::hypot(x.re[0], x.im[0]);
    const double tol = std::ldexp(scale, -95);
    ASSERT_LE(std::fabs((mw::to_oracle(q.re) - mw::to_oracle(x.re)).to_double()), tol);
    ASSERT_LE(std::fabs((mw::to_oracle(q.im) - mw::to_oracle(x.im)).to_double()), tol);
  }
}

// Operation counts per call, measured with an instrumented base float.

template <int K, Variant V, class Op>
std::uint64_t ops_for(Op op) {
  using mw::testing::CountingFloat;
  mw::Rng rng(10);
  std::uint64_t worst = 0;
  for (int t = 0; t < 200; ++t) {
    const auto x = random_mw<K>(rng, -3, 3), y = random_mw<K>(rng, -3, 3);
    MultiWord<K, CountingFloat> cx, cy;
    for (int i = 0; i < K; ++i) {
      cx[i] = CountingFloat(x[i]);
      cy[i] = CountingFloat(y[i]);
    }
    mw::testing::op_counts() = {};
    (void)op(cx, cy);
    worst = std::max(worst, mw::testing::op_counts().total());
  }
  return worst;
}

template <int K, Variant V>
std::uint64_t add_ops() {
  return ops_for<K, V>([](const auto& a, const auto& b) { return mw::add<V>(a, b); });
}
template <int K, Variant V>
std::uint64_t mul_ops() {
  return ops_for<K, V>([](const auto& a, const auto& b) { return mw::mul<V>(a, b); });
}

TEST(OperationCount, CountingFloatTracksValues) {
  using mw::testing::CountingFloat;
  const MultiWord<3, CountingFloat> a{{CountingFloat(1.0), CountingFloat(0x1p-60), CountingFloat(0.0)}};
  const auto r = mw::mul<Variant::BranchFree>(a, a);
  EXPECT_EQ(r[0].v, 1.0);
  EXPECT_EQ(r[1].v, 0x1p-59);
}

TEST(OperationCount, DoubleWordBranchFreeIsNotCheaper) {
  EXPECT_GE((add_ops<2, Variant::BranchFree>()), (add_ops<2, Variant::Standard>()));
  EXPECT_GE((mul_ops<2, Variant::BranchFree>()), (mul_ops<2, Variant::Standard>()));
}

TEST(OperationCount, TripleWordAdd) {
  const auto s = add_ops<3, Variant::Standard>(), b = add_ops<3, Variant::BranchFree>();
  EXPECT_LT(b, s) << "branch-free " << b << " vs standard " << s;
}

TEST(OperationCount, TripleWordMul) {
  const auto s = mul_ops<3, Variant::Standard>(), b = mul_ops<3, Variant::BranchFree>();
  EXPECT_LT(b, s) << "branch-free " << b << " vs standard " << s;
}

TEST(OperationCount, QuadWordAdd) {
  const auto s = add_ops<4, Variant::Standard>(), b = add_ops<4, Variant::BranchFree>();
  const auto sloppy = ops_for<4, Variant::Standard>(
      [](const auto& x, const auto& y) { return mw::qw_add_sloppy(x, y); });
  EXPECT_LT(b, s) << "branch-free " << b << " vs standard " << s << " (sloppy form " << sloppy
                  << ")";
}

TEST(OperationCount, QuadWordMul) {
  const auto s = mul_ops<4, Variant::Standard>(), b = mul_ops<4, Variant::BranchFree>();
  EXPECT_LT(b, s) << "branch-free " << b << " vs standard " << s;
}

}  // namespace
