#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "mw/poly.hpp"

namespace {

using mw::MultiWord;
using mw::MWPolynomial;
using mw::Rational;
using mw::Variant;

template <int K>
MWPolynomial<K> poly(std::initializer_list<double> c) {
  std::vector<MultiWord<K>> a;
  for (double x : c) a.push_back(MultiWord<K>::from_base(x));
  return MWPolynomial<K>(std::move(a));
}

TEST(Horner, ConstantAndIdentity) {
  const auto c = poly<2>({2.5});
  EXPECT_EQ(mw::horner_eval(c, mw::DD::from_base(7.0), Variant::Standard)[0], 2.5);
  const auto id = poly<3>({0.0, 1.0});
  const mw::TD x{{0.3, 1e-18, 1e-35}};
  EXPECT_EQ(mw::to_oracle(mw::horner_eval(id, x, Variant::BranchFree)), mw::to_oracle(x));
}

TEST(Horner, RandomAgainstOracle) {
  mw::Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto p = mw::random_polynomial<4>(15, 100 + t);
    const auto x = mw::QD::from_base(rng.uniform(-1, 1));
    const Rational exact = mw::oracle_eval(p, x).to_rational();
    const Rational err = (mw::to_oracle(mw::horner_eval(p, x, Variant::Standard)) - exact).abs();
    double scale = 0.0;
    for (std::size_t i = 0; i < p.a.size(); ++i) scale += std::fabs(p.a[i][0]) * std::pow(std::fabs(x[0]), i);
    // 15 * 2^(-212 + 4) relative to sum |a_i||x|^i.
    EXPECT_LE(err, Rational::from_double(scale).ldexp(-208) * Rational(15));
  }
}

TEST(Estrin, LowDegreeFormulas) {
  const auto p1 = poly<2>({1.5, -2.0});
  const auto x = mw::DD{{0.7, 1e-17}};
  EXPECT_TRUE(mw::bitwise_equal(mw::estrin_eval(p1, x, Variant::Standard),
                                mw::horner_eval(p1, x, Variant::Standard)));
  const auto p3 = poly<2>({1.0, 2.0, 3.0, 4.0});
  const auto x2 = mw::mul(x, x);
  const auto expect = mw::add(mw::add(mw::DD::from_base(1.0), mw::mul(mw::DD::from_base(2.0), x)),
                              mw::mul(mw::add(mw::DD::from_base(3.0), mw::mul(mw::DD::from_base(4.0), x)), x2));
  EXPECT_TRUE(mw::bitwise_equal(mw::estrin_eval(p3, x, Variant::Standard), expect));
}

TEST(Estrin, MatchesHornerAndOracle) {
  mw::Rng rng(2);
  for (int t = 0; t < 10; ++t) {
    const auto p = mw::random_polynomial<3>(64, 200 + t);
    const auto x = mw::TD::from_base(rng.uniform(-1, 1));
    const auto exact = mw::OracleValue(mw::oracle_eval(p, x));
    EXPECT_GT(mw::significant_digits(mw::estrin_eval(p, x, Variant::BranchFree), exact), 40.0);
    EXPECT_GT(mw::significant_digits(mw::horner_eval(p, x, Variant::BranchFree), exact), 40.0);
  }
}

TEST(EstrinBatched, MatchesScalar) {
  const auto p = mw::random_polynomial<4>(37, 5);
  mw::Rng rng(3);
  mw::LaneBatch<4, 4> xs;
  for (int l = 0; l < 4; ++l) mw::set_lane(xs, l, mw::QD::from_base(rng.uniform(-1, 1)));
  for (Variant v : {Variant::Standard, Variant::BranchFree}) {
    const auto r = mw::estrin_eval_batched(p, xs, v);
    for (int l = 0; l < 4; ++l)
      EXPECT_TRUE(mw::bitwise_equal(mw::lane(r, l), mw::estrin_eval(p, mw::lane(xs, l), v)));
  }
  const auto same = mw::estrin_eval_batched(p, mw::splat<2>(mw::QD::from_base(0.25)), Variant::Standard);
  EXPECT_TRUE(mw::bitwise_equal(mw::lane(same, 0), mw::lane(same, 1)));
}

TEST(ComplexEval, RealArgumentMatchesRealEval) {
  const auto p = mw::random_polynomial<2>(9, 7);
  const auto x = mw::DD::from_base(0.6);
  for (auto m : {mw::EvalMethod::Horner, mw::EvalMethod::Estrin}) {
    const auto z = mw::eval_complex(p, mw::ComplexMW<2>{x, {}}, m, Variant::Standard);
    const auto r = m == mw::EvalMethod::Horner ? mw::horner_eval(p, x, Variant::Standard)
                                               : mw::estrin_eval(p, x, Variant::Standard);
    EXPECT_TRUE(mw::bitwise_equal(z.re, r));
    EXPECT_EQ(z.im[0], 0.0);
  }
}

TEST(ComplexEval, SquareOfI) {
  const auto p = poly<3>({0.0, 0.0, 1.0});
  const mw::ComplexMW<3> i{{}, mw::TD::from_base(1.0)};
  for (auto m : {mw::EvalMethod::Horner, mw::EvalMethod::Estrin}) {
    const auto r = mw::eval_complex(p, i, m, Variant::BranchFree);
    EXPECT_EQ(r.re[0], -1.0);
    EXPECT_EQ(r.im[0], 0.0);
  }
}

TEST(ComplexEval, RandomAgainstOracle) {
  const auto p = mw::random_polynomial<4>(31, 9);
  const mw::ComplexMW<4> z{mw::QD::from_base(0.4), mw::QD::from_base(-0.7)};
  const auto exact = mw::oracle_eval(p, z);
  for (auto m : {mw::EvalMethod::Horner, mw::EvalMethod::Estrin})
    EXPECT_GT(mw::significant_digits(mw::eval_complex(p, z, m, Variant::Standard), exact), 55.0);
}

TEST(RandomPolynomial, SeededAndNonzeroLead) {
  const auto a = mw::random_polynomial<2>(50, 1), b = mw::random_polynomial<2>(50, 1);
  ASSERT_EQ(a.degree(), 50U);
  for (std::size_t i = 0; i <= 50; ++i) EXPECT_TRUE(mw::bitwise_equal(a.a[i], b.a[i]));
  EXPECT_NE(a.a.back()[0], 0.0);
  const auto big = mw::random_polynomial<2>(20000, 2);
  double mean = 0.0;
  for (const auto& c : big.a) {
    EXPECT_GE(c[0], -1.0);
    EXPECT_LT(c[0], 1.0);
    mean += c[0];
  }
  EXPECT_NEAR(mean / 20001.0, 0.0, 0.02);
}

TEST(PolynomialFiles, RoundTrip) {
  const auto p = mw::random_polynomial<3>(5, 3);
  std::stringstream ss;
  mw::write_polynomial(ss, p);
  const auto q = mw::read_polynomial<3>(ss);
  for (std::size_t i = 0; i < p.a.size(); ++i) EXPECT_EQ(mw::to_oracle(q.a[i]), mw::to_oracle(p.a[i]));
  std::stringstream bad("POLY 3 4\n1 2\n");
  EXPECT_THROW(mw::read_polynomial<3>(bad), std::runtime_error);
  EXPECT_THROW(MWPolynomial<2>(std::vector<mw::DD>{}), std::invalid_argument);
}

}  // namespace
