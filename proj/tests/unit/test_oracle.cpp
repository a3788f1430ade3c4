#include <gtest/gtest.h>

#include <cmath>

#include "mw/convert.hpp"
#include "mw/oracle.hpp"
#include "mw/rng.hpp"

namespace {

using mw::BigFloat;
using mw::OracleValue;
using mw::Rational;

TEST(OracleValue, ExactModeStaysExact) {
  const OracleValue third = mw::exact_div(Rational(1), Rational(3));
  const OracleValue sixth = mw::exact_div(Rational(1), Rational(6));
  const OracleValue sum = mw::exact_add(third, sixth);
  EXPECT_EQ(sum.mode(), OracleValue::Mode::Exact);
  EXPECT_EQ(sum.to_rational(), Rational(1) / Rational(2));
  EXPECT_THROW(mw::exact_div(Rational(1), Rational(0)), std::domain_error);
}

TEST(OracleValue, FloatModeMixes) {
  const OracleValue pi = mw::oracle_pi();
  const OracleValue two_pi = mw::exact_add(pi, pi);
  EXPECT_EQ(two_pi.mode(), OracleValue::Mode::Float);
  EXPECT_EQ(two_pi.to_bigfloat(), mw::oracle_pi().ldexp(1));
  EXPECT_EQ(mw::exact_mul(pi, Rational(0)).sign(), 0);
}

TEST(Oracle, MultiwordRoundTripIsExact) {
  const mw::TD x{{1.0, 0x1p-60, 0x1p-120}};
  EXPECT_EQ(mw::to_oracle(x), Rational(1) + Rational::from_double(0x1p-60) +
                                  Rational::from_double(0x1p-120));
  mw::Rng rng(1);
  for (int t = 0; t < 500; ++t) {
    mw::QD q;
    q[0] = rng.uniform(-10, 10);
    for (int i = 1; i < 4; ++i) q[i] = q[i - 1] * 0x1p-54 * rng.uniform(-1, 1);
    const auto back = mw::from_oracle<4>(mw::to_oracle(q));
    ASSERT_EQ(mw::to_oracle(back), mw::to_oracle(q));
  }
}

TEST(Oracle, SqrtConstantWithinKWordBound) {
  const BigFloat s5 = mw::oracle_sqrt(Rational(5));
  const Rational r5 = s5.to_rational();
  auto rel = [&](const Rational& x) { return ((x - r5) / r5).abs(); };
  EXPECT_LE(rel(mw::to_oracle(mw::sqrt_constant<2>(5))), Rational(1).ldexp(-106));
  EXPECT_LE(rel(mw::to_oracle(mw::sqrt_constant<3>(5))), Rational(1).ldexp(-159));
  EXPECT_LE(rel(mw::to_oracle(mw::sqrt_constant<4>(5))), Rational(1).ldexp(-212));
  EXPECT_EQ(mw::oracle_sqrt(Rational(4)), BigFloat::from_double(2.0));
}

TEST(Oracle, ElementaryFunctions) {
  const BigFloat e = mw::oracle_exp(Rational(1));
  EXPECT_LT((mw::oracle_log(e).to_rational() - Rational(1)).abs(), Rational(1).ldexp(-290));
  EXPECT_THROW(mw::oracle_log(Rational(-1)), std::domain_error);
  EXPECT_THROW(mw::oracle_sqrt(Rational(-1)), std::domain_error);
  const BigFloat c = mw::oracle_pow(Rational(27), 1, 3);
  EXPECT_LT((c.to_rational() - Rational(3)).abs(), Rational(1).ldexp(-290));
}

TEST(SignificantDigits, Definition) {
  const Rational exact(1);
  EXPECT_NEAR(mw::significant_digits(exact + Rational::from_decimal("1e-30"), exact, 64), 30.0, 1e-9);
  EXPECT_EQ(mw::significant_digits(exact, exact, 64), 64.0);
  const mw::DD x = mw::DD::from_base(0.5);
  EXPECT_EQ(mw::significant_digits(x, OracleValue(Rational(1) / Rational(2))), 2.0 * 2 * 16);
  // Exact zero falls back to absolute error.
  EXPECT_NEAR(mw::significant_digits(Rational::from_decimal("1e-20"), Rational(0), 64), 20.0, 1e-9);
}

TEST(SignificantDigits, MonotoneInError) {
  const Rational exact = Rational(1) / Rational(7);
  double prev = 1e9;
  for (int k = 200; k >= 10; k -= 10) {
    const double d = mw::significant_digits(exact + Rational(1).ldexp(-k), exact, 1e9);
    EXPECT_LT(d, prev);
    prev = d;
  }
}

TEST(SignificantDigits, ComplexTakesMinimum) {
  const mw::ComplexMW<2> z{mw::DD::from_base(1.0), mw::DD::from_base(1.0)};
  const mw::BigComplex ex{BigFloat::from_double(1.0),
                          BigFloat::from_rational(Rational(1) + Rational::from_decimal("1e-10"))};
  EXPECT_NEAR(mw::significant_digits(z, ex), 10.0, 1e-6);
}

TEST(OracleKernels, MatmulFloatAgreesWithExact) {
  mw::Rng rng(2);
  const std::size_t n = 6;
  std::vector<BigFloat> a, b;
  std::vector<Rational> ra, rb;
  for (std::size_t i = 0; i < n * n; ++i) {
    const double x = rng.uniform(-1, 1), y = rng.uniform(-1, 1);
    a.push_back(BigFloat::from_double(x));
    b.push_back(BigFloat::from_double(y));
    ra.push_back(Rational::from_double(x));
    rb.push_back(Rational::from_double(y));
  }
  const auto f = mw::oracle_matmul(a, b, n, n, n);
  const auto e = mw::oracle_matmul_exact(ra, rb, n, n, n);
  for (std::size_t i = 0; i < n * n; ++i) EXPECT_EQ(f[i].to_rational(), e[i]);
  const auto one = mw::oracle_matmul({BigFloat::from_double(3.0)}, {BigFloat::from_double(-2.0)}, 1, 1, 1);
  EXPECT_EQ(one[0], BigFloat::from_double(-6.0));
}

TEST(OracleKernels, HornerAndResidual) {
  // x^2 - 2 at sqrt(2) is ~0; coefficients low to high.
  const std::vector<BigFloat> c{BigFloat::from_double(-2.0), BigFloat(), BigFloat::from_double(1.0)};
  const BigFloat r2 = mw::oracle_sqrt(Rational(2));
  EXPECT_LT(mw::oracle_horner(c, r2).abs().to_rational(), Rational(1).ldexp(-295));
  const std::vector<BigFloat> monic{BigFloat::from_double(-1.0), BigFloat()};
  const std::vector<mw::BigComplex> roots{{BigFloat::from_double(1.0), BigFloat()},
                                          {BigFloat::from_double(-1.0), BigFloat()}};
  EXPECT_TRUE(mw::oracle_residual(monic, roots).is_zero());
}

TEST(OracleKernels, DurandKernerQuadratic) {
  const std::vector<BigFloat> monic{BigFloat::from_double(-1.0), BigFloat()};
  std::vector<mw::BigComplex> start{{BigFloat::from_double(0.4), BigFloat::from_double(0.9)},
                                    {BigFloat::from_double(-0.3), BigFloat::from_double(-0.8)}};
  const auto r = mw::oracle_dk(monic, start, -280, 100);
  ASSERT_TRUE(r.converged);
  for (const auto& z : r.roots)
    EXPECT_LT((mw::cabs(z).to_rational() - Rational(1)).abs(), Rational(1).ldexp(-270));
}

}  // namespace
