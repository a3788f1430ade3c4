#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "mw/linalg.hpp"

namespace {

using mw::MatMulPlan;
using mw::MWMatrix;
using mw::Rational;
using mw::Scheme;
using mw::Variant;

MatMulPlan plan(Scheme s, Variant v = Variant::Standard, bool simd = false, int threads = 1) {
  MatMulPlan p;
  p.scheme = s;
  p.variant = v;
  p.simd = simd;
  p.threads = threads;
  return p;
}

// Largest |x - y| over entries, in ulps of sum_k |a_ik||b_kj|.
template <int K>
double max_ulps(const MWMatrix<K>& x, const MWMatrix<K>& y, const MWMatrix<K>& a,
                const MWMatrix<K>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      double scale = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) scale += std::fabs(a.at(i, k)[0] * b.at(k, j)[0]);
      const Rational d = (mw::to_oracle(x.at(i, j)) - mw::to_oracle(y.at(i, j))).abs();
      if (!d.is_zero())
        worst = std::max(worst, d.ldexp(mw::precision_bits<K> - 1 - std::ilogb(scale)).to_double());
    }
  return worst;
}

TEST(TestMatrices, Formula) {
  const auto [a1, b1] = mw::gen_test_matrices<2>(1);
  EXPECT_EQ(mw::to_oracle(a1.at(0, 0)), mw::to_oracle(mw::sqrt_constant<2>(5)));
  EXPECT_EQ(mw::to_oracle(b1.at(0, 0)), mw::to_oracle(mw::sqrt_constant<2>(3)));
  const auto [a2, b2] = mw::gen_test_matrices<3>(2);
  EXPECT_EQ(mw::to_oracle(a2.at(1, 1)),
            mw::to_oracle(mw::mul(mw::sqrt_constant<3>(5), mw::TD::from_base(3.0))));
  EXPECT_EQ(mw::to_oracle(b2.at(1, 0)), mw::to_oracle(b2.at(1, 1)));
  EXPECT_EQ(mw::to_oracle(b2.at(0, 0)),
            mw::to_oracle(mw::mul(mw::sqrt_constant<3>(3), mw::TD::from_base(2.0))));
}

TEST(TestMatrices, ComplexSeedReproducible) {
  const auto [a, b] = mw::gen_complex_test_matrices<2>(8, 42);
  const auto [c, d] = mw::gen_complex_test_matrices<2>(8, 42);
  EXPECT_EQ(a.re, c.re);
  EXPECT_EQ(a.im, c.im);
  EXPECT_EQ(b.re, d.re);
  const auto [e, f] = mw::gen_complex_test_matrices<2>(1, 42);
  EXPECT_EQ(e.rows(), 1U);
  EXPECT_EQ(f.cols(), 1U);
}

TEST(TestMatrices, ComplexEntryMagnitudes) {
  // |exp(N) (U - 1/2)| has median about 1/4: exp(N) has median 1, |U - 1/2| median 1/4.
  const auto [a, b] = mw::gen_complex_test_matrices<2>(100, 7);
  std::vector<double> m;
  for (std::size_t i = 0; i < 100; ++i)
    for (std::size_t j = 0; j < 100; ++j) m.push_back(std::fabs(a.re.at(i, j)[0]));
  std::nth_element(m.begin(), m.begin() + m.size() / 2, m.end());
  EXPECT_NEAR(m[m.size() / 2], 0.25, 0.05);
}

TEST(Matmul, IdentityIsExactForNaive) {
  const auto a = mw::random_matrix<3>(9, 9, 1);
  EXPECT_EQ(mw::matmul(a, MWMatrix<3>::identity(9), plan(Scheme::Naive)), a);
}

TEST(Matmul, SmallProductMatchesOracle) {
  const auto [a, b] = mw::gen_test_matrices<2>(4);
  const auto exact = mw::oracle_product(a, b);
  const auto n = mw::matmul(a, b, plan(Scheme::Naive));
  auto sp = plan(Scheme::Strassen);
  sp.strassen_cutoff = 2;
  const auto s = mw::matmul(a, b, sp);
  EXPECT_LE(max_ulps(n, s, a, b), 8.0);
  EXPECT_GE(mw::digit_range(n, exact).min, 29.0);
  EXPECT_GE(mw::digit_range(s, exact).min, 29.0);
}

TEST(Matmul, NaiveBlockedAndSimdAreBitwiseEqual) {
  const auto a = mw::random_matrix<4>(37, 45, 2), b = mw::random_matrix<4>(45, 29, 3);
  for (Variant v : {Variant::Standard, Variant::BranchFree}) {
    const auto ref = mw::matmul(a, b, plan(Scheme::Naive, v));
    EXPECT_EQ(mw::matmul(a, b, plan(Scheme::Blocked, v)), ref);
    EXPECT_EQ(mw::matmul(a, b, plan(Scheme::Naive, v, true)), ref);
    EXPECT_EQ(mw::matmul(a, b, plan(Scheme::Blocked, v, true)), ref);
    // Rectangular Strassen falls back to the blocked kernel.
    EXPECT_EQ(mw::matmul(a, b, plan(Scheme::Strassen, v)), ref);
  }
}

TEST(Matmul, StrassenOddSizesStayClose) {
  for (std::size_t n : {33U, 65U, 70U}) {
    const auto a = mw::random_matrix<2>(n, n, n), b = mw::random_matrix<2>(n, n, n + 1);
    const auto r = mw::matmul(a, b, plan(Scheme::Naive));
    const auto s = mw::matmul(a, b, plan(Scheme::Strassen));
    EXPECT_LE(max_ulps(r, s, a, b), 8.0) << n;
  }
}

TEST(Matmul, StrassenThreadInvariant) {
  const auto a = mw::random_matrix<3>(96, 96, 4), b = mw::random_matrix<3>(96, 96, 5);
  const auto one = mw::matmul(a, b, plan(Scheme::Strassen, Variant::BranchFree, true, 1));
  for (int t : {2, 3, 8})
    EXPECT_EQ(mw::matmul(a, b, plan(Scheme::Strassen, Variant::BranchFree, true, t)), one);
}

TEST(Matmul, ShapeAndPlanErrors) {
  const auto a = mw::random_matrix<2>(3, 4, 1);
  EXPECT_THROW(mw::matmul(a, a), std::invalid_argument);
  MatMulPlan p;
  p.threads = 0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.lane_width = 3;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  EXPECT_THROW(MWMatrix<2>(0, 3), std::invalid_argument);
}

TEST(Matadd, AddAndSubtract) {
  const auto a = mw::random_matrix<2>(5, 6, 1), b = mw::random_matrix<2>(5, 6, 2);
  const auto s = mw::matadd(a, b, {}, false);
  const auto d = mw::matadd(s, b, {}, true);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(mw::to_oracle(d.at(i, j)), mw::to_oracle(a.at(i, j)));
}

TEST(ComplexMatmul, IdentityWithinTwoUlps) {
  const auto [a, unused] = mw::gen_complex_test_matrices<3>(8, 1);
  mw::CMWMatrix<3> id(8, 8);
  id.re = MWMatrix<3>::identity(8);
  const auto c = mw::cmatmul(a, id, {});
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const double scale = std::hypot(a.re.at(i, j)[0], a.im.at(i, j)[0]);
      const Rational ulp = Rational::from_double(std::ldexp(1.0, std::ilogb(scale) - 158));
      EXPECT_LE((mw::to_oracle(c.re.at(i, j)) - mw::to_oracle(a.re.at(i, j))).abs(), ulp * Rational(2));
      EXPECT_LE((mw::to_oracle(c.im.at(i, j)) - mw::to_oracle(a.im.at(i, j))).abs(), ulp * Rational(2));
    }
}

TEST(ComplexMatmul, ThreeMultAgreesWithFourMult) {
  const auto [a, b] = mw::gen_complex_test_matrices<4>(4, 3);
  const auto c3 = mw::cmatmul(a, b, {}), c4 = mw::cmatmul_4m(a, b, Variant::Standard);
  const auto exact = mw::oracle_product(a, b);
  EXPECT_GE(mw::digit_range(c3, exact).min, 55.8);
  EXPECT_GE(mw::digit_range(c4, exact).min, 55.8);
}

TEST(ComplexMatmul, SchemesAgreeBitwiseWhereExpected) {
  const auto [a, b] = mw::gen_complex_test_matrices<2>(20, 9);
  const auto n = mw::cmatmul(a, b, plan(Scheme::Naive));
  const auto bl = mw::cmatmul(a, b, plan(Scheme::Blocked, Variant::Standard, true));
  EXPECT_EQ(n.re, bl.re);
  EXPECT_EQ(n.im, bl.im);
}

TEST(MatrixFiles, RoundTrip) {
  const auto a = mw::random_matrix<3>(3, 4, 8);
  std::stringstream ss;
  mw::write_matrix(ss, a);
  EXPECT_EQ(mw::read_matrix<3>(ss), a);
  const auto [c, d] = mw::gen_complex_test_matrices<2>(3, 1);
  std::stringstream cs;
  mw::write_matrix(cs, c);
  const auto back = mw::read_complex_matrix<2>(cs);
  EXPECT_EQ(back.re, c.re);
  EXPECT_EQ(back.im, c.im);
  std::stringstream bad("MW 2 2 2\n1 2 3\n");
  EXPECT_THROW(mw::read_matrix<2>(bad), std::runtime_error);
  std::stringstream wrong_k("MW 3 1 1\n1\n");
  EXPECT_THROW(mw::read_matrix<2>(wrong_k), std::runtime_error);
}

}  // namespace
