#include "mw/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace mw {

bool OracleValue::is_zero() const {
  return std::visit([](const auto& v) { return v.is_zero(); }, v_);
}

int OracleValue::sign() const {
  return std::visit([](const auto& v) { return v.sign(); }, v_);
}

Rational OracleValue::to_rational() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return *q;
  return std::get<BigFloat>(v_).to_rational();
}

BigFloat OracleValue::to_bigfloat(int bits) const {
  if (const auto* q = std::get_if<Rational>(&v_)) return BigFloat::from_rational(*q, bits);
  const auto& f = std::get<BigFloat>(v_);
  return BigFloat::round(f.is_negative(), f.mantissa(), f.exponent(), bits);
}

OracleValue exact_add(const OracleValue& a, const OracleValue& b) {
  if (a.mode() == OracleValue::Mode::Exact && b.mode() == OracleValue::Mode::Exact)
    return a.to_rational() + b.to_rational();
  return add(a.to_bigfloat(), b.to_bigfloat());
}

OracleValue exact_sub(const OracleValue& a, const OracleValue& b) {
  if (a.mode() == OracleValue::Mode::Exact && b.mode() == OracleValue::Mode::Exact)
    return a.to_rational() - b.to_rational();
  return sub(a.to_bigfloat(), b.to_bigfloat());
}

OracleValue exact_mul(const OracleValue& a, const OracleValue& b) {
  if (a.mode() == OracleValue::Mode::Exact && b.mode() == OracleValue::Mode::Exact)
    return a.to_rational() * b.to_rational();
  return mul(a.to_bigfloat(), b.to_bigfloat());
}

OracleValue exact_div(const OracleValue& a, const OracleValue& b) {
  if (b.is_zero()) throw std::domain_error("oracle division by zero");
  if (a.mode() == OracleValue::Mode::Exact && b.mode() == OracleValue::Mode::Exact)
    return a.to_rational() / b.to_rational();
  return div(a.to_bigfloat(), b.to_bigfloat());
}

double log10_abs(const Rational& q) {
  const long e = q.floor_log2();
  const double m = q.abs().ldexp(-e).to_double();  // [1, 2)
  return (static_cast<double>(e) + std::log2(m)) * 0.30102999566398120;
}

double significant_digits(const Rational& approx, const Rational& exact, double cap) {
  const Rational err = (approx - exact).abs();
  if (err.is_zero()) return cap;
  double d;
  if (exact.is_zero()) d = -log10_abs(err);
  else d = log10_abs(exact) - log10_abs(err);
  return d < cap ? d : cap;
}

BigFloat oracle_sqrt(const OracleValue& v, int bits) { return bf_sqrt(v.to_bigfloat(bits + 8), bits); }
BigFloat oracle_exp(const OracleValue& v, int bits) { return bf_exp(v.to_bigfloat(bits + 64), bits); }
BigFloat oracle_log(const OracleValue& v, int bits) { return bf_log(v.to_bigfloat(bits + 64), bits); }
BigFloat oracle_pi(int bits) { return bf_pi(bits); }
BigFloat oracle_pow(const OracleValue& v, long p, long q, int bits) {
  return bf_pow(v.to_bigfloat(bits + 64), p, q, bits);
}

BigComplex cadd(const BigComplex& a, const BigComplex& b, int bits) {
  return {add(a.re, b.re, bits), add(a.im, b.im, bits)};
}

BigComplex csub(const BigComplex& a, const BigComplex& b, int bits) {
  return {sub(a.re, b.re, bits), sub(a.im, b.im, bits)};
}

BigComplex cmul(const BigComplex& a, const BigComplex& b, int bits) {
  const int wp = bits + 8;
  return {BigFloat(sub(mul(a.re, b.re, wp), mul(a.im, b.im, wp), bits)),
          BigFloat(add(mul(a.re, b.im, wp), mul(a.im, b.re, wp), bits))};
}

BigComplex cdiv(const BigComplex& a, const BigComplex& b, int bits) {
  const int wp = bits + 16;
  const BigFloat den = add(mul(b.re, b.re, wp), mul(b.im, b.im, wp), wp);
  if (den.is_zero()) throw std::domain_error("oracle complex division by zero");
  const BigFloat re = add(mul(a.re, b.re, wp), mul(a.im, b.im, wp), wp);
  const BigFloat im = sub(mul(a.im, b.re, wp), mul(a.re, b.im, wp), wp);
  return {div(re, den, bits), div(im, den, bits)};
}

BigFloat cabs(const BigComplex& a, int bits) {
  const int wp = bits + 8;
  return bf_sqrt(add(mul(a.re, a.re, wp), mul(a.im, a.im, wp), wp), bits);
}

std::vector<BigFloat> oracle_matmul(const std::vector<BigFloat>& a, const std::vector<BigFloat>& b,
                                    std::size_t n, std::size_t m, std::size_t p, int bits) {
  if (a.size() != n * m || b.size() != m * p) throw std::invalid_argument("oracle_matmul: shape");
  std::vector<BigFloat> c(n * p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      BigFloat s;
      for (std::size_t k = 0; k < m; ++k) s = add(s, mul(a[i * m + k], b[k * p + j], bits), bits);
      c[i * p + j] = s;
    }
  return c;
}

std::vector<Rational> oracle_matmul_exact(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b, std::size_t n,
                                          std::size_t m, std::size_t p) {
  if (a.size() != n * m || b.size() != m * p)
    throw std::invalid_argument("oracle_matmul_exact: shape");
  std::vector<Rational> c(n * p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      Rational s;
      for (std::size_t k = 0; k < m; ++k) s += a[i * m + k] * b[k * p + j];
      c[i * p + j] = s;
    }
  return c;
}

BigFloat oracle_horner(const std::vector<BigFloat>& coeffs, const BigFloat& x, int bits) {
  if (coeffs.empty()) return {};
  BigFloat r = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) r = add(mul(r, x, bits), coeffs[i], bits);
  return r;
}

BigComplex oracle_horner(const std::vector<BigComplex>& coeffs, const BigComplex& z, int bits) {
  if (coeffs.empty()) return {};
  BigComplex r = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) r = cadd(cmul(r, z, bits), coeffs[i], bits);
  return r;
}

namespace {

BigComplex eval_monic(const std::vector<BigFloat>& c, const BigComplex& z, int bits) {
  BigComplex r{BigFloat::from_double(1.0, bits), BigFloat{}};
  for (std::size_t i = c.size(); i-- > 0;) {
    r = cmul(r, z, bits);
    r.re = add(r.re, c[i], bits);
  }
  return r;
}

}  // namespace

OracleDkResult oracle_dk(const std::vector<BigFloat>& monic_coeffs, std::vector<BigComplex> start,
                         long tol_log2, int max_iter, int bits) {
  const std::size_t n = monic_coeffs.size();
  if (start.size() != n) throw std::invalid_argument("oracle_dk: start size must equal degree");
  OracleDkResult res;
  res.roots = std::move(start);
  for (int it = 1; it <= max_iter; ++it) {
    std::vector<BigComplex> next(n);
    BigFloat max_dz, max_z;
    for (std::size_t i = 0; i < n; ++i) {
      BigComplex den{BigFloat::from_double(1.0, bits), BigFloat{}};
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den = cmul(den, csub(res.roots[i], res.roots[j], bits), bits);
      const BigComplex dz = cdiv(eval_monic(monic_coeffs, res.roots[i], bits), den, bits);
      next[i] = csub(res.roots[i], dz, bits);
      const BigFloat adz = cabs(dz, bits), az = cabs(next[i], bits);
      if (adz > max_dz) max_dz = adz;
      if (az > max_z) max_z = az;
    }
    res.roots = std::move(next);
    res.iterations = it;
    if (max_dz.is_zero() || max_dz <= max_z.ldexp(tol_log2)) {
      res.converged = true;
      break;
    }
  }
  return res;
}

BigFloat oracle_residual(const std::vector<BigFloat>& monic_coeffs,
                         const std::vector<BigComplex>& roots, int bits) {
  BigFloat worst;
  for (const auto& z : roots) {
    const BigFloat r = cabs(eval_monic(monic_coeffs, z, bits), bits);
    if (r > worst) worst = r;
  }
  return worst;
}

}  // namespace mw
