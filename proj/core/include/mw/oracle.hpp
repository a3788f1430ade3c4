// Reference arithmetic for verification.
//
// OracleValue is either an exact rational or a 300-bit BigFloat. Multiword
// values convert to rationals exactly (every component is dyadic), so error
// measurement happens entirely in oracle space. The brute-force kernels at
// the bottom (matmul, Horner, Durand-Kerner, residuals) take plain vectors so
// they share no code with the kernels they check.

#ifndef MW_ORACLE_HPP
#define MW_ORACLE_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "mw/bigfloat.hpp"
#include "mw/complex.hpp"
#include "mw/multiword.hpp"
#include "mw/rational.hpp"

namespace mw {

class OracleValue {
 public:
  enum class Mode { Exact, Float };

  OracleValue() : v_(Rational{}) {}
  OracleValue(Rational q) : v_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  OracleValue(BigFloat f) : v_(std::move(f)) {}  // NOLINT(google-explicit-constructor)

  Mode mode() const noexcept { return v_.index() == 0 ? Mode::Exact : Mode::Float; }
  bool is_zero() const;
  int sign() const;
  /// Exact for both modes (a BigFloat is a dyadic rational).
  Rational to_rational() const;
  BigFloat to_bigfloat(int bits = kOracleBits) const;
  std::string to_decimal(int digits) const { return to_rational().to_decimal(digits); }

 private:
  std::variant<Rational, BigFloat> v_;
};

// Exact when both operands are exact; otherwise rounded to 300 bits.
OracleValue exact_add(const OracleValue& a, const OracleValue& b);
OracleValue exact_sub(const OracleValue& a, const OracleValue& b);
OracleValue exact_mul(const OracleValue& a, const OracleValue& b);
/// Throws std::domain_error on a zero divisor.
OracleValue exact_div(const OracleValue& a, const OracleValue& b);

template <int K>
Rational to_oracle(const MultiWord<K>& x) {
  Rational r;
  for (int i = 0; i < K; ++i) r += Rational::from_double(x[i]);
  return r;
}

template <int K>
BigFloat to_bigfloat(const MultiWord<K>& x, int bits = kOracleBits) {
  BigFloat r;
  for (int i = 0; i < K; ++i) r = add(r, BigFloat::from_double(x[i], bits + 64), bits + 64);
  return BigFloat::round(r.is_negative(), r.mantissa(), r.exponent(), bits);
}

/// Nearest K-word value, built greedily: c[i] is the nearest double to what
/// c[0..i-1] leaves over.
template <int K>
MultiWord<K> from_oracle(const Rational& q) {
  MultiWord<K> r;
  Rational rest = q;
  for (int i = 0; i < K; ++i) {
    r[i] = rest.to_double();
    if (r[i] != 0.0) rest -= Rational::from_double(r[i]);
  }
  return r;
}

template <int K>
MultiWord<K> from_oracle(const BigFloat& x) {
  return from_oracle<K>(x.to_rational());
}

template <int K>
MultiWord<K> from_oracle(const OracleValue& x) {
  return from_oracle<K>(x.to_rational());
}

/// log10 |q| for nonzero q, accurate to double precision.
double log10_abs(const Rational& q);

/// -log10(|approx - exact| / |exact|), capped at `cap`. With exact == 0 the
/// absolute error is used instead.
double significant_digits(const Rational& approx, const Rational& exact, double cap);

template <int K>
double significant_digits(const MultiWord<K>& approx, const OracleValue& exact) {
  return significant_digits(to_oracle(approx), exact.to_rational(), 2.0 * K * 16);
}

struct BigComplex {
  BigFloat re;
  BigFloat im;
};

/// Minimum of the real-part and imaginary-part digit counts.
template <int K>
double significant_digits(const ComplexMW<K>& approx, const BigComplex& exact) {
  const double cap = 2.0 * K * 16;
  const double re = significant_digits(to_oracle(approx.re), exact.re.to_rational(), cap);
  const double im = significant_digits(to_oracle(approx.im), exact.im.to_rational(), cap);
  return re < im ? re : im;
}

// Elementary functions at `bits` of precision.
BigFloat oracle_sqrt(const OracleValue& v, int bits = kOracleBits);
BigFloat oracle_exp(const OracleValue& v, int bits = kOracleBits);
BigFloat oracle_log(const OracleValue& v, int bits = kOracleBits);
BigFloat oracle_pi(int bits = kOracleBits);
/// v^(p/q), v > 0.
BigFloat oracle_pow(const OracleValue& v, long p, long q, int bits = kOracleBits);

/// sqrt(n) rounded to K words.
template <int K>
MultiWord<K> sqrt_constant(unsigned n) {
  return from_oracle<K>(oracle_sqrt(Rational(static_cast<std::int64_t>(n))));
}

// Complex arithmetic at `bits` of precision (four real multiplications).
BigComplex cadd(const BigComplex& a, const BigComplex& b, int bits = kOracleBits);
BigComplex csub(const BigComplex& a, const BigComplex& b, int bits = kOracleBits);
BigComplex cmul(const BigComplex& a, const BigComplex& b, int bits = kOracleBits);
BigComplex cdiv(const BigComplex& a, const BigComplex& b, int bits = kOracleBits);
BigFloat cabs(const BigComplex& a, int bits = kOracleBits);

template <int K>
BigComplex to_bigcomplex(const ComplexMW<K>& z, int bits = kOracleBits) {
  return {to_bigfloat(z.re, bits), to_bigfloat(z.im, bits)};
}

template <int K>
ComplexMW<K> from_bigcomplex(const BigComplex& z) {
  return {from_oracle<K>(z.re), from_oracle<K>(z.im)};
}

/// Row-major (n x m) * (m x p) with every product and sum rounded to `bits`.
std::vector<BigFloat> oracle_matmul(const std::vector<BigFloat>& a, const std::vector<BigFloat>& b,
                                    std::size_t n, std::size_t m, std::size_t p,
                                    int bits = kOracleBits);
/// Exact rational row-major product.
std::vector<Rational> oracle_matmul_exact(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b, std::size_t n,
                                          std::size_t m, std::size_t p);

/// Horner's rule; coeffs[i] multiplies x^i.
BigFloat oracle_horner(const std::vector<BigFloat>& coeffs, const BigFloat& x,
                       int bits = kOracleBits);
BigComplex oracle_horner(const std::vector<BigComplex>& coeffs, const BigComplex& z,
                         int bits = kOracleBits);

struct OracleDkResult {
  std::vector<BigComplex> roots;
  int iterations = 0;
  bool converged = false;
};

/// Durand-Kerner on the monic z^n + sum c[i] z^i, Jacobi updates, from the
/// given starting points. Stops when max |dz| <= 2^(tol_log2) * max |z|.
OracleDkResult oracle_dk(const std::vector<BigFloat>& monic_coeffs, std::vector<BigComplex> start,
                         long tol_log2, int max_iter, int bits = kOracleBits);

/// max_i |q(z_i)| for the monic q = z^n + sum c[i] z^i.
BigFloat oracle_residual(const std::vector<BigFloat>& monic_coeffs,
                         const std::vector<BigComplex>& roots, int bits = kOracleBits);

}  // namespace mw

#endif  // MW_ORACLE_HPP
