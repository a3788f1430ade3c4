// Durand-Kerner simultaneous root finding over complex multiword values.
//
// One sweep updates every approximation from the previous sweep's values:
//   z_i <- z_i - q(z_i) / prod_{j != i} (z_i - z_j)
// The product runs over all j with the j == i factor replaced by exactly 1,
// which lets a lane batch of consecutive i share one loop. Scalar and
// batched sweeps perform the same operations per root and agree bitwise.

#ifndef MW_ROOTS_HPP
#define MW_ROOTS_HPP

#include <cmath>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "mw/arith.hpp"
#include "mw/batch.hpp"
#include "mw/complex.hpp"
#include "mw/oracle.hpp"
#include "mw/parallel.hpp"
#include "mw/poly.hpp"

namespace mw {

/// q(z) = z^n + sum_{i < n} c[i] z^i.
template <int K>
struct MonicPoly {
  std::vector<MultiWord<K>> c;

  std::size_t degree() const noexcept { return c.size(); }

  /// p / a_n. Throws std::invalid_argument when a_n is zero or p is constant.
  static MonicPoly from_polynomial(const MWPolynomial<K>& p) {
    if (p.degree() == 0) throw std::invalid_argument("monic polynomial needs degree >= 1");
    const MultiWord<K>& lead = p.a.back();
    if (lead[0] == 0.0) throw std::invalid_argument("leading coefficient is zero");
    MonicPoly q;
    for (std::size_t i = 0; i + 1 < p.a.size(); ++i) q.c.push_back(div(p.a[i], lead));
    return q;
  }

  MWPolynomial<K> to_polynomial() const {
    std::vector<MultiWord<K>> a = c;
    a.push_back(MultiWord<K>::from_base(1.0));
    return MWPolynomial<K>(std::move(a));
  }
};

template <int K>
struct RootState {
  std::vector<ComplexMW<K>> z;
  int iteration = 0;
  bool converged = false;
  /// max_i |dz_i| of the last sweep, from the leading components.
  double last_update = 0.0;
};

/// Two approximations coincide, so a Durand-Kerner denominator vanishes.
class CollisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// dk_solve ran out of iterations; state() is the last iterate.
template <int K>
class NoConvergence : public std::runtime_error {
 public:
  explicit NoConvergence(RootState<K> s)
      : std::runtime_error("Durand-Kerner did not converge"), state_(std::move(s)) {}
  const RootState<K>& state() const noexcept { return state_; }

 private:
  RootState<K> state_;
};

namespace detail {

template <int K>
std::vector<BigFloat> monic_oracle_coeffs(const MonicPoly<K>& q) {
  std::vector<BigFloat> out;
  for (const auto& c : q.c) out.push_back(to_bigfloat(c));
  return out;
}

template <int K>
BigFloat radius_oracle(const MonicPoly<K>& q) {
  const std::size_t n = q.degree();
  long nnz = 1;
  for (const auto& c : q.c)
    if (c[0] != 0.0) ++nnz;
  BigFloat r;
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (q.c[i][0] == 0.0) continue;
    const BigFloat v = mul(BigFloat::from_double(static_cast<double>(nnz)), to_bigfloat(q.c[i]).abs());
    const BigFloat root = bf_pow(v, 1, static_cast<long>(n - i));
    if (!any || root > r) r = root;
    any = true;
  }
  return any ? r : BigFloat::from_double(1.0);
}

}  // namespace detail

/// r = max over nonzero c_i of |n_nz c_i|^(1/(n-i)), where n_nz counts the
/// nonzero c_i plus the leading 1. Computed in the oracle and rounded;
/// r = 1 when every c_i is zero.
template <int K>
MultiWord<K> radius_estimate(const MonicPoly<K>& q) {
  if (q.degree() == 0) throw std::invalid_argument("radius_estimate: degree must be >= 1");
  return from_oracle<K>(detail::radius_oracle(q));
}

/// z_i = -c_{n-1}/n + r exp(sqrt(-1) (2(i-1)pi/n + 3/(2n))), i = 1..n,
/// evaluated in the oracle and rounded to K words. Throws CollisionError if
/// two starting points round to the same value.
template <int K>
RootState<K> aberth_init(const MonicPoly<K>& q) {
  const std::size_t n = q.degree();
  if (n == 0) throw std::invalid_argument("aberth_init: degree must be >= 1");
  const BigFloat r = detail::radius_oracle(q);
  const BigFloat bn = BigFloat::from_double(static_cast<double>(n));
  const BigFloat center = div(-to_bigfloat(q.c[n - 1]), bn);
  const BigFloat two_pi_n = div(oracle_pi().ldexp(1), bn);
  const BigFloat offset = div(BigFloat::from_double(1.5), bn);
  RootState<K> s;
  for (std::size_t i = 0; i < n; ++i) {
    const BigFloat theta =
        add(mul(BigFloat::from_double(static_cast<double>(i)), two_pi_n), offset);
    s.z.push_back({from_oracle<K>(add(center, mul(r, bf_cos(theta)))),
                   from_oracle<K>(mul(r, bf_sin(theta)))});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (s.z[i].re == s.z[j].re && s.z[i].im == s.z[j].im)
        throw CollisionError("aberth_init: coincident starting points");
  return s;
}

struct DkOptions {
  Variant variant = Variant::Standard;
  bool simd = false;
  int threads = 1;
  /// Relative update tolerance; 0 selects 2^(-b+10) for the K-word bit count b.
  double tol = 0.0;
  int max_iter = 200;
  /// Lanes per batch when simd is set; 0 picks native_lane_width().
  int lane_width = 0;
};

template <int K>
double default_dk_tolerance() {
  return std::ldexp(1.0, -precision_bits<K> + 10);
}

namespace detail {

inline double approx_abs(double re, double im) { return std::hypot(re, im); }

template <int K, class T>
MultiWord<K> lane_value(const MultiWord<K, T>& x, std::size_t l) {
  if constexpr (std::is_same_v<T, double>) {
    (void)l;
    return x;
  } else {
    return lane(x, static_cast<int>(l));
  }
}

// Updates roots [i0, i0 + W) (clipped to n) from `old` into `out` and
// returns the per-root |dz| estimates.
template <Variant V, int K, int W>
void dk_update_block(const MonicPoly<K>& q, const std::vector<ComplexMW<K>>& old,
                     std::vector<ComplexMW<K>>& out, std::vector<double>& dz_abs, std::size_t i0) {
  using Base = std::conditional_t<W == 1, double, Lanes<W>>;
  using C = ComplexMW<K, Base>;
  const std::size_t n = old.size();
  const std::size_t lanes = std::min<std::size_t>(W, n - i0);

  auto to_base = [](const ComplexMW<K>& v) {
    return C{promote<K, Base>(v.re), promote<K, Base>(v.im)};
  };
  C zi;
  for (std::size_t l = 0; l < static_cast<std::size_t>(W); ++l) {
    // Padding lanes repeat the last real root; their results are discarded.
    const ComplexMW<K>& v = old[i0 + std::min(l, lanes - 1)];
    if constexpr (W == 1) {
      zi = v;
    } else {
      set_lane(zi.re, static_cast<int>(l), v.re);
      set_lane(zi.im, static_cast<int>(l), v.im);
    }
  }

  const C one = to_base(ComplexMW<K>{MultiWord<K>::from_base(1.0), MultiWord<K>{}});
  C num = one;
  for (std::size_t k = n; k-- > 0;) {
    num = cmul<V>(num, zi);
    num.re = add<V>(num.re, promote<K, Base>(q.c[k]));
  }
  C den = one;
  for (std::size_t j = 0; j < n; ++j) {
    C f = csub<V>(zi, to_base(old[j]));
    for (std::size_t l = 0; l < lanes; ++l) {
      if (i0 + l != j) continue;
      if constexpr (W == 1) {
        f = one;
      } else {
        set_lane(f.re, static_cast<int>(l), MultiWord<K>::from_base(1.0));
        set_lane(f.im, static_cast<int>(l), MultiWord<K>{});
      }
    }
    den = cmul<V>(den, f);
  }
  const C dz = cdiv<V>(num, den);
  const C zn = csub<V>(zi, dz);
  for (std::size_t l = 0; l < lanes; ++l) {
    const ComplexMW<K> d{lane_value(dz.re, l), lane_value(dz.im, l)};
    const ComplexMW<K> z{lane_value(zn.re, l), lane_value(zn.im, l)};
    const ComplexMW<K> dn{lane_value(den.re, l), lane_value(den.im, l)};
    if (dn.re[0] == 0.0 && dn.im[0] == 0.0)
      throw CollisionError("dk_iterate: coincident approximations");
    out[i0 + l] = z;
    dz_abs[i0 + l] = approx_abs(d.re[0], d.im[0]);
  }
}

}  // namespace detail

/// One simultaneous sweep. Throws CollisionError on a vanishing denominator.
template <int K>
RootState<K> dk_iterate(const MonicPoly<K>& q, const RootState<K>& state,
                        const DkOptions& opt = {}) {
  const std::size_t n = state.z.size();
  if (n != q.degree()) throw std::invalid_argument("dk_iterate: state size must equal degree");
  RootState<K> next;
  next.z.resize(n);
  next.iteration = state.iteration + 1;
  std::vector<double> dz(n);
  with_variant(opt.variant, [&]<Variant V>() {
    auto sweep = [&]<int W>() {
      const std::size_t blocks = (n + W - 1) / W;
      parallel_for(blocks, opt.threads, [&](std::size_t b) {
        detail::dk_update_block<V, K, W>(q, state.z, next.z, dz, b * W);
      });
    };
    if (!opt.simd) {
      sweep.template operator()<1>();
    } else {
      const int w = opt.lane_width == 0 ? native_lane_width() : opt.lane_width;
      with_lane_width(w, sweep);
    }
  });
  double m = 0.0;
  for (double d : dz) m = std::max(m, d);
  next.last_update = m;
  return next;
}

/// Iterates from the Aberth start until max |dz_i| <= tol * max |z_i|.
/// Throws NoConvergence<K> after opt.max_iter sweeps.
template <int K>
RootState<K> dk_solve(const MonicPoly<K>& q, const DkOptions& opt = {}) {
  if (opt.tol < 0.0) throw std::invalid_argument("dk_solve: tolerance must be positive");
  const double tol = opt.tol == 0.0 ? default_dk_tolerance<K>() : opt.tol;
  RootState<K> s = aberth_init(q);
  for (int it = 0; it < opt.max_iter; ++it) {
    s = dk_iterate(q, s, opt);
    double zmax = 0.0;
    for (const auto& z : s.z) zmax = std::max(zmax, detail::approx_abs(z.re[0], z.im[0]));
    if (s.last_update <= tol * zmax) {
      s.converged = true;
      return s;
    }
  }
  throw NoConvergence<K>(std::move(s));
}

/// max_i |q(z_i)| evaluated at 300 bits.
template <int K>
BigFloat residual_check(const MonicPoly<K>& q, const std::vector<ComplexMW<K>>& roots) {
  std::vector<BigComplex> z;
  for (const auto& r : roots) z.push_back(to_bigcomplex(r));
  return oracle_residual(detail::monic_oracle_coeffs(q), z);
}

/// Runs the same Durand-Kerner iteration in the 300-bit oracle from the
/// K-word Aberth start.
template <int K>
OracleDkResult oracle_dk(const MonicPoly<K>& q, long tol_log2 = -280, int max_iter = 500) {
  const RootState<K> s = aberth_init(q);
  std::vector<BigComplex> start;
  for (const auto& z : s.z) start.push_back(to_bigcomplex(z));
  return oracle_dk(detail::monic_oracle_coeffs(q), std::move(start), tol_log2, max_iter);
}

// Chebyshev integration test problem: a_n = 1, a_{n-(2k-1)} = 0 and a_{n-2k}
// from one of two readings of the recurrence for k = 1 .. floor(n/2).

class ChebyshevRule {
 public:
  virtual ~ChebyshevRule() = default;
  virtual std::string name() const = 0;
  /// Exact coefficients a[0..n] with a[n] = 1.
  virtual std::vector<Rational> coefficients(int n) const = 0;
};

/// a_{n-2k} = -sum_{j=1..k} a_{n-2(k-j)} / (2j+1).
class LiteralChebyshevRule : public ChebyshevRule {
 public:
  std::string name() const override { return "literal"; }
  std::vector<Rational> coefficients(int n) const override;
};

/// a_{n-2k} = -(n / 2k) sum_{j=1..k} a_{n-2(k-j)} / (2j+1): Newton's
/// identities for nodes whose even power sums are n / (2j+1), the
/// equal-weight quadrature node polynomial.
class QuadratureChebyshevRule : public ChebyshevRule {
 public:
  std::string name() const override { return "quadrature"; }
  std::vector<Rational> coefficients(int n) const override;
};

/// The rule used when none is given (LiteralChebyshevRule).
const ChebyshevRule& default_chebyshev_rule();
/// Looks a rule up by name(); throws std::invalid_argument if unknown.
const ChebyshevRule& chebyshev_rule(const std::string& name);

template <int K>
MonicPoly<K> chebyshev_coeffs(int n, const ChebyshevRule& rule = default_chebyshev_rule()) {
  if (n < 1) throw std::invalid_argument("chebyshev_coeffs: n must be positive");
  const auto a = rule.coefficients(n);
  MonicPoly<K> q;
  for (int i = 0; i < n; ++i) q.c.push_back(from_oracle<K>(a[static_cast<std::size_t>(i)]));
  return q;
}

}  // namespace mw

#endif  // MW_ROOTS_HPP
