#include "mw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "mw/batch.hpp"
#include "mw/eft.hpp"
#include "mw/linalg.hpp"
#include "mw/oracle.hpp"
#include "mw/poly.hpp"
#include "mw/rng.hpp"
#include "mw/roots.hpp"

namespace mw {

namespace {

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

const char* kname(int k) { return k == 2 ? "dd" : k == 3 ? "td" : "qd"; }

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Finite double with a uniform 53-bit significand, random sign, and
// exponent uniform in [lo, hi].
double random_double(Rng& rng, int lo, int hi) {
  const double m = 1.0 + rng.uniform01();  // [1, 2)
  const double s = (rng.next() & 1U) ? -1.0 : 1.0;
  return s * std::ldexp(m, static_cast<int>(rng.uniform_int(lo, hi)));
}

// Normalized-looking K-word operand: leading exponent in [-100, 100], each
// further component at most 2^-53 of the previous one.
template <int K>
MultiWord<K> random_mw(Rng& rng) {
  MultiWord<K> x;
  x[0] = random_double(rng, -100, 100);
  for (int i = 1; i < K; ++i) x[i] = x[i - 1] * 0x1p-53 * rng.uniform(-1.0, 1.0);
  return x;
}

// |x - y| in units of 2^(e - b + 1), where 2^e <= scale < 2^(e+1): ulps of a
// b-bit number of the magnitude of `scale`.
template <int K>
double kword_ulps(const MultiWord<K>& x, const MultiWord<K>& y, double scale) {
  const Rational d = (to_oracle(x) - to_oracle(y)).abs();
  if (d.is_zero()) return 0.0;
  const int e = std::ilogb(scale);
  return d.ldexp(precision_bits<K> - 1 - e).to_double();
}

// ---- eft -----------------------------------------------------------------

std::vector<CheckResult> suite_eft(const VerifyOptions& opt) {
  Rng rng(opt.seed);
  std::size_t sum_fail = 0, quick_fail = 0, prod_fail = 0;
  for (std::size_t t = 0; t < opt.eft_pairs; ++t) {
    const double a = random_double(rng, -300, 300);
    const double b = random_double(rng, -300, 300);
    const Rational ra = Rational::from_double(a), rb = Rational::from_double(b);
    const Rational exact_sum = ra + rb;

    const auto s = two_sum(a, b);
    if (Rational::from_double(s.s) + Rational::from_double(s.e) != exact_sum) ++sum_fail;
    const auto q = std::fabs(a) >= std::fabs(b) ? quick_two_sum(a, b) : quick_two_sum(b, a);
    if (Rational::from_double(q.s) + Rational::from_double(q.e) != exact_sum) ++quick_fail;
    const auto p = two_prod(a, b);
    if (Rational::from_double(p.s) + Rational::from_double(p.e) != ra * rb) ++prod_fail;
  }
  auto res = [&](const char* name, std::size_t fails) {
    return CheckResult{name, fails == 0,
                       fmt("%zu/%zu pairs inexact, exponents in [-300, 300]", fails, opt.eft_pairs)};
  };
  return {res("eft: two_sum exact", sum_fail), res("eft: quick_two_sum exact", quick_fail),
          res("eft: two_prod exact", prod_fail)};
}

// ---- ops -----------------------------------------------------------------

template <int K, Variant V>
void ops_for(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  constexpr int b = precision_bits<K>;
  Rng rng(opt.seed + 100 * K + (V == Variant::BranchFree ? 1 : 0));
  const char* ops[3] = {"add", "mul", "div"};
  std::size_t fails[3] = {0, 0, 0};
  long worst[3] = {-100000, -100000, -100000};
  auto record = [&](int op, const Rational& err, const Rational& ref) {
    if (err.is_zero()) return;
    // err <= 2^(-b+4) |ref|  <=>  err * 2^(b-4) <= |ref|
    if (err.ldexp(b - 4) > ref.abs()) ++fails[op];
    worst[op] = std::max(worst[op], err.floor_log2() - ref.floor_log2());
  };
  for (std::size_t t = 0; t < opt.op_pairs; ++t) {
    const MultiWord<K> x = random_mw<K>(rng);
    MultiWord<K> y = random_mw<K>(rng);
    // A third of the pairs nearly cancel under addition.
    if (t % 3 == 0) {
      y = neg(x);
      y[K - 1] = y[K - 1] * 1.5;
      if (y[K - 1] == 0.0) y[K - 1] = x[0] * 0x1p-200;
    }
    const Rational rx = to_oracle(x), ry = to_oracle(y);
    const Rational sum = rx + ry;
    if (!sum.is_zero()) record(0, (to_oracle(add<V>(x, y)) - sum).abs(), sum);
    const Rational prod = rx * ry;
    record(1, (to_oracle(mul<V>(x, y)) - prod).abs(), prod);
    // |q - x/y| / |x/y| = |q y - x| / |x|, which stays dyadic.
    record(2, (to_oracle(div<V>(x, y)) * ry - rx).abs(), rx);
  }
  for (int op = 0; op < 3; ++op) {
    out.push_back({fmt("ops: %s %s %s error <= 2^(-%d)", kname(K), to_string(V), ops[op], b - 4),
                   fails[op] == 0,
                   fmt("%zu/%zu over bound; worst relative error about 2^%ld", fails[op],
                       opt.op_pairs, worst[op])});
  }
}

std::vector<CheckResult> suite_ops(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  ops_for<2, Variant::Standard>(opt, out);
  ops_for<2, Variant::BranchFree>(opt, out);
  ops_for<3, Variant::Standard>(opt, out);
  ops_for<3, Variant::BranchFree>(opt, out);
  ops_for<4, Variant::Standard>(opt, out);
  ops_for<4, Variant::BranchFree>(opt, out);
  return out;
}

// ---- batch ---------------------------------------------------------------

template <int K, int W>
void batch_for(const VerifyOptions& opt, std::size_t& checked, std::size_t& mismatched) {
  Rng rng(opt.seed + 7 * K + W);
  for (Variant v : {Variant::Standard, Variant::BranchFree}) {
    for (std::size_t t = 0; t < opt.batches; ++t) {
      LaneBatch<K, W> a, b;
      MultiWord<K> xs[W], ys[W];
      for (int l = 0; l < W; ++l) {
        xs[l] = random_mw<K>(rng);
        ys[l] = random_mw<K>(rng);
        set_lane(a, l, xs[l]);
        set_lane(b, l, ys[l]);
      }
      const LaneBatch<K, W> r[3] = {batch_add(a, b, v), batch_mul(a, b, v), batch_div(a, b, v)};
      for (int l = 0; l < W; ++l) {
        const MultiWord<K> s[3] = {add(xs[l], ys[l], v), mul(xs[l], ys[l], v),
                                   div(xs[l], ys[l], v)};
        for (int op = 0; op < 3; ++op) {
          ++checked;
          if (!bitwise_equal(lane(r[op], l), s[op])) ++mismatched;
        }
      }
    }
  }
}

std::vector<CheckResult> suite_batch(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  auto one = [&](int k, int w, auto&& fn) {
    std::size_t checked = 0, bad = 0;
    fn(checked, bad);
    out.push_back({fmt("batch: %s W=%d lanes bitwise equal scalar (add, mul, div; std, bf)",
                       kname(k), w),
                   bad == 0, fmt("%zu/%zu lane results differ", bad, checked)});
  };
  one(2, 2, [&](auto& c, auto& b) { batch_for<2, 2>(opt, c, b); });
  one(2, 4, [&](auto& c, auto& b) { batch_for<2, 4>(opt, c, b); });
  one(2, 8, [&](auto& c, auto& b) { batch_for<2, 8>(opt, c, b); });
  one(3, 2, [&](auto& c, auto& b) { batch_for<3, 2>(opt, c, b); });
  one(3, 4, [&](auto& c, auto& b) { batch_for<3, 4>(opt, c, b); });
  one(3, 8, [&](auto& c, auto& b) { batch_for<3, 8>(opt, c, b); });
  one(4, 2, [&](auto& c, auto& b) { batch_for<4, 2>(opt, c, b); });
  one(4, 4, [&](auto& c, auto& b) { batch_for<4, 4>(opt, c, b); });
  one(4, 8, [&](auto& c, auto& b) { batch_for<4, 8>(opt, c, b); });
  return out;
}

// ---- matmul --------------------------------------------------------------

template <int K>
void matmul_floors(const VerifyOptions& opt, double real_floor, double complex_floor,
                   std::vector<CheckResult>& out) {
  const std::size_t n = opt.matmul_n;
  {
    const auto [a, b] = gen_test_matrices<K>(n);
    const auto exact = oracle_product(a, b);
    for (Scheme s : {Scheme::Naive, Scheme::Blocked, Scheme::Strassen}) {
      double lo = 1e300, hi = -1e300;
      std::string cfgs;
      for (Variant v : {Variant::Standard, Variant::BranchFree})
        for (bool simd : {false, true}) {
          MatMulPlan p;
          p.scheme = s;
          p.variant = v;
          p.simd = simd;
          const DigitRange d = digit_range(matmul(a, b, p), exact);
          lo = std::min(lo, d.min);
          hi = std::max(hi, d.max);
          cfgs += fmt(" %s/%s=%.2f", to_string(v), simd ? "simd" : "scalar", d.min);
        }
      out.push_back({fmt("matmul: %s %s n=%zu min digits >= %.1f", kname(K), to_string(s), n,
                         real_floor),
                     lo >= real_floor, fmt("min %.2f max %.2f;%s", lo, hi, cfgs.c_str())});
    }
  }
  {
    const auto [a, b] = gen_complex_test_matrices<K>(n, opt.seed);
    const auto exact = oracle_product(a, b);
    for (Scheme s : {Scheme::Naive, Scheme::Blocked, Scheme::Strassen}) {
      double lo = 1e300, hi = -1e300;
      std::string cfgs;
      for (Variant v : {Variant::Standard, Variant::BranchFree}) {
        MatMulPlan p;
        p.scheme = s;
        p.variant = v;
        p.simd = true;
        const DigitRange d = digit_range(cmatmul(a, b, p), exact);
        lo = std::min(lo, d.min);
        hi = std::max(hi, d.max);
        cfgs += fmt(" %s=%.2f", to_string(v), d.min);
      }
      out.push_back({fmt("cmatmul: %s 3M %s n=%zu min digits >= %.1f", kname(K), to_string(s), n,
                         complex_floor),
                     lo >= complex_floor, fmt("min %.2f max %.2f;%s", lo, hi, cfgs.c_str())});
    }
  }
}

std::vector<CheckResult> suite_matmul(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  matmul_floors<2>(opt, 29.0, 23.2, out);
  matmul_floors<3>(opt, 45.5, 39.2, out);
  matmul_floors<4>(opt, 61.7, 55.8, out);
  return out;
}

// ---- determinism ---------------------------------------------------------

template <int K>
void determinism_for(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  std::vector<std::size_t> sizes;
  for (std::size_t n : {33, 100, 128})
    if (n <= opt.determinism_n) sizes.push_back(n);
  if (sizes.empty()) sizes.push_back(opt.determinism_n);

  bool threads_ok = true, schemes_ok = true;
  double worst = 0.0;
  std::string detail;
  for (std::size_t n : sizes) {
    const auto a = random_matrix<K>(n, n, opt.seed + n);
    const auto b = random_matrix<K>(n, n, opt.seed + 2 * n + 1);
    std::vector<double> scale(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          scale[i * n + j] += std::fabs(a.at(i, k)[0]) * std::fabs(b.at(k, j)[0]);
    for (Variant v : {Variant::Standard, Variant::BranchFree}) {
      MatMulPlan p;
      p.variant = v;
      p.simd = true;
      p.scheme = Scheme::Strassen;
      p.threads = 1;
      const auto s1 = matmul(a, b, p);
      for (int t : {2, 8}) {
        p.threads = t;
        if (!(matmul(a, b, p) == s1)) {
          threads_ok = false;
          detail += fmt(" n=%zu %s threads=%d differs;", n, to_string(v), t);
        }
      }
      p.threads = 1;
      p.scheme = Scheme::Naive;
      const auto cn = matmul(a, b, p);
      p.scheme = Scheme::Blocked;
      const auto cb = matmul(a, b, p);
      const MWMatrix<K>* m[3] = {&cn, &cb, &s1};
      for (int x = 0; x < 3; ++x)
        for (int y = x + 1; y < 3; ++y)
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              worst = std::max(worst, kword_ulps(m[x]->at(i, j), m[y]->at(i, j), scale[i * n + j]));
    }
  }
  schemes_ok = worst <= 8.0;
  out.push_back({fmt("determinism: %s Strassen bitwise equal for threads 1, 2, 8", kname(K)),
                 threads_ok, threads_ok ? "all sizes and variants identical" : detail});
  out.push_back({fmt("determinism: %s naive/blocked/Strassen within 8 ulps (n <= %zu)", kname(K),
                     sizes.back()),
                 schemes_ok, fmt("worst %.3f ulps of sum |a||b|", worst)});
}

std::vector<CheckResult> suite_determinism(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  determinism_for<2>(opt, out);
  determinism_for<3>(opt, out);
  determinism_for<4>(opt, out);
  return out;
}

// ---- 3M ------------------------------------------------------------------

// Same unit as kword_ulps, against an oracle value.
template <int K>
double oracle_ulps(const MultiWord<K>& x, const BigFloat& exact, double scale) {
  const Rational d = (to_oracle(x) - exact.to_rational()).abs();
  if (d.is_zero()) return 0.0;
  return d.ldexp(precision_bits<K> - 1 - std::ilogb(scale)).to_double();
}

template <int K>
void threem_for(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  // worst: 3M against 4M (the criterion). e3, e4: each against the oracle,
  // reported so a failure can be attributed.
  double worst = 0.0, e3 = 0.0, e4 = 0.0;
  for (std::size_t n : {8, 33, 64}) {
    if (n > opt.matmul_n) continue;
    const auto [a, b] = gen_complex_test_matrices<K>(n, opt.seed + n);
    const auto exact = oracle_product(a, b);
    for (Variant v : {Variant::Standard, Variant::BranchFree}) {
      MatMulPlan p;
      p.variant = v;
      const auto c3 = cmatmul(a, b, p);
      const auto c4 = cmatmul_4m(a, b, v);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          double scale = 0.0;
          for (std::size_t k = 0; k < n; ++k) {
            const auto x = a.at(i, k), y = b.at(k, j);
            scale += std::hypot(x.re[0], x.im[0]) * std::hypot(y.re[0], y.im[0]);
          }
          const BigComplex& ex = exact[i * n + j];
          worst = std::max({worst, kword_ulps(c3.re.at(i, j), c4.re.at(i, j), scale),
                            kword_ulps(c3.im.at(i, j), c4.im.at(i, j), scale)});
          e3 = std::max({e3, oracle_ulps(c3.re.at(i, j), ex.re, scale),
                         oracle_ulps(c3.im.at(i, j), ex.im, scale)});
          e4 = std::max({e4, oracle_ulps(c4.re.at(i, j), ex.re, scale),
                         oracle_ulps(c4.im.at(i, j), ex.im, scale)});
        }
    }
  }
  out.push_back({fmt("3m: %s complex 3M matmul within 2 ulps of 4M (n <= %zu)", kname(K),
                     std::min<std::size_t>(64, opt.matmul_n)),
                 worst <= 2.0,
                 fmt("worst %.3f ulps of sum |a||b|; vs oracle 3M %.3f, 4M %.3f", worst, e3, e4)});
}

std::vector<CheckResult> suite_3m(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  threem_for<2>(opt, out);
  threem_for<3>(opt, out);
  threem_for<4>(opt, out);
  return out;
}

// ---- poly ----------------------------------------------------------------

template <int K, int W>
std::size_t estrin_batch_mismatches(const MWPolynomial<K>& p, Rng& rng, Variant v) {
  LaneBatch<K, W> xs;
  MultiWord<K> x[W];
  for (int l = 0; l < W; ++l) {
    x[l] = MultiWord<K>::from_base(rng.uniform(-1.0, 1.0));
    set_lane(xs, l, x[l]);
  }
  const auto r = estrin_eval_batched(p, xs, v);
  std::size_t bad = 0;
  for (int l = 0; l < W; ++l)
    if (!bitwise_equal(lane(r, l), estrin_eval(p, x[l], v))) ++bad;
  return bad;
}

template <int K>
void poly_for(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  Rng rng(opt.seed + 31 * K);
  double worst = 0.0;
  std::size_t bad = 0, lanes = 0;
  std::vector<std::size_t> degrees;
  for (std::size_t d = 1; d <= opt.max_poly_degree; d = d * 2 + 1) degrees.push_back(d);
  for (std::size_t d : {2UL, 64UL, 100UL, 512UL, 1024UL})
    if (d <= opt.max_poly_degree) degrees.push_back(d);
  for (std::size_t deg : degrees)
    for (int s = 0; s < 4; ++s) {
      const auto p = random_polynomial<K>(deg, opt.seed + 1000 * deg + static_cast<unsigned>(s));
      for (Variant v : {Variant::Standard, Variant::BranchFree}) {
        const auto x = MultiWord<K>::from_base(rng.uniform(-1.0, 1.0));
        double scale = 0.0, xp = 1.0;
        for (const auto& c : p.a) {
          scale += std::fabs(c[0]) * xp;
          xp *= std::fabs(x[0]);
        }
        worst = std::max(worst, kword_ulps(horner_eval(p, x, v), estrin_eval(p, x, v), scale));
        bad += estrin_batch_mismatches<K, 2>(p, rng, v);
        bad += estrin_batch_mismatches<K, 4>(p, rng, v);
        bad += estrin_batch_mismatches<K, 8>(p, rng, v);
        lanes += 14;
      }
    }
  out.push_back({fmt("poly: %s Horner/Estrin within 4 ulps (degree <= %zu)", kname(K),
                     opt.max_poly_degree),
                 worst <= 4.0, fmt("worst %.3f ulps of sum |a_i||x|^i", worst)});
  out.push_back({fmt("poly: %s batched Estrin bitwise equal scalar (W = 2, 4, 8)", kname(K)),
                 bad == 0, fmt("%zu/%zu lanes differ", bad, lanes)});
}

std::vector<CheckResult> suite_poly(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  poly_for<2>(opt, out);
  poly_for<3>(opt, out);
  poly_for<4>(opt, out);
  return out;
}

// ---- dk ------------------------------------------------------------------

template <int K>
int dk_digits() {
  return K == 2 ? 32 : K == 3 ? 48 : 64;
}

template <int K>
void dk_for(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  (void)opt;
  // (a) z^2 - 1
  {
    MonicPoly<K> q;
    q.c = {MultiWord<K>::from_base(-1.0), MultiWord<K>{}};
    bool ok = true;
    std::string detail;
    for (Variant v : {Variant::Standard, Variant::BranchFree}) {
      DkOptions o;
      o.variant = v;
      o.max_iter = 10;
      try {
        const auto s = dk_solve(q, o);
        // Each root within 10 ulps of +-1.
        double worst = 0.0;
        for (const auto& z : s.z) {
          const double target = z.re[0] > 0 ? 1.0 : -1.0;
          const double e = std::max(kword_ulps(z.re, MultiWord<K>::from_base(target), 1.0),
                                    kword_ulps(z.im, MultiWord<K>{}, 1.0));
          worst = std::max(worst, e);
        }
        const bool signs = (s.z[0].re[0] > 0) != (s.z[1].re[0] > 0);
        ok = ok && signs && worst <= 10.0;
        detail += fmt(" %s: %d iterations, %.2f ulps;", to_string(v), s.iteration, worst);
      } catch (const std::exception& e) {
        ok = false;
        detail += fmt(" %s: %s;", to_string(v), e.what());
      }
    }
    out.push_back({fmt("dk: %s z^2-1 converges to +-1 within 10 iterations", kname(K)), ok, detail});
  }
  // (b) Chebyshev n = 64
  {
    const auto q = chebyshev_coeffs<K>(64);
    const int digits = dk_digits<K>();
    bool ok = true;
    std::string detail;
    for (Variant v : {Variant::Standard, Variant::BranchFree}) {
      DkOptions o;
      o.variant = v;
      o.simd = v == Variant::BranchFree;
      try {
        const auto s = dk_solve(q, o);
        const BigFloat res = residual_check(q, s.z);
        const double lr = res.is_zero() ? -1e9 : log10_abs(res.to_rational());
        ok = ok && lr <= -(digits - 6);
        detail += fmt(" %s: %d iterations, residual 1e%.1f;", to_string(v), s.iteration, lr);
      } catch (const std::exception& e) {
        ok = false;
        detail += fmt(" %s: %s;", to_string(v), e.what());
      }
    }
    out.push_back({fmt("dk: %s Chebyshev n=64 converges, residual <= 1e-%d", kname(K), digits - 6),
                   ok, detail});
  }
  // (c) n = 8 against the oracle iteration
  {
    const auto q = chebyshev_coeffs<K>(8);
    const int digits = dk_digits<K>();
    const OracleDkResult ref = oracle_dk(q);
    bool ok = ref.converged;
    double worst_digits = 1e9;
    std::string detail = ref.converged ? "" : " oracle did not converge;";
    for (Variant v : {Variant::Standard, Variant::BranchFree}) {
      DkOptions o;
      o.variant = v;
      try {
        const auto s = dk_solve(q, o);
        std::vector<bool> used(ref.roots.size(), false);
        for (const auto& z : s.z) {
          const BigComplex zb = to_bigcomplex(z);
          std::size_t best = 0;
          BigFloat bd;
          bool first = true;
          for (std::size_t j = 0; j < ref.roots.size(); ++j) {
            if (used[j]) continue;
            const BigFloat d = cabs(csub(zb, ref.roots[j]));
            if (first || d < bd) {
              bd = d;
              best = j;
              first = false;
            }
          }
          used[best] = true;
          const double dd = bd.is_zero() ? 1e9 : -log10_abs(bd.to_rational());
          worst_digits = std::min(worst_digits, dd);
        }
      } catch (const std::exception& e) {
        ok = false;
        detail += fmt(" %s: %s;", to_string(v), e.what());
      }
    }
    ok = ok && worst_digits >= digits - 5;
    out.push_back({fmt("dk: %s n=8 roots match oracle to %d decimal places", kname(K), digits - 5),
                   ok, fmt("worst %.2f places;%s", worst_digits, detail.c_str())});
  }
}

std::vector<CheckResult> suite_dk(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  dk_for<2>(opt, out);
  dk_for<3>(opt, out);
  dk_for<4>(opt, out);
  return out;
}

// ---- perf (informational) ------------------------------------------------

template <int K>
double time_matmul(std::size_t n, Variant v) {
  const auto a = random_matrix<K>(n, n, 1), b = random_matrix<K>(n, n, 2);
  MatMulPlan p;
  p.scheme = Scheme::Strassen;
  p.variant = v;
  p.simd = true;
  return seconds([&] { (void)matmul(a, b, p); });
}

template <int K>
double time_dk(Variant v) {
  const auto q = chebyshev_coeffs<K>(64);
  DkOptions o;
  o.variant = v;
  o.simd = true;
  return seconds([&] { (void)dk_solve(q, o); });
}

std::vector<CheckResult> suite_perf(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  if (opt.perf_n == 0) return out;
  const std::size_t n = opt.perf_n;
  auto ratio = [&](const char* what, double std_t, double bf_t, double expect, bool at_least) {
    const double r = std_t / bf_t;
    const bool met = at_least ? r >= expect : r <= expect;
    out.push_back({what, met,
                   fmt("std %.3fs bf %.3fs, std/bf %.2f (expected %s %.1f)%s", std_t, bf_t, r,
                       at_least ? ">=" : "<=", expect, met ? "" : "; not met on this machine"),
                   true});
  };
  ratio(fmt("perf: dd matmul n=%zu Strassen SIMD std/bf", n).c_str(),
        time_matmul<2>(n, Variant::Standard), time_matmul<2>(n, Variant::BranchFree), 1.0, false);
  ratio(fmt("perf: td matmul n=%zu Strassen SIMD std/bf", n).c_str(),
        time_matmul<3>(n, Variant::Standard), time_matmul<3>(n, Variant::BranchFree), 1.2, true);
  ratio(fmt("perf: qd matmul n=%zu Strassen SIMD std/bf", n).c_str(),
        time_matmul<4>(n, Variant::Standard), time_matmul<4>(n, Variant::BranchFree), 1.2, true);
  {
    const auto [a, b] = gen_complex_test_matrices<2>(n, opt.seed);
    MatMulPlan p;
    p.scheme = Scheme::Strassen;
    p.simd = true;
    const double tc = seconds([&] { (void)cmatmul(a, b, p); });
    const double tr = seconds([&] { (void)matmul(a.re, b.re, p); });
    const double r = tc / tr;
    out.push_back({fmt("perf: dd complex/real matmul time n=%zu", n), r <= 3.6,
                   fmt("complex %.3fs real %.3fs ratio %.2f (expected <= 3.6)", tc, tr, r), true});
  }
  ratio("perf: td DK Chebyshev n=64 std/bf", time_dk<3>(Variant::Standard),
        time_dk<3>(Variant::BranchFree), 1.0, true);
  ratio("perf: qd DK Chebyshev n=64 std/bf", time_dk<4>(Variant::Standard),
        time_dk<4>(Variant::BranchFree), 1.0, true);
  return out;
}

struct Suite {
  const char* name;
  std::vector<CheckResult> (*run)(const VerifyOptions&);
};

const Suite kSuites[] = {
    {"eft", suite_eft},     {"ops", suite_ops},         {"batch", suite_batch},
    {"matmul", suite_matmul}, {"determinism", suite_determinism}, {"3m", suite_3m},
    {"poly", suite_poly},   {"dk", suite_dk},           {"perf", suite_perf},
};

}  // namespace

VerifyOptions VerifyOptions::quick() {
  VerifyOptions o;
  o.eft_pairs = 20000;
  o.op_pairs = 2000;
  o.batches = 200;
  o.matmul_n = 16;
  o.determinism_n = 33;
  o.max_poly_degree = 64;
  o.perf_n = 0;
  return o;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : kSuites) names.emplace_back(s.name);
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
  for (const auto& s : kSuites)
    if (suite == s.name) return s.run(opt);
  throw std::invalid_argument("unknown verify suite: " + suite);
}

std::vector<CheckResult> run_all(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  for (const auto& s : kSuites) {
    auto r = s.run(opt);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

}  // namespace mw
