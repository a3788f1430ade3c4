// Dense multiword matrices and matrix multiplication.
//
// Storage is component-planar: a K-word matrix keeps K row-major planes of
// doubles, plane c holding component c of every entry. Row segments of a
// plane load straight into Lanes<W>, which is what the SIMD kernels use.
//
// Kernels, per output entry, all accumulate s = 0; s = s + a(i,k) * b(k,j)
// for k = 0, 1, ... in that order. Naive, blocked and SIMD variants of either
// therefore produce bitwise identical results; Strassen differs by its
// algebra, not by rounding order within a leaf.

#ifndef MW_LINALG_HPP
#define MW_LINALG_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "mw/arith.hpp"
#include "mw/batch.hpp"
#include "mw/complex.hpp"
#include "mw/convert.hpp"
#include "mw/oracle.hpp"
#include "mw/parallel.hpp"
#include "mw/rng.hpp"

namespace mw {

template <int K>
class MWMatrix {
 public:
  MWMatrix() = default;
  /// Zero matrix. Throws std::invalid_argument for a zero dimension.
  MWMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
    for (auto& p : planes_) p.assign(rows * cols, 0.0);
  }

  static MWMatrix identity(std::size_t n) {
    MWMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.planes_[0][i * n + i] = 1.0;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  MultiWord<K> at(std::size_t i, std::size_t j) const {
    MultiWord<K> r;
    for (int c = 0; c < K; ++c) r[c] = planes_[static_cast<std::size_t>(c)][i * cols_ + j];
    return r;
  }
  void set(std::size_t i, std::size_t j, const MultiWord<K>& v) {
    for (int c = 0; c < K; ++c) planes_[static_cast<std::size_t>(c)][i * cols_ + j] = v[c];
  }

  double* plane(int c) noexcept { return planes_[static_cast<std::size_t>(c)].data(); }
  const double* plane(int c) const noexcept { return planes_[static_cast<std::size_t>(c)].data(); }

  friend bool operator==(const MWMatrix&, const MWMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::array<std::vector<double>, K> planes_;
};

template <int K>
struct CMWMatrix {
  MWMatrix<K> re;
  MWMatrix<K> im;

  CMWMatrix() = default;
  CMWMatrix(std::size_t rows, std::size_t cols) : re(rows, cols), im(rows, cols) {}
  std::size_t rows() const noexcept { return re.rows(); }
  std::size_t cols() const noexcept { return re.cols(); }
  ComplexMW<K> at(std::size_t i, std::size_t j) const { return {re.at(i, j), im.at(i, j)}; }
  void set(std::size_t i, std::size_t j, const ComplexMW<K>& z) {
    re.set(i, j, z.re);
    im.set(i, j, z.im);
  }
};

enum class Scheme { Naive, Blocked, Strassen };

inline const char* to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::Naive: return "naive";
    case Scheme::Blocked: return "blocked";
    default: return "strassen";
  }
}

struct MatMulPlan {
  Scheme scheme = Scheme::Blocked;
  Variant variant = Variant::Standard;
  bool simd = false;
  int threads = 1;
  int strassen_cutoff = 32;
  int block = 32;
  /// Lanes per SIMD batch; 0 picks native_lane_width().
  int lane_width = 0;

  void validate() const {
    if (strassen_cutoff < 2) throw std::invalid_argument("strassen cutoff must be at least 2");
    if (threads < 1) throw std::invalid_argument("thread count must be positive");
    if (block < 1) throw std::invalid_argument("block size must be positive");
    if (lane_width != 0 && lane_width != 2 && lane_width != 4 && lane_width != 8)
      throw std::invalid_argument("lane width must be 2, 4 or 8");
  }
};

namespace detail {

// Strided window onto the planes of a matrix.
template <int K, class P>
struct View {
  std::array<P*, K> p{};
  std::size_t rows = 0, cols = 0, ld = 0;

  P* row(int c, std::size_t i) const { return p[static_cast<std::size_t>(c)] + i * ld; }
  MultiWord<K> get(std::size_t i, std::size_t j) const {
    MultiWord<K> r;
    for (int c = 0; c < K; ++c) r[c] = row(c, i)[j];
    return r;
  }
  void put(std::size_t i, std::size_t j, const MultiWord<K>& v) const {
    for (int c = 0; c < K; ++c) row(c, i)[j] = v[c];
  }
  View sub(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    View v = *this;
    for (int c = 0; c < K; ++c) v.p[static_cast<std::size_t>(c)] += r0 * ld + c0;
    v.rows = nr;
    v.cols = nc;
    return v;
  }
};

template <int K>
using CView = View<K, const double>;
template <int K>
using MView = View<K, double>;

template <int K>
CView<K> cview(const MWMatrix<K>& m) {
  CView<K> v;
  for (int c = 0; c < K; ++c) v.p[static_cast<std::size_t>(c)] = m.plane(c);
  v.rows = m.rows();
  v.cols = m.cols();
  v.ld = m.cols();
  return v;
}

template <int K>
MView<K> mview(MWMatrix<K>& m) {
  MView<K> v;
  for (int c = 0; c < K; ++c) v.p[static_cast<std::size_t>(c)] = m.plane(c);
  v.rows = m.rows();
  v.cols = m.cols();
  v.ld = m.cols();
  return v;
}

template <int K>
CView<K> as_const(const MView<K>& m) {
  CView<K> v;
  for (int c = 0; c < K; ++c) v.p[static_cast<std::size_t>(c)] = m.p[static_cast<std::size_t>(c)];
  v.rows = m.rows;
  v.cols = m.cols;
  v.ld = m.ld;
  return v;
}

// W consecutive entries of one row as a lane batch (W == 1: a scalar).
template <int K, int W>
struct Seg {
  using Base = std::conditional_t<W == 1, double, Lanes<W>>;
  using Value = MultiWord<K, Base>;

  template <class P>
  static Value load(const View<K, P>& v, std::size_t i, std::size_t j) {
    Value r;
    for (int c = 0; c < K; ++c) {
      if constexpr (W == 1) r[c] = v.row(c, i)[j];
      else r[c] = Lanes<W>::load(v.row(c, i) + j);
    }
    return r;
  }
  static void store(const MView<K>& v, std::size_t i, std::size_t j, const Value& x) {
    for (int c = 0; c < K; ++c) {
      if constexpr (W == 1) v.row(c, i)[j] = x[c];
      else x[c].store(v.row(c, i) + j);
    }
  }
  static Value bcast(const MultiWord<K>& x) {
    Value r;
    for (int c = 0; c < K; ++c) r[c] = Base(x[c]);
    return r;
  }
  static Value zero() { return bcast(MultiWord<K>{}); }
};

// Naive i-j-k loop over output rows [i0, i1).
template <Variant V, int K, int W>
void naive_rows(const CView<K>& a, const CView<K>& b, const MView<K>& c, std::size_t i0,
                std::size_t i1) {
  using S = Seg<K, W>;
  using S1 = Seg<K, 1>;
  const std::size_t m = a.cols, p = b.cols;
  for (std::size_t i = i0; i < i1; ++i) {
    std::size_t j = 0;
    for (; j + W <= p && W > 1; j += W) {
      auto acc = S::zero();
      for (std::size_t k = 0; k < m; ++k)
        acc = add<V>(acc, mul<V>(S::bcast(a.get(i, k)), S::load(b, k, j)));
      S::store(c, i, j, acc);
    }
    for (; j < p; ++j) {
      auto acc = S1::zero();
      for (std::size_t k = 0; k < m; ++k) acc = add<V>(acc, mul<V>(a.get(i, k), b.get(k, j)));
      c.put(i, j, acc);
    }
  }
}

// Cache-blocked i-k-j loop over output rows [i0, i1), accumulating in c.
template <Variant V, int K, int W>
void blocked_rows(const CView<K>& a, const CView<K>& b, const MView<K>& c, std::size_t i0,
                  std::size_t i1, std::size_t bs) {
  using S = Seg<K, W>;
  const std::size_t m = a.cols, p = b.cols;
  for (std::size_t i = i0; i < i1; ++i)
    for (std::size_t j = 0; j < p; ++j) c.put(i, j, MultiWord<K>{});
  for (std::size_t kb = 0; kb < m; kb += bs) {
    const std::size_t ke = std::min(m, kb + bs);
    for (std::size_t jb = 0; jb < p; jb += bs) {
      const std::size_t je = std::min(p, jb + bs);
      for (std::size_t i = i0; i < i1; ++i)
        for (std::size_t k = kb; k < ke; ++k) {
          const MultiWord<K> aik = a.get(i, k);
          const auto av = S::bcast(aik);
          std::size_t j = jb;
          for (; j + W <= je && W > 1; j += W)
            S::store(c, i, j, add<V>(S::load(c, i, j), mul<V>(av, S::load(b, k, j))));
          for (; j < je; ++j) c.put(i, j, add<V>(c.get(i, j), mul<V>(aik, b.get(k, j))));
        }
    }
  }
}

template <Variant V, int K, int W>
void gemm(const CView<K>& a, const CView<K>& b, const MView<K>& c, Scheme scheme, std::size_t bs,
          int threads) {
  const std::size_t n = a.rows;
  const std::size_t chunk = bs;
  const std::size_t tasks = (n + chunk - 1) / chunk;
  parallel_for(tasks, threads, [&](std::size_t t) {
    const std::size_t i0 = t * chunk, i1 = std::min(n, i0 + chunk);
    if (scheme == Scheme::Naive) naive_rows<V, K, W>(a, b, c, i0, i1);
    else blocked_rows<V, K, W>(a, b, c, i0, i1, bs);
  });
}

// z = x + sign * y elementwise.
template <Variant V, int K, int W>
void axpy(const CView<K>& x, const CView<K>& y, const MView<K>& z, bool subtract) {
  using S = Seg<K, W>;
  for (std::size_t i = 0; i < x.rows; ++i) {
    std::size_t j = 0;
    for (; j + W <= x.cols && W > 1; j += W) {
      auto yv = S::load(y, i, j);
      S::store(z, i, j, add<V>(S::load(x, i, j), subtract ? neg(yv) : yv));
    }
    for (; j < x.cols; ++j) {
      auto yv = y.get(i, j);
      z.put(i, j, add<V>(x.get(i, j), subtract ? neg(yv) : yv));
    }
  }
}

template <Variant V, int K, int W>
void accumulate(const MView<K>& z, const CView<K>& y, bool subtract) {
  axpy<V, K, W>(as_const(z), y, z, subtract);
}

template <Variant V, int K, int W>
void copy_into(const MView<K>& z, const CView<K>& y) {
  for (int c = 0; c < K; ++c)
    for (std::size_t i = 0; i < y.rows; ++i)
      std::copy(y.row(c, i), y.row(c, i) + y.cols, z.row(c, i));
}

template <Variant V, int K, int W>
void strassen(const CView<K>& a, const CView<K>& b, const MView<K>& c, std::size_t cutoff,
              std::size_t bs, int threads);

// One of the seven half-size products.
template <Variant V, int K, int W>
MWMatrix<K> strassen_product(const CView<K>& a, const CView<K>& b, int which, std::size_t cutoff,
                             std::size_t bs, int threads) {
  const std::size_t h = a.rows / 2;
  const auto a11 = a.sub(0, 0, h, h), a12 = a.sub(0, h, h, h), a21 = a.sub(h, 0, h, h),
             a22 = a.sub(h, h, h, h);
  const auto b11 = b.sub(0, 0, h, h), b12 = b.sub(0, h, h, h), b21 = b.sub(h, 0, h, h),
             b22 = b.sub(h, h, h, h);
  MWMatrix<K> s(h, h), t(h, h), m(h, h);
  const auto sv = mview(s), tv = mview(t);
  CView<K> lhs = as_const(sv), rhs = as_const(tv);
  switch (which) {
    case 0:  // (A11 + A22)(B11 + B22)
      axpy<V, K, W>(a11, a22, sv, false);
      axpy<V, K, W>(b11, b22, tv, false);
      break;
    case 1:  // (A21 + A22) B11
      axpy<V, K, W>(a21, a22, sv, false);
      rhs = b11;
      break;
    case 2:  // A11 (B12 - B22)
      lhs = a11;
      axpy<V, K, W>(b12, b22, tv, true);
      break;
    case 3:  // A22 (B21 - B11)
      lhs = a22;
      axpy<V, K, W>(b21, b11, tv, true);
      break;
    case 4:  // (A11 + A12) B22
      axpy<V, K, W>(a11, a12, sv, false);
      rhs = b22;
      break;
    case 5:  // (A21 - A11)(B11 + B12)
      axpy<V, K, W>(a21, a11, sv, true);
      axpy<V, K, W>(b11, b12, tv, false);
      break;
    default:  // (A12 - A22)(B21 + B22)
      axpy<V, K, W>(a12, a22, sv, true);
      axpy<V, K, W>(b21, b22, tv, false);
      break;
  }
  strassen<V, K, W>(lhs, rhs, mview(m), cutoff, bs, threads);
  return m;
}

template <Variant V, int K, int W>
void strassen(const CView<K>& a, const CView<K>& b, const MView<K>& c, std::size_t cutoff,
              std::size_t bs, int threads) {
  const std::size_t n = a.rows;
  if (n <= cutoff) {
    gemm<V, K, W>(a, b, c, Scheme::Blocked, bs, threads);
    return;
  }
  if (n % 2 == 1) {
    // Peel the last row and column: the even leading block recurses, the
    // strips go through the blocked kernel.
    const std::size_t e = n - 1;
    const auto c11 = c.sub(0, 0, e, e);
    strassen<V, K, W>(a.sub(0, 0, e, e), b.sub(0, 0, e, e), c11, cutoff, bs, threads);
    MWMatrix<K> outer(e, e);
    gemm<V, K, W>(a.sub(0, e, e, 1), b.sub(e, 0, 1, e), mview(outer), Scheme::Blocked, bs, threads);
    accumulate<V, K, W>(c11, cview(outer), false);
    gemm<V, K, W>(a.sub(0, 0, e, n), b.sub(0, e, n, 1), c.sub(0, e, e, 1), Scheme::Blocked, bs,
                  threads);
    gemm<V, K, W>(a.sub(e, 0, 1, n), b, c.sub(e, 0, 1, n), Scheme::Blocked, bs, threads);
    return;
  }

  const std::size_t h = n / 2;
  const auto c11 = c.sub(0, 0, h, h), c12 = c.sub(0, h, h, h), c21 = c.sub(h, 0, h, h),
             c22 = c.sub(h, h, h, h);
  // Products go into fixed slots and are combined in a fixed order, so the
  // result does not depend on how many threads computed them.
  std::array<MWMatrix<K>, 7> m;
  const int inner = std::max(1, threads / 7);
  parallel_for(7, threads > 1 ? std::min(threads, 7) : 1, [&](std::size_t q) {
    m[q] = strassen_product<V, K, W>(a, b, static_cast<int>(q), cutoff, bs, inner);
  });
  // C11 = M1 + M4 - M5 + M7, C12 = M3 + M5, C21 = M2 + M4, C22 = M1 - M2 + M3 + M6
  copy_into<V, K, W>(c11, cview(m[0]));
  accumulate<V, K, W>(c11, cview(m[3]), false);
  accumulate<V, K, W>(c11, cview(m[4]), true);
  accumulate<V, K, W>(c11, cview(m[6]), false);
  axpy<V, K, W>(cview(m[2]), cview(m[4]), c12, false);
  axpy<V, K, W>(cview(m[1]), cview(m[3]), c21, false);
  axpy<V, K, W>(cview(m[0]), cview(m[1]), c22, true);
  accumulate<V, K, W>(c22, cview(m[2]), false);
  accumulate<V, K, W>(c22, cview(m[5]), false);
}

template <int K, class F>
decltype(auto) dispatch(const MatMulPlan& plan, F&& f) {
  return with_variant(plan.variant, [&]<Variant V>() -> decltype(auto) {
    if (!plan.simd) return f.template operator()<V, 1>();
    const int w = plan.lane_width == 0 ? native_lane_width() : plan.lane_width;
    return with_lane_width(w, [&]<int W>() -> decltype(auto) { return f.template operator()<V, W>(); });
  });
}

}  // namespace detail

/// A * B under `plan`. Strassen applies to square products; other shapes
/// use the blocked kernel. Throws std::invalid_argument on a shape mismatch.
template <int K>
MWMatrix<K> matmul(const MWMatrix<K>& a, const MWMatrix<K>& b, const MatMulPlan& plan = {}) {
  plan.validate();
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
  MWMatrix<K> c(a.rows(), b.cols());
  detail::dispatch<K>(plan, [&]<Variant V, int W>() {
    const auto av = detail::cview(a), bv = detail::cview(b);
    const auto cv = detail::mview(c);
    const auto bs = static_cast<std::size_t>(plan.block);
    const bool square = a.rows() == a.cols() && b.rows() == b.cols();
    if (plan.scheme == Scheme::Strassen && square)
      detail::strassen<V, K, W>(av, bv, cv, static_cast<std::size_t>(plan.strassen_cutoff), bs,
                                plan.threads);
    else
      detail::gemm<V, K, W>(av, bv, cv,
                            plan.scheme == Scheme::Naive ? Scheme::Naive : Scheme::Blocked, bs,
                            plan.threads);
  });
  return c;
}

/// Elementwise a + b (or a - b) in the plan's variant.
template <int K>
MWMatrix<K> matadd(const MWMatrix<K>& a, const MWMatrix<K>& b, const MatMulPlan& plan = {},
                   bool subtract = false) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matadd: shapes differ");
  MWMatrix<K> c(a.rows(), a.cols());
  detail::dispatch<K>(plan, [&]<Variant V, int W>() {
    detail::axpy<V, K, W>(detail::cview(a), detail::cview(b), detail::mview(c), subtract);
  });
  return c;
}

/// Complex product by the 3M method: P1 = Ar Br, P2 = Ai Bi,
/// P3 = (Ar + Ai)(Br + Bi); Re C = P1 - P2, Im C = (P3 - P1) - P2.
template <int K>
CMWMatrix<K> cmatmul(const CMWMatrix<K>& a, const CMWMatrix<K>& b, const MatMulPlan& plan = {}) {
  if (a.cols() != b.rows()) throw std::invalid_argument("cmatmul: inner dimensions differ");
  const MWMatrix<K> p1 = matmul(a.re, b.re, plan);
  const MWMatrix<K> p2 = matmul(a.im, b.im, plan);
  const MWMatrix<K> p3 = matmul(matadd(a.re, a.im, plan), matadd(b.re, b.im, plan), plan);
  CMWMatrix<K> c;
  c.re = matadd(p1, p2, plan, true);
  c.im = matadd(matadd(p3, p1, plan, true), p2, plan, true);
  return c;
}

/// Reference complex product accumulating four-multiplication cmul4 terms.
template <int K>
CMWMatrix<K> cmatmul_4m(const CMWMatrix<K>& a, const CMWMatrix<K>& b,
                        Variant v = Variant::Standard) {
  if (a.cols() != b.rows()) throw std::invalid_argument("cmatmul_4m: inner dimensions differ");
  CMWMatrix<K> c(a.rows(), b.cols());
  with_variant(v, [&]<Variant V>() {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        ComplexMW<K> s{};
        for (std::size_t k = 0; k < a.cols(); ++k) s = cadd<V>(s, cmul4<V>(a.at(i, k), b.at(k, j)));
        c.set(i, j, s);
      }
  });
  return c;
}

/// a_ij = sqrt(5) (i + j - 1), b_ij = sqrt(3) (n - i + 1) with 1-based i, j.
/// The square roots are rounded to K words by the oracle; the integer
/// factors are applied with one K-word multiplication.
template <int K>
std::pair<MWMatrix<K>, MWMatrix<K>> gen_test_matrices(std::size_t n) {
  if (n == 0) throw std::invalid_argument("matrix size must be positive");
  const MultiWord<K> s5 = sqrt_constant<K>(5), s3 = sqrt_constant<K>(3);
  MWMatrix<K> a(n, n), b(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      a.set(i - 1, j - 1, mul(s5, MultiWord<K>::from_base(static_cast<double>(i + j - 1))));
      b.set(i - 1, j - 1, mul(s3, MultiWord<K>::from_base(static_cast<double>(n - i + 1))));
    }
  return {std::move(a), std::move(b)};
}

namespace detail {

// exp(r_n) * (r_u - 1/2) with the product kept exactly as two words.
template <int K>
MultiWord<K> scaled_uniform(Rng& rng) {
  const double g = std::exp(rng.normal());
  const double u = rng.uniform01() - 0.5;
  const auto pe = two_prod(g, u);
  MultiWord<K> r;
  r[0] = pe.s;
  if constexpr (K > 1) r[1] = pe.e;
  return r;
}

}  // namespace detail

/// Entries exp(r_n)(r_u - 1/2) + i exp(r_n)(r_u - 1/2) with fresh normal
/// r_n and uniform r_u draws for every part; A is filled row-major first,
/// then B, each entry drawing (r_n, r_u) for the real part then the
/// imaginary part.
template <int K>
std::pair<CMWMatrix<K>, CMWMatrix<K>> gen_complex_test_matrices(std::size_t n,
                                                                std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("matrix size must be positive");
  Rng rng(seed);
  CMWMatrix<K> a(n, n), b(n, n);
  for (auto* m : {&a, &b})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const MultiWord<K> re = detail::scaled_uniform<K>(rng);
        const MultiWord<K> im = detail::scaled_uniform<K>(rng);
        m->set(i, j, {re, im});
      }
  return {std::move(a), std::move(b)};
}

/// Entries uniform in [-1, 1) as base floats promoted to K words.
template <int K>
MWMatrix<K> random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Rng rng(seed);
  MWMatrix<K> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.set(i, j, MultiWord<K>::from_base(rng.uniform(-1.0, 1.0)));
  return m;
}

/// Entries as 300-bit oracle values, row-major.
template <int K>
std::vector<BigFloat> to_oracle_matrix(const MWMatrix<K>& m) {
  std::vector<BigFloat> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(to_bigfloat(m.at(i, j)));
  return out;
}

/// Product of the exact values of a and b at 300 bits.
template <int K>
std::vector<BigFloat> oracle_product(const MWMatrix<K>& a, const MWMatrix<K>& b) {
  return oracle_matmul(to_oracle_matrix(a), to_oracle_matrix(b), a.rows(), a.cols(), b.cols());
}

/// Complex product of the exact values at 300 bits, as (re, im) row-major.
template <int K>
std::vector<BigComplex> oracle_product(const CMWMatrix<K>& a, const CMWMatrix<K>& b) {
  const auto ar = to_oracle_matrix(a.re), ai = to_oracle_matrix(a.im);
  const auto br = to_oracle_matrix(b.re), bi = to_oracle_matrix(b.im);
  const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
  const auto rr = oracle_matmul(ar, br, n, m, p), ii = oracle_matmul(ai, bi, n, m, p);
  const auto ri = oracle_matmul(ar, bi, n, m, p), ir = oracle_matmul(ai, br, n, m, p);
  std::vector<BigComplex> out(n * p);
  for (std::size_t q = 0; q < n * p; ++q) out[q] = {sub(rr[q], ii[q]), add(ri[q], ir[q])};
  return out;
}

/// Minimum and maximum significant digits of c against a row-major oracle.
struct DigitRange {
  double min = 0;
  double max = 0;
};

template <int K>
DigitRange digit_range(const MWMatrix<K>& c, const std::vector<BigFloat>& exact) {
  DigitRange r{1e300, -1e300};
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      const double d = significant_digits(c.at(i, j), exact[i * c.cols() + j]);
      r.min = std::min(r.min, d);
      r.max = std::max(r.max, d);
    }
  return r;
}

template <int K>
DigitRange digit_range(const CMWMatrix<K>& c, const std::vector<BigComplex>& exact) {
  DigitRange r{1e300, -1e300};
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      const double d = significant_digits(c.at(i, j), exact[i * c.cols() + j]);
      r.min = std::min(r.min, d);
      r.max = std::max(r.max, d);
    }
  return r;
}

// Text format: "MW K rows cols", then rows*cols decimal entries row-major.
// Complex files use the same header with re and im interleaved per entry.

template <int K>
void write_matrix(std::ostream& os, const MWMatrix<K>& m) {
  os << "MW " << K << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << to_exact_decimal_string(m.at(i, j)) << (j + 1 == m.cols() ? '\n' : ' ');
}

template <int K>
void write_matrix(std::ostream& os, const CMWMatrix<K>& m) {
  os << "MW " << K << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << to_exact_decimal_string(m.re.at(i, j)) << ' ' << to_exact_decimal_string(m.im.at(i, j))
         << (j + 1 == m.cols() ? '\n' : ' ');
}

namespace detail {

inline std::pair<std::size_t, std::size_t> read_matrix_header(std::istream& is, int k) {
  std::string tag;
  int file_k = 0;
  std::size_t rows = 0, cols = 0;
  if (!(is >> tag >> file_k >> rows >> cols) || tag != "MW")
    throw std::runtime_error("matrix file: expected header 'MW K rows cols'");
  if (file_k != k) throw std::runtime_error("matrix file: precision does not match");
  if (rows == 0 || cols == 0) throw std::runtime_error("matrix file: dimensions must be positive");
  return {rows, cols};
}

template <int K>
MultiWord<K> read_entry(std::istream& is) {
  std::string tok;
  if (!(is >> tok)) throw std::runtime_error("matrix file: too few entries");
  return from_decimal_string<K>(tok);
}

}  // namespace detail

template <int K>
MWMatrix<K> read_matrix(std::istream& is) {
  const auto [rows, cols] = detail::read_matrix_header(is, K);
  MWMatrix<K> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, detail::read_entry<K>(is));
  return m;
}

template <int K>
CMWMatrix<K> read_complex_matrix(std::istream& is) {
  const auto [rows, cols] = detail::read_matrix_header(is, K);
  CMWMatrix<K> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const MultiWord<K> re = detail::read_entry<K>(is);
      const MultiWord<K> im = detail::read_entry<K>(is);
      m.set(i, j, {re, im});
    }
  return m;
}

}  // namespace mw

#endif  // MW_LINALG_HPP
