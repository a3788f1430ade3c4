// mwbench: benchmark and verification driver for the multiword library.
//
// Every bench subcommand writes BenchRecord rows, as CSV (to --csv PATH or
// stdout) or as a JSON array with --json. Exit codes: 0 success,
// 1 verification failure, 2 usage error, 3 root finder did not converge.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mw/linalg.hpp"
#include "mw/poly.hpp"
#include "mw/roots.hpp"
#include "mw/verify.hpp"

using nlohmann::json;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BenchRecord {
  std::string suite, precision, variant, simd, scheme;
  int threads = 1;
  std::size_t n = 0;
  int repeat = 0;
  double wall_seconds = 0.0;
  std::optional<double> digits_min, digits_max;
  std::string hardware, timestamp;
};

const char* const kCsvHeader =
    "suite,precision,variant,simd,scheme,threads,n,repeat,wall_seconds,digits_min,digits_max,"
    "hardware,timestamp";

std::string hardware_tag() {
  std::ifstream in("/proc/cpuinfo");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("model name", 0) != 0) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) break;
    std::string s = line.substr(colon + 1);
    s.erase(0, s.find_first_not_of(' '));
    std::replace(s.begin(), s.end(), ',', ' ');
    return s;
  }
  return "unknown";
}

std::string utc_timestamp() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string opt_num(const std::optional<double>& d) {
  if (!d) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", *d);
  return buf;
}

std::string csv_row(const BenchRecord& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.9g", r.wall_seconds);
  std::ostringstream os;
  os << r.suite << ',' << r.precision << ',' << r.variant << ',' << r.simd << ',' << r.scheme
     << ',' << r.threads << ',' << r.n << ',' << r.repeat << ',' << secs << ','
     << opt_num(r.digits_min) << ',' << opt_num(r.digits_max) << ',' << r.hardware << ','
     << r.timestamp;
  return os.str();
}

json to_json(const BenchRecord& r) {
  json j = {{"suite", r.suite},         {"precision", r.precision}, {"variant", r.variant},
            {"simd", r.simd},           {"scheme", r.scheme},       {"threads", r.threads},
            {"n", r.n},                 {"repeat", r.repeat},       {"wall_seconds", r.wall_seconds},
            {"digits_min", nullptr},    {"digits_max", nullptr},    {"hardware", r.hardware},
            {"timestamp", r.timestamp}};
  if (r.digits_min) j["digits_min"] = *r.digits_min;
  if (r.digits_max) j["digits_max"] = *r.digits_max;
  return j;
}

// Shared flags.
struct Common {
  std::vector<std::string> precisions{"dd", "td", "qd"};
  std::vector<std::string> variants{"std", "bf"};
  std::vector<std::string> simd{"on"};
  int threads = 1;
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 20240601;
  int repeats = 3;
  std::string csv;
  bool json_out = false;
  bool verify = false;
};

class Sink {
 public:
  explicit Sink(const Common& c) : c_(c) {
    if (!c.csv.empty()) {
      file_.open(c.csv);
      if (!file_) throw UsageError("cannot open " + c.csv + " for writing");
      file_ << kCsvHeader << '\n';
    } else if (!c.json_out) {
      std::cout << kCsvHeader << '\n';
    }
  }
  void add(BenchRecord r) {
    r.hardware = hardware_;
    r.timestamp = utc_timestamp();
    if (file_.is_open()) file_ << csv_row(r) << '\n' << std::flush;
    if (c_.json_out) {
      rows_.push_back(to_json(r));
    } else if (!file_.is_open()) {
      std::cout << csv_row(r) << '\n' << std::flush;
    }
  }
  ~Sink() {
    if (c_.json_out) std::cout << rows_.dump(2) << '\n';
  }

 private:
  const Common& c_;
  std::ofstream file_;
  json rows_ = json::array();
  std::string hardware_ = hardware_tag();
};

int precision_k(const std::string& p) {
  if (p == "dd") return 2;
  if (p == "td") return 3;
  if (p == "qd") return 4;
  throw UsageError("unknown precision '" + p + "' (expected dd, td or qd)");
}

mw::Variant parse_variant(const std::string& v) {
  if (v == "std") return mw::Variant::Standard;
  if (v == "bf") return mw::Variant::BranchFree;
  throw UsageError("unknown variant '" + v + "' (expected std or bf)");
}

bool parse_simd(const std::string& s) {
  if (s == "on") return true;
  if (s == "off") return false;
  throw UsageError("--simd takes on or off");
}

mw::Scheme parse_scheme(const std::string& s) {
  if (s == "naive") return mw::Scheme::Naive;
  if (s == "blocked") return mw::Scheme::Blocked;
  if (s == "strassen") return mw::Scheme::Strassen;
  throw UsageError("unknown scheme '" + s + "'");
}

template <class F>
decltype(auto) with_precision(int k, F&& f) {
  switch (k) {
    case 2: return f.template operator()<2>();
    case 3: return f.template operator()<3>();
    default: return f.template operator()<4>();
  }
}

template <class F>
double time_once(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// One warm-up call, then the median of `repeats` timed calls.
template <class F>
double median_time(int repeats, F&& f) {
  f();
  std::vector<double> t;
  for (int r = 0; r < repeats; ++r) t.push_back(time_once(f));
  std::sort(t.begin(), t.end());
  const std::size_t m = t.size() / 2;
  return t.size() % 2 ? t[m] : 0.5 * (t[m - 1] + t[m]);
}

void check_common(const Common& c) {
  if (c.threads < 1) throw UsageError("--threads must be positive");
  if (c.repeats < 1) throw UsageError("--repeats must be positive");
  for (const auto& p : c.precisions) precision_k(p);
  for (const auto& v : c.variants) parse_variant(v);
  for (const auto& s : c.simd) parse_simd(s);
  for (auto n : c.sizes)
    if (n == 0) throw UsageError("sizes must be positive");
}

std::vector<std::size_t> default_grid() {
  std::vector<std::size_t> g;
  for (std::size_t n = 32; n <= 2048; n *= 2) g.push_back(n);
  g.push_back(2049);
  return g;
}

// ---- bench-matmul / bench-cmatmul ----------------------------------------

template <int K>
void bench_real(const Common& c, const std::string& scheme, std::size_t n, Sink& sink) {
  const auto [a, b] = mw::gen_test_matrices<K>(n);
  std::optional<std::vector<mw::BigFloat>> exact;
  for (const auto& v : c.variants)
    for (const auto& s : c.simd) {
      mw::MatMulPlan plan;
      plan.scheme = parse_scheme(scheme);
      plan.variant = parse_variant(v);
      plan.simd = parse_simd(s);
      plan.threads = c.threads;
      plan.validate();
      mw::MWMatrix<K> out;
      BenchRecord r{"matmul", std::string(K == 2 ? "dd" : K == 3 ? "td" : "qd"), v, s, scheme,
                    c.threads, n, c.repeats};
      r.wall_seconds = median_time(c.repeats, [&] { out = mw::matmul(a, b, plan); });
      if (c.verify && n <= 128) {
        if (!exact) exact = mw::oracle_product(a, b);
        const auto d = mw::digit_range(out, *exact);
        r.digits_min = d.min;
        r.digits_max = d.max;
      }
      sink.add(r);
    }
}

template <int K>
void bench_complex(const Common& c, const std::string& scheme, std::size_t n, Sink& sink) {
  const auto [a, b] = mw::gen_complex_test_matrices<K>(n, c.seed);
  const std::string prec = K == 2 ? "dd" : K == 3 ? "td" : "qd";
  std::optional<std::vector<mw::BigComplex>> exact;
  for (const auto& v : c.variants)
    for (const auto& s : c.simd) {
      mw::MatMulPlan plan;
      plan.scheme = parse_scheme(scheme);
      plan.variant = parse_variant(v);
      plan.simd = parse_simd(s);
      plan.threads = c.threads;
      plan.validate();
      mw::CMWMatrix<K> out;
      BenchRecord r{"cmatmul", prec, v, s, scheme, c.threads, n, c.repeats};
      r.wall_seconds = median_time(c.repeats, [&] { out = mw::cmatmul(a, b, plan); });
      if (c.verify && n <= 128) {
        if (!exact) exact = mw::oracle_product(a, b);
        const auto d = mw::digit_range(out, *exact);
        r.digits_min = d.min;
        r.digits_max = d.max;
      }
      // Real product of the same size and plan, for the complex/real ratio.
      mw::MWMatrix<K> real_out;
      BenchRecord base{"cmatmul-real-baseline", prec, v, s, scheme, c.threads, n, c.repeats};
      base.wall_seconds = median_time(c.repeats, [&] { real_out = mw::matmul(a.re, b.re, plan); });
      std::fprintf(stderr, "%s %s simd=%s n=%zu complex/real time ratio %.2f\n", prec.c_str(),
                   v.c_str(), s.c_str(), n, r.wall_seconds / base.wall_seconds);
      sink.add(r);
      sink.add(base);
    }
}

// ---- bench-polyeval ------------------------------------------------------

// Seconds per evaluation: repeat f until at least `min_seconds` have passed.
template <class F>
double per_call_seconds(F&& f, double min_seconds = 0.02) {
  std::size_t calls = 1;
  for (;;) {
    const double t = time_once([&] {
      for (std::size_t i = 0; i < calls; ++i) f();
    });
    if (t >= min_seconds || calls >= (std::size_t{1} << 30)) return t / static_cast<double>(calls);
    calls *= 2;
  }
}

template <class T>
void keep(const T& x) {
  asm volatile("" : : "g"(&x) : "memory");
}

template <int K>
void bench_poly(const Common& c, std::size_t degree, bool complex_arg, Sink& sink) {
  const std::string prec = K == 2 ? "dd" : K == 3 ? "td" : "qd";
  const auto p = mw::random_polynomial<K>(degree, c.seed + degree);
  mw::Rng rng(c.seed ^ degree);
  const auto x = mw::MultiWord<K>::from_base(rng.uniform(-1.0, 1.0));
  const mw::ComplexMW<K> z{x, mw::MultiWord<K>::from_base(rng.uniform(-1.0, 1.0))};
  const std::string suite = complex_arg ? "polyeval-complex" : "polyeval";

  for (const auto& vs : c.variants) {
    const mw::Variant v = parse_variant(vs);
    // Horner and Estrin must agree to 4 ulps of sum |a_i||x|^i.
    if (!complex_arg) {
      const auto h = mw::horner_eval(p, x, v);
      const auto e = mw::estrin_eval(p, x, v);
      double scale = 0.0, xp = 1.0;
      for (const auto& a : p.a) {
        scale += std::fabs(a[0]) * xp;
        xp *= std::fabs(x[0]);
      }
      const mw::Rational diff = (mw::to_oracle(h) - mw::to_oracle(e)).abs();
      if (!diff.is_zero() &&
          diff.ldexp(mw::precision_bits<K> - 1 - std::ilogb(scale)).to_double() > 4.0)
        throw std::runtime_error("Horner and Estrin disagree by more than 4 ulps at degree " +
                                 std::to_string(degree));
    }
    for (const auto& s : c.simd) {
      const bool simd = parse_simd(s);
      std::vector<std::pair<std::string, std::function<void()>>> methods;
      if (complex_arg) {
        methods.emplace_back("horner", [&] { keep(mw::eval_complex(p, z, mw::EvalMethod::Horner, v)); });
        methods.emplace_back("estrin", [&] { keep(mw::eval_complex(p, z, mw::EvalMethod::Estrin, v)); });
      } else {
        methods.emplace_back("horner", [&] { keep(mw::horner_eval(p, x, v)); });
        methods.emplace_back("estrin", [&] { keep(mw::estrin_eval(p, x, v)); });
      }
      if (!complex_arg && simd) {
        const int w = mw::native_lane_width();
        mw::with_lane_width(w, [&]<int W>() {
          const auto xs = mw::splat<W>(x);
          // Per-argument cost: one batch evaluates W arguments.
          methods.emplace_back("estrin-batched-w" + std::to_string(W), [&, xs] {
            keep(mw::estrin_eval_batched(p, xs, v));
          });
        });
      }
      for (auto& [name, fn] : methods) {
        std::vector<double> t;
        fn();
        for (int r = 0; r < c.repeats; ++r) t.push_back(per_call_seconds(fn));
        std::sort(t.begin(), t.end());
        double secs = t[t.size() / 2];
        if (name.rfind("estrin-batched-w", 0) == 0)
          secs /= std::stod(name.substr(std::string("estrin-batched-w").size()));
        BenchRecord r{suite, prec, vs, s, name, 1, degree, c.repeats};
        r.wall_seconds = secs;
        if (c.verify) {
          double d = 0.0;
          if (complex_arg) {
            d = mw::significant_digits(
                mw::eval_complex(p, z, name == "horner" ? mw::EvalMethod::Horner
                                                        : mw::EvalMethod::Estrin, v),
                mw::oracle_eval(p, z));
          } else {
            const auto y = name == "horner" ? mw::horner_eval(p, x, v) : mw::estrin_eval(p, x, v);
            d = mw::significant_digits(y, mw::OracleValue(mw::oracle_eval(p, x)));
          }
          r.digits_min = r.digits_max = d;
        }
        sink.add(r);
      }
    }
  }
}

// ---- solve-dk ------------------------------------------------------------

struct DkArgs {
  std::string poly_file;
  int chebyshev = 0;
  std::string rule = "literal";
  int max_iter = 200;
  double tol = 0.0;
  bool print_roots = true;
};

template <int K>
int solve_dk(const Common& c, const DkArgs& d) {
  mw::MonicPoly<K> q;
  if (!d.poly_file.empty()) {
    std::ifstream in(d.poly_file);
    if (!in) throw UsageError("cannot open " + d.poly_file);
    q = mw::MonicPoly<K>::from_polynomial(mw::read_polynomial<K>(in));
  } else {
    q = mw::chebyshev_coeffs<K>(d.chebyshev, mw::chebyshev_rule(d.rule));
  }
  mw::DkOptions o;
  o.variant = parse_variant(c.variants.front());
  o.simd = parse_simd(c.simd.front());
  o.threads = c.threads;
  o.max_iter = d.max_iter;
  o.tol = d.tol;

  mw::RootState<K> s;
  bool converged = true;
  const double secs = time_once([&] {
    try {
      s = mw::dk_solve(q, o);
    } catch (const mw::NoConvergence<K>& e) {
      s = e.state();
      converged = false;
    }
  });
  const mw::BigFloat res = mw::residual_check(q, s.z);
  json out = {{"precision", c.precisions.front()},
              {"variant", c.variants.front()},
              {"simd", c.simd.front()},
              {"threads", c.threads},
              {"degree", q.degree()},
              {"iterations", s.iteration},
              {"converged", converged},
              {"wall_seconds", secs},
              {"max_residual", res.to_decimal(6)}};
  json roots = json::array();
  for (const auto& z : s.z) roots.push_back({mw::to_decimal_string(z.re), mw::to_decimal_string(z.im)});
  if (d.print_roots) out["roots"] = roots;
  std::cout << out.dump(2) << '\n';
  return converged ? 0 : kExitNoConvergence;
}

// ---- verify --------------------------------------------------------------

int verify(const std::vector<std::string>& suites, bool quick, bool json_out, std::size_t perf_n) {
  mw::VerifyOptions opt = quick ? mw::VerifyOptions::quick() : mw::VerifyOptions{};
  if (perf_n != static_cast<std::size_t>(-1)) opt.perf_n = perf_n;
  const auto names = suites.empty() ? mw::suite_names() : suites;
  for (const auto& s : names) {
    const auto all = mw::suite_names();
    if (std::find(all.begin(), all.end(), s) == all.end())
      throw UsageError("unknown suite '" + s + "'");
  }
  bool ok = true;
  json rows = json::array();
  for (const auto& s : names)
    for (const auto& r : mw::run_suite(s, opt)) {
      const char* status = r.informational ? "INFO" : r.passed ? "PASS" : "FAIL";
      if (!r.informational && !r.passed) ok = false;
      if (json_out) {
        rows.push_back({{"suite", s}, {"check", r.name}, {"status", status}, {"detail", r.detail}});
      } else {
        std::printf("%-5s %-70s %s\n", status, r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
      }
    }
  if (json_out) std::cout << json{{"passed", ok}, {"checks", rows}}.dump(2) << '\n';
  return ok ? 0 : kExitVerify;
}

void add_common(CLI::App* app, Common& c, bool sizes) {
  app->add_option("--precision", c.precisions, "dd, td, qd (comma separated)")->delimiter(',');
  app->add_option("--variant", c.variants, "std, bf (comma separated)")->delimiter(',');
  app->add_option("--simd", c.simd, "on, off (comma separated)")->delimiter(',');
  app->add_option("--threads", c.threads, "worker threads");
  if (sizes) app->add_option("--sizes", c.sizes, "problem sizes (comma separated)")->delimiter(',');
  app->add_option("--seed", c.seed, "random seed");
  app->add_option("--repeats", c.repeats, "timed repeats per point; the median is reported");
  app->add_option("--csv", c.csv, "write CSV to this path instead of stdout");
  app->add_flag("--json", c.json_out, "print records as JSON on stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiword floating-point benchmarks and verification"};
  app.require_subcommand(1);

  Common c;
  std::string scheme = "strassen";

  auto* mm = app.add_subcommand("bench-matmul", "real matrix products of the test matrices");
  add_common(mm, c, true);
  mm->add_option("--scheme", scheme, "naive, blocked or strassen");
  mm->add_flag("--verify", c.verify, "add oracle digit counts for n <= 128");

  auto* cm = app.add_subcommand("bench-cmatmul", "complex 3M matrix products");
  add_common(cm, c, true);
  cm->add_option("--scheme", scheme, "naive, blocked or strassen");
  cm->add_flag("--verify", c.verify, "add oracle digit counts for n <= 128");

  std::string arg_kind = "real";
  auto* pe = app.add_subcommand("bench-polyeval", "Horner, Estrin and batched Estrin timing");
  add_common(pe, c, false);
  pe->add_option("--degrees", c.sizes, "polynomial degrees (comma separated)")->delimiter(',');
  pe->add_option("--arg", arg_kind, "real or complex");
  pe->add_flag("--verify", c.verify, "add oracle digit counts");

  DkArgs dk;
  bool no_roots = false;
  auto* sd = app.add_subcommand("solve-dk", "Durand-Kerner roots of a polynomial");
  add_common(sd, c, false);
  auto* src_file = sd->add_option("--poly-file", dk.poly_file, "file with a 'POLY K n' header");
  auto* src_cheb = sd->add_option("--chebyshev", dk.chebyshev, "Chebyshev quadrature polynomial of degree n");
  src_file->excludes(src_cheb);
  sd->add_option("--rule", dk.rule, "Chebyshev coefficient rule: literal or quadrature");
  sd->add_option("--max-iter", dk.max_iter, "iteration limit");
  sd->add_option("--tol", dk.tol, "relative update tolerance (0 = default)");
  sd->add_flag("--no-roots", no_roots, "omit roots from the JSON summary");

  std::vector<std::string> suites;
  bool quick = false, verify_json = false;
  std::size_t perf_n = static_cast<std::size_t>(-1);
  auto* vf = app.add_subcommand("verify", "oracle-backed accuracy checks");
  vf->add_option("--suite", suites, "suites to run (default all)")->delimiter(',');
  vf->add_flag("--quick", quick, "small sample counts");
  vf->add_flag("--json", verify_json, "JSON report");
  vf->add_option("--perf-n", perf_n, "matrix size for timing checks (0 skips them)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    mw::require_round_to_nearest();
    if (vf->parsed()) return verify(suites, quick, verify_json, perf_n);

    check_common(c);
    if (sd->parsed()) {
      if (dk.poly_file.empty() && dk.chebyshev <= 0)
        throw UsageError("solve-dk needs --poly-file or --chebyshev n");
      if (dk.max_iter < 1) throw UsageError("--max-iter must be positive");
      dk.print_roots = !no_roots;
      mw::chebyshev_rule(dk.rule);
      return with_precision(precision_k(c.precisions.front()),
                            [&]<int K>() { return solve_dk<K>(c, dk); });
    }

    if (mm->parsed() || cm->parsed()) {
      parse_scheme(scheme);
      if (c.sizes.empty()) c.sizes = default_grid();
    }
    if (pe->parsed()) {
      if (arg_kind != "real" && arg_kind != "complex")
        throw UsageError("--arg takes real or complex");
      if (c.sizes.empty()) c.sizes = {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
    }

    Sink sink(c);
    for (const auto& p : c.precisions)
      with_precision(precision_k(p), [&]<int K>() {
        for (std::size_t n : c.sizes) {
          if (mm->parsed()) bench_real<K>(c, scheme, n, sink);
          if (cm->parsed()) bench_complex<K>(c, scheme, n, sink);
          if (pe->parsed()) bench_poly<K>(c, n, arg_kind == "complex", sink);
        }
      });
    return 0;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "mwbench: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "mwbench: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "mwbench: %s\n", e.what());
    return kExitVerify;
  }
}
