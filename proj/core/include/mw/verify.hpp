// Oracle-backed verification suites shared by the CLI and the acceptance
// test. Each suite returns one CheckResult per claim it checks.

#ifndef MW_VERIFY_HPP
#define MW_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mw {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  /// Informational checks report but never fail a run.
  bool informational = false;
};

struct VerifyOptions {
  std::size_t eft_pairs = 1000000;
  std::size_t op_pairs = 100000;
  std::size_t batches = 10000;
  std::size_t matmul_n = 64;
  /// Largest n for the scheme and thread determinism checks.
  std::size_t determinism_n = 128;
  std::size_t max_poly_degree = 1024;
  /// Matrix size for the informational timing checks; 0 skips them.
  std::size_t perf_n = 512;
  std::uint64_t seed = 20240601;

  /// Counts small enough for a smoke run in a few seconds.
  static VerifyOptions quick();
};

/// Names accepted by run_suite, in the order run_all uses.
std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

std::vector<CheckResult> run_all(const VerifyOptions& opt);

}  // namespace mw

#endif  // MW_VERIFY_HPP
