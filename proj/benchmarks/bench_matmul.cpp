#include <benchmark/benchmark.h>

#include "mw/linalg.hpp"

namespace {

template <int K, mw::Scheme S, mw::Variant V, bool Simd>
void BM_Matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = mw::random_matrix<K>(n, n, 1), b = mw::random_matrix<K>(n, n, 2);
  mw::MatMulPlan plan;
  plan.scheme = S;
  plan.variant = V;
  plan.simd = Simd;
  for (auto _ : state) benchmark::DoNotOptimize(mw::matmul(a, b, plan));
}

template <int K>
void BM_ComplexMatmul3M(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto [a, b] = mw::gen_complex_test_matrices<K>(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(mw::cmatmul(a, b, {}));
}

using mw::Scheme;
using mw::Variant;

BENCHMARK(BM_Matmul<2, Scheme::Naive, Variant::Standard, false>)->Arg(64);
BENCHMARK(BM_Matmul<2, Scheme::Blocked, Variant::Standard, true>)->Arg(64)->Arg(128);
BENCHMARK(BM_Matmul<2, Scheme::Strassen, Variant::Standard, true>)->Arg(128)->Arg(256);
BENCHMARK(BM_Matmul<2, Scheme::Strassen, Variant::BranchFree, true>)->Arg(128)->Arg(256);
BENCHMARK(BM_Matmul<3, Scheme::Strassen, Variant::Standard, true>)->Arg(128);
BENCHMARK(BM_Matmul<3, Scheme::Strassen, Variant::BranchFree, true>)->Arg(128);
BENCHMARK(BM_Matmul<4, Scheme::Strassen, Variant::Standard, true>)->Arg(128);
BENCHMARK(BM_Matmul<4, Scheme::Strassen, Variant::BranchFree, true>)->Arg(128);
BENCHMARK(BM_ComplexMatmul3M<2>)->Arg(64)->Arg(128);
BENCHMARK(BM_ComplexMatmul3M<4>)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
