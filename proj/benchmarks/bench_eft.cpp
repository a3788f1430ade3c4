#include <benchmark/benchmark.h>

#include <vector>

#include "mw/eft.hpp"
#include "mw/rng.hpp"

namespace {

std::vector<double> inputs(std::size_t n) {
  mw::Rng rng(1);
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(-1.0, 1.0);
  return v;
}

void BM_TwoSum(benchmark::State& state) {
  const auto a = inputs(1024), b = inputs(1024);
  for (auto _ : state)
    for (std::size_t i = 0; i < a.size(); ++i) {
      benchmark::DoNotOptimize(mw::two_sum(a[i], b[i]));
    }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}
BENCHMARK(BM_TwoSum);

void BM_TwoProd(benchmark::State& state) {
  const auto a = inputs(1024), b = inputs(1024);
  for (auto _ : state)
    for (std::size_t i = 0; i < a.size(); ++i) {
      benchmark::DoNotOptimize(mw::two_prod(a[i], b[i]));
    }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}
BENCHMARK(BM_TwoProd);

}  // namespace

BENCHMARK_MAIN();
