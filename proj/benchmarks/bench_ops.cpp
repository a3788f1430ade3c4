#include <benchmark/benchmark.h>

#include <vector>

#include "mw/batch.hpp"
#include "mw/rng.hpp"

namespace {

constexpr std::size_t kCount = 512;

template <int K>
std::vector<mw::MultiWord<K>> operands(std::uint64_t seed) {
  mw::Rng rng(seed);
  std::vector<mw::MultiWord<K>> v(kCount);
  for (auto& x : v) {
    x[0] = rng.uniform(0.5, 2.0);
    for (int i = 1; i < K; ++i) x[i] = x[i - 1] * 0x1p-54 * rng.uniform(-1.0, 1.0);
  }
  return v;
}

template <int K, mw::Variant V>
void BM_Add(benchmark::State& state) {
  const auto a = operands<K>(1), b = operands<K>(2);
  for (auto _ : state)
    for (std::size_t i = 0; i < kCount; ++i) benchmark::DoNotOptimize(mw::add<V>(a[i], b[i]));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kCount));
}

template <int K, mw::Variant V>
void BM_Mul(benchmark::State& state) {
  const auto a = operands<K>(1), b = operands<K>(2);
  for (auto _ : state)
    for (std::size_t i = 0; i < kCount; ++i) benchmark::DoNotOptimize(mw::mul<V>(a[i], b[i]));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kCount));
}

template <int K, mw::Variant V>
void BM_Div(benchmark::State& state) {
  const auto a = operands<K>(1), b = operands<K>(2);
  for (auto _ : state)
    for (std::size_t i = 0; i < kCount; ++i) benchmark::DoNotOptimize(mw::div(a[i], b[i], V));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kCount));
}

// Fused add then mul over W lanes at a time.
template <int K, int W, mw::Variant V>
void BM_BatchAxpy(benchmark::State& state) {
  const auto a = operands<K>(1), b = operands<K>(2);
  const auto pa = mw::pack<K, W>(std::span<const mw::MultiWord<K>>(a));
  const auto pb = mw::pack<K, W>(std::span<const mw::MultiWord<K>>(b));
  for (auto _ : state)
    for (std::size_t i = 0; i < pa.size(); ++i)
      benchmark::DoNotOptimize(mw::batch_mul(mw::batch_add(pa[i], pb[i], V), pb[i], V));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kCount));
}

using mw::Variant;
constexpr auto Std = Variant::Standard;
constexpr auto Bf = Variant::BranchFree;

BENCHMARK(BM_Add<2, Std>);
BENCHMARK(BM_Add<2, Bf>);
BENCHMARK(BM_Add<3, Std>);
BENCHMARK(BM_Add<3, Bf>);
BENCHMARK(BM_Add<4, Std>);
BENCHMARK(BM_Add<4, Bf>);
BENCHMARK(BM_Mul<2, Std>);
BENCHMARK(BM_Mul<2, Bf>);
BENCHMARK(BM_Mul<3, Std>);
BENCHMARK(BM_Mul<3, Bf>);
BENCHMARK(BM_Mul<4, Std>);
BENCHMARK(BM_Mul<4, Bf>);
BENCHMARK(BM_Div<2, Std>);
BENCHMARK(BM_Div<3, Std>);
BENCHMARK(BM_Div<4, Std>);
BENCHMARK(BM_BatchAxpy<3, 4, Std>);
BENCHMARK(BM_BatchAxpy<3, 4, Bf>);
BENCHMARK(BM_BatchAxpy<4, 4, Std>);
BENCHMARK(BM_BatchAxpy<4, 4, Bf>);
BENCHMARK(BM_BatchAxpy<4, 8, Bf>);

}  // namespace

BENCHMARK_MAIN();
