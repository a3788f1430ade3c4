#include <benchmark/benchmark.h>

#include "mw/poly.hpp"
#include "mw/roots.hpp"

namespace {

template <int K, mw::Variant V>
void BM_Horner(benchmark::State& state) {
  const auto p = mw::random_polynomial<K>(static_cast<std::size_t>(state.range(0)), 1);
  const auto x = mw::MultiWord<K>::from_base(0.7);
  for (auto _ : state) benchmark::DoNotOptimize(mw::horner_eval<V>(p, x));
}

template <int K, mw::Variant V>
void BM_Estrin(benchmark::State& state) {
  const auto p = mw::random_polynomial<K>(static_cast<std::size_t>(state.range(0)), 1);
  const auto x = mw::MultiWord<K>::from_base(0.7);
  for (auto _ : state) benchmark::DoNotOptimize(mw::estrin_eval<V>(p, x));
}

template <int K, int W>
void BM_EstrinBatched(benchmark::State& state) {
  const auto p = mw::random_polynomial<K>(static_cast<std::size_t>(state.range(0)), 1);
  const auto xs = mw::splat<W>(mw::MultiWord<K>::from_base(0.7));
  for (auto _ : state) benchmark::DoNotOptimize(mw::estrin_eval_batched(p, xs, mw::Variant::BranchFree));
  state.SetItemsProcessed(state.iterations() * W);
}

template <int K, mw::Variant V>
void BM_DurandKernerChebyshev(benchmark::State& state) {
  const auto q = mw::chebyshev_coeffs<K>(static_cast<int>(state.range(0)));
  mw::DkOptions o;
  o.variant = V;
  o.simd = true;
  for (auto _ : state) benchmark::DoNotOptimize(mw::dk_solve(q, o));
}

using mw::Variant;

BENCHMARK(BM_Horner<2, Variant::Standard>)->Arg(64)->Arg(1024);
BENCHMARK(BM_Estrin<2, Variant::Standard>)->Arg(64)->Arg(1024);
BENCHMARK(BM_Horner<4, Variant::BranchFree>)->Arg(64)->Arg(1024);
BENCHMARK(BM_Estrin<4, Variant::BranchFree>)->Arg(64)->Arg(1024);
BENCHMARK(BM_EstrinBatched<4, 4>)->Arg(64)->Arg(1024);
BENCHMARK(BM_DurandKernerChebyshev<3, Variant::Standard>)->Arg(32);
BENCHMARK(BM_DurandKernerChebyshev<3, Variant::BranchFree>)->Arg(32);
BENCHMARK(BM_DurandKernerChebyshev<4, Variant::Standard>)->Arg(32);
BENCHMARK(BM_DurandKernerChebyshev<4, Variant::BranchFree>)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
