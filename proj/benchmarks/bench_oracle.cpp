#include <benchmark/benchmark.h>

#include "dising/oracle.hpp"

using namespace dising;

namespace {

void BM_EdSpinChain(benchmark::State& state) {
  const ChainParams p{static_cast<int>(state.range(0)), 1.0, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(ed_spin_chain(p));
}
BENCHMARK(BM_EdSpinChain)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BdgDense(benchmark::State& state) {
  const ChainParams p{static_cast<int>(state.range(0)), 1.0, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(bdg_spin_chain(p, BdgMethod::dense));
}
BENCHMARK(BM_BdgDense)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMicrosecond);

void BM_BdgBidiagonal(benchmark::State& state) {
  const ChainParams p{static_cast<int>(state.range(0)), 1.0, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(bdg_spin_chain(p, BdgMethod::bidiagonal));
}
BENCHMARK(BM_BdgBidiagonal)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMicrosecond);

void BM_DickeIsing(benchmark::State& state) {
  DickeIsingOptions o;
  o.verify_cutoff = false;
  for (auto _ : state) benchmark::DoNotOptimize(ed_dicke_ising({6, 1.0, -0.1}, 0.1, o));
}
BENCHMARK(BM_DickeIsing)->Unit(benchmark::kMillisecond);

}  // namespace
