#include <benchmark/benchmark.h>

#include "dising/cavity.hpp"
#include "dising/hp1.hpp"

using namespace dising;

namespace {

void BM_Hp1Numeric(benchmark::State& state) {
  const ChainParams p{static_cast<int>(state.range(0)), 1.0, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(hp1_coefficients_numeric(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hp1Numeric)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_FiniteSizeCorrection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(finite_size_correction(n, 4.0));
}
BENCHMARK(BM_FiniteSizeCorrection)->Range(1000, 10000000);

}  // namespace
