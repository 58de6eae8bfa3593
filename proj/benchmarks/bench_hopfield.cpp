#include <benchmark/benchmark.h>

#include "dising/cavity.hpp"

using namespace dising;

namespace {

const HopfieldInputs kInputs{0.9, 1.1, 0.2};

void BM_HopfieldClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(polariton_energies(kInputs));
}
BENCHMARK(BM_HopfieldClosedForm);

void BM_HopfieldEigensolver(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hopfield_eigenvalues_numeric(hopfield_matrix(kInputs)));
}
BENCHMARK(BM_HopfieldEigensolver);

void BM_CrossingPoint(benchmark::State& state) {
  const CavityParams cav{0.2, 4.0, {2, 1.0, -0.2}, Approximation::HolsteinPrimakoff1};
  for (auto _ : state) benchmark::DoNotOptimize(crossing_point(cav));
}
BENCHMARK(BM_CrossingPoint);

}  // namespace
