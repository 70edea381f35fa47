#include <benchmark/benchmark.h>

#include <cmath>

#include "whitham/mollifier.hpp"
#include "whitham/operators.hpp"
#include "whitham/spectral.hpp"

using namespace whitham;

namespace {

Field sample(int n) {
  return Field::from_function(Grid(n), [](double x) { return std::exp(std::sin(x)) + 0.3 * std::cos(5 * x); });
}

void BM_ForwardInverse(benchmark::State& state) {
  const Field f = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inverse_transform(forward_transform(f)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ForwardInverse)->RangeMultiplier(4)->Range(64, 65536)->Complexity(benchmark::oNLogN);

void BM_ApplyK(benchmark::State& state) {
  const Field f = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apply_K(f));
}
BENCHMARK(BM_ApplyK)->RangeMultiplier(4)->Range(64, 65536);

void BM_CachedMultiplier(benchmark::State& state) {
  const Field f = sample(static_cast<int>(state.range(0)));
  const SpectralMultiplier K = whitham_multiplier(f.grid());
  for (auto _ : state) benchmark::DoNotOptimize(K.apply(f));
}
BENCHMARK(BM_CachedMultiplier)->RangeMultiplier(4)->Range(64, 65536);

void BM_Mollify(benchmark::State& state) {
  const Field f = sample(static_cast<int>(state.range(0)));
  mollify(f, 0.125);  // build the table outside the loop
  for (auto _ : state) benchmark::DoNotOptimize(mollify(f, 0.125));
}
BENCHMARK(BM_Mollify)->RangeMultiplier(4)->Range(64, 16384);

}  // namespace
