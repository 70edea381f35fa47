#include <benchmark/benchmark.h>

#include "whitham/harness/experiments.hpp"
#include "whitham/picard.hpp"
#include "whitham/symmetrize.hpp"

using namespace whitham;

namespace {

void BM_RhsRegularized(benchmark::State& state) {
  const Grid g(static_cast<int>(state.range(0)));
  const State U = harness::reference_state(g, 0.1);
  const double eps = state.range(1) == 0 ? 0.0 : 0.125;
  for (auto _ : state) benchmark::DoNotOptimize(rhs_regularized(U, U, eps));
}
BENCHMARK(BM_RhsRegularized)->ArgsProduct({{64, 256, 1024}, {0, 1}});

void BM_SolveDirect(benchmark::State& state) {
  const Grid g(static_cast<int>(state.range(0)));
  const State P = to_physical(harness::reference_state(g, 0.1));
  SolveConfig c;
  c.T = 1.0;
  c.dt = 0.01;
  for (auto _ : state) benchmark::DoNotOptimize(solve_direct(P.first, P.second, c));
}
BENCHMARK(BM_SolveDirect)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Picard(benchmark::State& state) {
  const Grid g(64);
  const State U0 = harness::reference_state(g, 0.1);
  SolveConfig c;
  c.T = static_cast<double>(state.range(0));
  c.dt = 0.02;
  c.tol = 1e-11;
  c.max_iter = 60;
  for (auto _ : state) benchmark::DoNotOptimize(picard_iterate(U0, c));
}
BENCHMARK(BM_Picard)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
