#include <benchmark/benchmark.h>

#include <cmath>

#include "hilfer/ivp.hpp"
#include "hilfer/mittag_leffler.hpp"
#include "hilfer/operators.hpp"
#include "hilfer/stability.hpp"
#include "hilfer/transforms.hpp"

using namespace hilfer;

namespace {

GridFn quadratic(std::size_t n) {
  return GridFn::sample(Grid(0.3, n), [](double x) { return x * x + 1.0; });
}

void BM_FractionalSum(benchmark::State& state) {
  const GridFn f = quadratic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fractional_sum(f, 0.4));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FractionalSum)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_HilferDifference(benchmark::State& state) {
  const GridFn f = quadratic(static_cast<std::size_t>(state.range(0)));
  const HilferOrder ord(0.7, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(hilfer_difference(f, ord));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HilferDifference)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_SolveLinear(benchmark::State& state) {
  IvpSpec spec;
  spec.steps = static_cast<std::size_t>(state.range(0));
  spec.order = HilferOrder(0.8, 0.5);
  spec.rhs = LinearRhs{0.1};
  for (auto _ : state) benchmark::DoNotOptimize(solve_linear(spec));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveLinear)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_SolveNonlinear(benchmark::State& state) {
  IvpSpec spec;
  spec.a = 0.3;
  spec.steps = static_cast<std::size_t>(state.range(0));
  spec.order = HilferOrder(0.7, 0.5);
  spec.rhs = NonlinearRhs{[](double, double u) { return 0.1 * std::sin(u); }, "sine"};
  for (auto _ : state) benchmark::DoNotOptimize(solve_nonlinear(spec));
}
BENCHMARK(BM_SolveNonlinear)->Arg(256)->Arg(1024);

void BM_MlPlain(benchmark::State& state) {
  const MlParams p{0.7, 0.85, 1.0, 0.15};
  const double z = static_cast<double>(state.range(0)) + p.eta - 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(ml_plain(p, z));
}
BENCHMARK(BM_MlPlain)->Arg(10)->Arg(100)->Arg(1000);

void BM_DeltaLaplace(benchmark::State& state) {
  const double y = static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(delta_laplace([](double x) { return std::exp(0.1 * x); }, 0.0, y));
}
BENCHMARK(BM_DeltaLaplace)->Arg(2)->Arg(8);

void BM_GronwallSeries(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GridFn v = GridFn::sample(Grid(0.0, n), [](double) { return 0.2; });
  for (auto _ : state) benchmark::DoNotOptimize(gronwall_series(1.0, v, GronwallOrder(0.5, 0.75)));
}
BENCHMARK(BM_GronwallSeries)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
