#include <benchmark/benchmark.h>

#include "wigner/presets.hpp"
#include "wigner/quartic.hpp"

namespace {

using namespace wigner;

void BM_eval_wigner(benchmark::State& state) {
  const auto eq = find_preset("figure-6-gamma-0.5")->equilibrium();
  double q = -3.0;
  for (auto _ : state) {
    q = q > 3.0 ? -3.0 : q + 1e-3;
    benchmark::DoNotOptimize(eval_wigner({q, 0.7}, eq));
  }
}
BENCHMARK(BM_eval_wigner);

void BM_density_closed(benchmark::State& state) {
  const auto eq = find_preset("figure-6-gamma-0.5")->equilibrium();
  double q = -3.0;
  for (auto _ : state) {
    q = q > 3.0 ? -3.0 : q + 1e-3;
    benchmark::DoNotOptimize(density_closed(q, eq));
  }
}
BENCHMARK(BM_density_closed);

void BM_ode_residual(benchmark::State& state) {
  const auto eq = find_preset("figure-6-gamma-0.5")->equilibrium();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ode_residual(1.0, eq));
  }
}
BENCHMARK(BM_ode_residual);

}  // namespace
