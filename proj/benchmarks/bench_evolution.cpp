#include <benchmark/benchmark.h>

#include "wigner/evolution.hpp"
#include "wigner/presets.hpp"

namespace {

using namespace wigner;

void BM_evolve_step_128(benchmark::State& state) {
  const auto eq = find_preset("figure-4-gamma-0.2")->equilibrium();
  EvolutionGrid grid = auto_evolution_grid(eq, 0.0, 128, 128);
  grid.t_final = grid.dt;  // a single step per evolve call
  const Field2D f0 = sample(eq, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(f0, grid, eq.params()));
  }
}
BENCHMARK(BM_evolve_step_128);

void BM_evolve_step_256(benchmark::State& state) {
  const auto eq = find_preset("figure-4-gamma-0.2")->equilibrium();
  EvolutionGrid grid = auto_evolution_grid(eq, 0.0, 256, 256);
  grid.t_final = grid.dt;
  const Field2D f0 = sample(eq, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(f0, grid, eq.params()));
  }
}
BENCHMARK(BM_evolve_step_256);

}  // namespace
