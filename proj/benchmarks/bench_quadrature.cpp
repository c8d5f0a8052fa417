#include <benchmark/benchmark.h>

#include "wigner/admissibility.hpp"
#include "wigner/presets.hpp"

namespace {

using namespace wigner;

void BM_norm_integral(benchmark::State& state) {
  const auto eq = find_preset("figure-6-gamma-0.5")->equilibrium();
  const PhaseWindow win = integration_window(eq);
  for (auto _ : state) {
    auto r = integrate_2d([&](double q, double p) { return eval_wigner({q, p}, eq); },
                          -win.q_half, win.q_half, [&](double q) { return -win.p_half(q); },
                          [&](double q) { return win.p_half(q); }, QuadratureSpec{});
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_norm_integral);

void BM_count_humps(benchmark::State& state) {
  const auto eq = find_preset("figure-4-gamma-0.6")->equilibrium();
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_humps(eq, 0.0));
  }
}
BENCHMARK(BM_count_humps);

}  // namespace
