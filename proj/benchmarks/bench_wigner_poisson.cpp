#include <benchmark/benchmark.h>

#include "wigner/dilog.hpp"
#include "wigner/wigner_poisson.hpp"

namespace {

using namespace wigner;

void BM_wp_B_quadrature(benchmark::State& state) {
  const WPEquilibrium eq({}, 1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wp_B(3.0, eq));
  }
}
BENCHMARK(BM_wp_B_quadrature);

void BM_wp_B_closed(benchmark::State& state) {
  const WPEquilibrium eq({}, 1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wp_B_closed(3.0, eq));
  }
}
BENCHMARK(BM_wp_B_closed);

void BM_dilog(benchmark::State& state) {
  double z = -0.999;
  for (auto _ : state) {
    z = z > 0.999 ? -0.999 : z + 1e-4;
    benchmark::DoNotOptimize(dilog(z));
  }
}
BENCHMARK(BM_dilog);

}  // namespace
