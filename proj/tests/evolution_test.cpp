#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wigner/evolution.hpp"
#include "wigner/presets.hpp"

using namespace wigner;

namespace {

EvolutionGrid box(double lq, double lp, int n, double dt, double t_final) {
  EvolutionGrid g;
  g.half_width_q = lq;
  g.half_width_p = lp;
  g.nq = n;
  g.np = n;
  g.dt = dt;
  g.t_final = t_final;
  return g;
}

}  // namespace

TEST_CASE("grid validation") {
  const auto eq = find_preset("figure-4-gamma-0.2")->equilibrium();
  auto grid = auto_evolution_grid(eq, 1.0, 128, 128);
  const Field2D f0 = sample(eq, grid);

  SUBCASE("grid sizes must be powers of two, at least 64") {
    auto bad = grid;
    bad.nq = 100;
    CHECK_THROWS_AS(evolve(f0, bad, eq.params()), ValidationError);
    bad = grid;
    bad.np = 32;
    CHECK_THROWS_AS(sample(eq, bad), ValidationError);
  }
  SUBCASE("dt must respect the advective stability bound") {
    auto bad = grid;
    bad.dt = 10.0 * stability_bound(grid, eq.params());
    CHECK_THROWS_AS(evolve(f0, bad, eq.params()), ValidationError);
  }
  SUBCASE("dt must divide t_final") {
    auto bad = grid;
    bad.t_final = grid.dt * 10.5;
    CHECK_THROWS_AS(evolve(f0, bad, eq.params()), ValidationError);
  }
  SUBCASE("initial data must be decayed at the box edge") {
    auto tight = box(3.0, 4.0, 128, 1e-4, 1e-3);
    const Field2D bad0 = sample(eq, tight);
    CHECK_THROWS_AS(evolve(bad0, tight, eq.params()), ValidationError);
  }
  SUBCASE("stationarity check rejects truncated-support equilibria") {
    const auto plus = find_preset("figure-2")->equilibrium();
    CHECK_THROWS_AS(stationarity_deviation(plus, grid), ValidationError);
  }
}

TEST_CASE("harmonic limit: an offset gaussian rotates back onto itself") {
  const double period = 2.0 * std::numbers::pi;
  auto grid = box(8.0, 8.0, 128, period / 8192.0, period);
  const Field2D f0 = sample(
      [](double q, double p) {
        const double dq = q - 1.5;
        return std::exp(-(dq * dq + p * p));
      },
      grid);
  EvolveOptions opts;
  opts.harmonic_only = true;
  const Field2D f_t = evolve(f0, grid, QuarticParams{+1, 1.0}, opts);
  CHECK(relative_l2_diff(f_t, f0) <= 1e-6);
}

TEST_CASE("mass is conserved to round-off each step") {
  const auto eq = find_preset("figure-4-gamma-0.2")->equilibrium();
  auto grid = auto_evolution_grid(eq, 0.2, 128, 128);
  double drift = 0.0;
  EvolveOptions opts;
  opts.max_mass_drift = &drift;
  const Field2D f0 = sample(eq, grid);
  evolve(f0, grid, eq.params(), opts);
  CHECK(drift <= 1e-10);
}

TEST_CASE("joint parity is preserved to round-off") {
  const auto eq = find_preset("figure-6-gamma-0.5")->equilibrium();
  auto grid = auto_evolution_grid(eq, 0.1, 128, 128);
  const Field2D f0 = sample(eq, grid);
  const Field2D f_t = evolve(f0, grid, eq.params());
  // grid point (iq, ip) maps to (-q, -p) at ((nq - iq) % nq, (np - ip) % np)
  double worst = 0.0, scale = 0.0;
  for (int iq = 0; iq < grid.nq; ++iq) {
    for (int ip = 0; ip < grid.np; ++ip) {
      const int jq = (grid.nq - iq) % grid.nq;
      const int jp = (grid.np - ip) % grid.np;
      worst = std::max(worst, std::abs(f_t.at(iq, ip) - f_t.at(jq, jp)));
      scale = std::max(scale, std::abs(f_t.at(iq, ip)));
    }
  }
  // transform round-off accumulates coherently, a few 1e-13 of the field
  // scale per step
  const double steps = grid.t_final / grid.dt;
  CHECK(worst <= steps * 5e-13 * scale);
}

TEST_CASE("stationarity: equilibrium stays put, off-manifold data does not") {
  const auto eq = find_preset("figure-4-gamma-0.2")->equilibrium();
  auto grid = auto_evolution_grid(eq, 1.0, 128, 128);

  SUBCASE("T = 0 is exactly zero deviation") {
    auto instant = grid;
    instant.t_final = 0.0;
    CHECK(stationarity_deviation(eq, instant) == 0.0);
  }
  SUBCASE("equilibrium deviation stays at the splitting floor") {
    CHECK(stationarity_deviation(eq, grid) <= 1e-5);
  }
  SUBCASE("scaling the B coefficient function leaves the manifold") {
    const Field2D f0 = sample(
        [&](double q, double p) {
          if (!eq.in_support(q)) return 0.0;
          const double h = energy({q, p}, eq.params());
          return (coeff_A(q, eq) * h + 1.1 * coeff_B(q, eq)) *
                 std::exp(coeff_C(q, eq) * h);
        },
        grid);
    const Field2D f_t = evolve(f0, grid, eq.params());
    CHECK(relative_l2_diff(f_t, f0) >= 1e-3);
  }
}

TEST_CASE("spectral accuracy: doubling the grid sharpens stationarity") {
  const auto eq = find_preset("figure-5")->equilibrium();
  // small dt so the splitting error floor sits far below the spatial error
  auto coarse = auto_evolution_grid(eq, 0.5, 64, 64, 2e-4);
  coarse.edge_tol = 1e-9;  // the 64-point box cannot reach 1e-12 everywhere
  auto fine = auto_evolution_grid(eq, 0.5, 128, 128, 2e-4);
  fine.edge_tol = 1e-9;
  fine.half_width_q = coarse.half_width_q;
  fine.half_width_p = coarse.half_width_p;
  const double dev_coarse = stationarity_deviation(eq, coarse);
  const double dev_fine = stationarity_deviation(eq, fine);
  CHECK(dev_coarse / dev_fine >= 4.0);
}
