#include <doctest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "wigner/fd.hpp"
#include "wigner/presets.hpp"
#include "wigner/report_io.hpp"
#include "wigner/residual.hpp"

using namespace wigner;

namespace {

// Control fields off the solution manifold.
EnergyField b_scaled_field(const QuarticEquilibrium& eq, double factor) {
  EnergyField f;
  f.value = [&eq, factor](double h, double q) {
    return ansatz_eval(h, {coeff_A(q, eq), factor * coeff_B(q, eq), coeff_C(q, eq)});
  };
  f.d_energy = [&eq, factor](double h, double q, int k) {
    return ansatz_dH(h, {coeff_A(q, eq), factor * coeff_B(q, eq), coeff_C(q, eq)}, k);
  };
  return f;
}

EnergyField mismatched_c0_field(const QuarticEquilibrium& eq, double c0_factor) {
  // B evaluated with a rescaled integration constant while A and C keep the
  // original one
  auto other = std::make_shared<QuarticEquilibrium>(
      eq.params(),
      AnsatzConstants{eq.consts().a0, eq.consts().b0, c0_factor * eq.consts().c0});
  EnergyField f;
  f.value = [&eq, other](double h, double q) {
    return ansatz_eval(h, {coeff_A(q, eq), coeff_B(q, *other), coeff_C(q, eq)});
  };
  f.d_energy = [&eq, other](double h, double q, int k) {
    return ansatz_dH(h, {coeff_A(q, eq), coeff_B(q, *other), coeff_C(q, eq)}, k);
  };
  return f;
}

}  // namespace

TEST_CASE("equilibria satisfy both residual forms to 1e-7") {
  const std::vector<QuarticEquilibrium> sets = {
      find_preset("figure-2")->equilibrium(),
      QuarticEquilibrium({+1, 1.0}, {0.3, 0.42, 16.0}),
      find_preset("figure-4-gamma-0.2")->equilibrium(),
      find_preset("figure-6-gamma-0.5")->equilibrium(),
      find_preset("figure-5")->equilibrium(),
      find_preset("figure-6-gamma-5")->equilibrium(),
  };
  for (const auto& eq : sets) {
    const auto qp = residual_qp(eq);
    const auto hq = residual_Hq(eq);
    CAPTURE(eq.params().mu);
    CAPTURE(eq.params().gamma);
    CHECK(qp.max_abs_residual <= 1e-7);
    CHECK(hq.max_abs_residual <= 1e-7);
    CHECK(qp.form == "qp");
    CHECK(hq.form == "Hq");
  }
}

TEST_CASE("linear-in-energy field with no q dependence is an exact solution") {
  // F = H solves the transport form identically: the free-streaming and
  // force terms cancel and the third energy derivative vanishes.
  EnergyField field;
  field.value = [](double h, double) { return h; };
  field.d_energy = [](double, double, int order) { return order == 1 ? 1.0 : 0.0; };
  const QuarticEquilibrium window({-1, 0.5}, {0.3, 1.0, 1.0});
  const auto report = residual_qp(field, window.params(), window);
  CHECK(report.max_abs_residual <= 1e-9);
}

TEST_CASE("vanishing quantum term: any energy function with constant coefficients") {
  // with gamma -> 0 the right side vanishes and q-independent coefficients
  // make the left side vanish too
  EnergyField field;
  field.value = [](double h, double) { return ansatz_eval(h, {0.4, 1.0, -0.7}); };
  field.d_energy = [](double h, double, int k) { return ansatz_dH(h, {0.4, 1.0, -0.7}, k); };
  const QuarticParams params{-1, 1e-12};
  const QuarticEquilibrium window({-1, 1e-12}, {0.4, 1.0, 1.0});
  const auto report = residual_Hq(field, params, window);
  CHECK(report.max_abs_residual <= 1e-11);
}

TEST_CASE("controls: fields off the solution manifold are caught") {
  const auto eq = find_preset("figure-6-gamma-0.5")->equilibrium();
  const auto scaled = residual_qp(b_scaled_field(eq, 1.1), eq.params(), eq);
  CHECK(scaled.max_abs_residual > 1e-3);
  const auto mismatched = residual_qp(mismatched_c0_field(eq, 1.1), eq.params(), eq);
  CHECK(mismatched.max_abs_residual > 1e-3);
  const auto hq = residual_Hq(mismatched_c0_field(eq, 1.1), eq.params(), eq);
  CHECK(hq.max_abs_residual > 1e-3);
}

TEST_CASE("residual is odd in q for an even equilibrium") {
  const auto eq = find_preset("figure-6-gamma-0.5")->equilibrium();
  const auto field = energy_field(eq);
  const int mu = eq.params().mu;
  const double gamma = eq.params().gamma;
  auto qp_residual_at = [&](double q, double p) {
    const double h = energy({q, p}, eq.params());
    const double fd = 1e-3 * std::max(1.0, std::abs(q));
    const double f_q = deriv_richardson(
        [&](double x) { return field.value(energy({x, p}, eq.params()), x); }, q, fd);
    const double f_p = p * field.d_energy(h, q, 1);
    const double f_ppp =
        3.0 * p * field.d_energy(h, q, 2) + p * p * p * field.d_energy(h, q, 3);
    return p * f_q - mu * (q - q * q * q / 6.0) * f_p - mu * gamma * q * f_ppp;
  };
  for (double q : {0.4, 1.1, 2.3}) {
    for (double p : {0.5, 1.7}) {
      const double r = qp_residual_at(q, p);
      const double mirrored = qp_residual_at(-q, p);
      CHECK(std::abs(r + mirrored) <= 1e-9 + 1e-6 * std::abs(r));
    }
  }
}

TEST_CASE("halving the step shows at least fourth-order convergence") {
  // use a step large enough that truncation error dominates round-off
  const auto eq = find_preset("figure-6-gamma-0.5")->equilibrium();
  ResidualGrid coarse;
  coarse.fd_step = 4e-2;
  coarse.nq = 21;
  coarse.np = 21;
  ResidualGrid fine = coarse;
  fine.fd_step = 2e-2;
  const double r_coarse = residual_qp(eq, coarse).max_abs_residual;
  const double r_fine = residual_qp(eq, fine).max_abs_residual;
  CHECK(r_coarse / r_fine >= 12.0);
}

TEST_CASE("grids keep a stencil margin inside bounded support") {
  const auto eq = find_preset("figure-2")->equilibrium();
  ResidualGrid grid;
  grid.q_margin = 0.9999;
  grid.fd_step = 1e-2;
  CHECK_THROWS_AS(residual_qp(eq, grid), DomainError);
}

TEST_CASE("residual grid samples cover the scan and agree with the report") {
  const auto eq = find_preset("figure-6-gamma-0.5")->equilibrium();
  ResidualGrid grid;
  grid.nq = 21;
  grid.np = 21;
  const auto samples = residual_samples_qp(eq, grid);
  REQUIRE(samples.size() == 21u * 21u);
  double worst = 0.0;
  for (const auto& s : samples) worst = std::max(worst, std::abs(s.value));
  const auto report = residual_qp(eq, grid);
  CHECK(worst == doctest::Approx(report.max_abs_residual).epsilon(1e-12));
}

TEST_CASE("residual report JSON round-trip") {
  const auto eq = find_preset("figure-4-gamma-0.2")->equilibrium();
  ResidualGrid grid;
  grid.nq = 11;
  grid.np = 11;
  const auto report = residual_Hq(eq, grid);
  const std::string text = to_json_string(report);
  const auto parsed = residual_report_from_json(text);
  CHECK(parsed.form == report.form);
  CHECK(parsed.max_abs_residual == report.max_abs_residual);
  CHECK(parsed.location.q == report.location.q);
  CHECK(to_json_string(parsed) == text);
}
