#include "wigner/residual.hpp"

#include <cmath>
#include <vector>

#include "wigner/fd.hpp"
#include "wigner/parallel.hpp"

namespace wigner {

EnergyField energy_field(const QuarticEquilibrium& eq) {
  EnergyField field;
  field.value = [&eq](double h, double q) {
    const double a = coeff_A(q, eq);
    const double b = coeff_B(q, eq);
    const double c = coeff_C(q, eq);
    return ansatz_eval(h, AnsatzValue{a, b, c});
  };
  field.d_energy = [&eq](double h, double q, int order) {
    const double a = coeff_A(q, eq);
    const double b = coeff_B(q, eq);
    const double c = coeff_C(q, eq);
    return ansatz_dH(h, AnsatzValue{a, b, c}, order);
  };
  return field;
}

namespace {

double grid_q_half(const QuarticEquilibrium& eq, const ResidualGrid& grid) {
  if (auto qm = eq.q_max()) return grid.q_margin * *qm;
  return grid.q_half;
}

// Largest offset touched by the Richardson d/dq stencil at position q.
double stencil_reach(double q, const ResidualGrid& grid) {
  return grid.fd_step * std::max(1.0, std::abs(q));
}

template <class PerPoint>
ResidualReport scan(const QuarticEquilibrium& eq, const ResidualGrid& grid, const char* form,
                    PerPoint&& per_point) {
  const double q_half = grid_q_half(eq, grid);
  if (auto qm = eq.q_max(); qm && q_half + stencil_reach(q_half, grid) >= *qm)
    throw DomainError("residual stencil would cross the support boundary");

  ResidualReport report;
  report.form = form;
  report.grid = grid;
  std::vector<ResidualReport> partial(grid.nq);
  parallel_for(static_cast<std::size_t>(grid.nq), [&](std::size_t i) {
    const double q = -q_half + 2.0 * q_half * static_cast<double>(i) / (grid.nq - 1.0);
    const double p_half = grid.p_mult / std::sqrt(-coeff_C(q, eq));
    ResidualReport local;
    for (int j = 0; j < grid.np; ++j) {
      const double p = -p_half + 2.0 * p_half * j / (grid.np - 1.0);
      const double r = std::abs(per_point(q, p));
      if (r > local.max_abs_residual) {
        local.max_abs_residual = r;
        local.location = {q, p};
      }
    }
    partial[i] = local;
  });
  for (const auto& local : partial)
    if (local.max_abs_residual > report.max_abs_residual) {
      report.max_abs_residual = local.max_abs_residual;
      report.location = local.location;
    }
  return report;
}

}  // namespace

ResidualReport residual_qp(const EnergyField& field, const QuarticParams& params,
                           const QuarticEquilibrium& eq, const ResidualGrid& grid) {
  const int mu = params.mu;
  const double gamma = params.gamma;
  auto per_point = [&](double q, double p) {
    const double h = energy({q, p}, params);
    const double fd_h = stencil_reach(q, grid);
    // d/dq at fixed p; the energy moves with q.
    const double f_q = deriv_richardson(
        [&](double x) { return field.value(energy({x, p}, params), x); }, q, fd_h);
    const double f_h = field.d_energy(h, q, 1);
    const double f_hh = field.d_energy(h, q, 2);
    const double f_hhh = field.d_energy(h, q, 3);
    const double force = mu * (q - q * q * q / 6.0);
    const double f_p = p * f_h;
    const double f_ppp = 3.0 * p * f_hh + p * p * p * f_hhh;
    return p * f_q - force * f_p - mu * gamma * q * f_ppp;
  };
  return scan(eq, grid, "qp", per_point);
}

ResidualReport residual_qp(const QuarticEquilibrium& eq, const ResidualGrid& grid) {
  return residual_qp(energy_field(eq), eq.params(), eq, grid);
}

ResidualReport residual_Hq(const EnergyField& field, const QuarticParams& params,
                           const QuarticEquilibrium& eq, const ResidualGrid& grid) {
  const int mu = params.mu;
  const double gamma = params.gamma;
  auto per_point = [&](double q, double p) {
    // (H, q) pairs generated from the p grid are classically reachable.
    const double h = energy({q, p}, params);
    const double fd_h = stencil_reach(q, grid);
    const double f_q = deriv_richardson([&](double x) { return field.value(h, x); }, q, fd_h);
    const double f_hh = field.d_energy(h, q, 2);
    const double f_hhh = field.d_energy(h, q, 3);
    const double q2 = q * q;
    const double kinetic = 2.0 * h - mu * (q2 - q2 * q2 / 12.0);  // = p^2
    return f_q - mu * gamma * q * (kinetic * f_hhh + 3.0 * f_hh);
  };
  return scan(eq, grid, "Hq", per_point);
}

ResidualReport residual_Hq(const QuarticEquilibrium& eq, const ResidualGrid& grid) {
  return residual_Hq(energy_field(eq), eq.params(), eq, grid);
}

std::vector<ResidualSample> residual_samples_qp(const QuarticEquilibrium& eq,
                                                const ResidualGrid& grid) {
  const EnergyField field = energy_field(eq);
  const QuarticParams& params = eq.params();
  const int mu = params.mu;
  const double gamma = params.gamma;
  const double q_half = grid_q_half(eq, grid);
  if (auto qm = eq.q_max(); qm && q_half + stencil_reach(q_half, grid) >= *qm)
    throw DomainError("residual stencil would cross the support boundary");

  std::vector<ResidualSample> samples(static_cast<std::size_t>(grid.nq) * grid.np);
  parallel_for(static_cast<std::size_t>(grid.nq), [&](std::size_t i) {
    const double q = -q_half + 2.0 * q_half * static_cast<double>(i) / (grid.nq - 1.0);
    const double p_half = grid.p_mult / std::sqrt(-coeff_C(q, eq));
    const double fd_h = stencil_reach(q, grid);
    for (int j = 0; j < grid.np; ++j) {
      const double p = -p_half + 2.0 * p_half * j / (grid.np - 1.0);
      const double h = energy({q, p}, params);
      const double f_q = deriv_richardson(
          [&](double x) { return field.value(energy({x, p}, params), x); }, q, fd_h);
      const double f_p = p * field.d_energy(h, q, 1);
      const double f_ppp = 3.0 * p * field.d_energy(h, q, 2) +
                           p * p * p * field.d_energy(h, q, 3);
      const double r = p * f_q - mu * (q - q * q * q / 6.0) * f_p - mu * gamma * q * f_ppp;
      samples[i * grid.np + j] = {q, p, r};
    }
  });
  return samples;
}

}  // namespace wigner
