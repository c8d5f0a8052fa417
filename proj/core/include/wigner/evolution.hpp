#pragma once

#include <functional>
#include <vector>

#include "wigner/quartic.hpp"

namespace wigner {

/// Periodic phase-space grid and stepping parameters for the split-step
/// spectral solver. Grid sizes must be powers of two, at least 64.
struct EvolutionGrid {
  double half_width_q = 6.0;
  double half_width_p = 10.0;
  int nq = 256;
  int np = 256;
  double dt = 1e-3;
  double t_final = 10.0;
  double edge_tol = 1e-12;  ///< required decay of |F| on the box boundary
};

/// Values on the evolution grid, row-major with q as the slow index.
/// q_i = (i - nq/2) * (2 L_q / nq): exactly antisymmetric about the origin,
/// with the +L_q edge as the periodic image.
struct Field2D {
  int nq = 0;
  int np = 0;
  double half_width_q = 0.0;
  double half_width_p = 0.0;
  std::vector<double> data;

  double& at(int iq, int ip) { return data[static_cast<std::size_t>(iq) * np + ip]; }
  double at(int iq, int ip) const { return data[static_cast<std::size_t>(iq) * np + ip]; }
  double dq() const { return 2.0 * half_width_q / nq; }
  double dp() const { return 2.0 * half_width_p / np; }
  double q(int iq) const { return (iq - nq / 2) * dq(); }
  double p(int ip) const { return (ip - np / 2) * dp(); }
};

/// Discrete phase-space integral of the field.
double grid_mass(const Field2D& f);

/// Discrete L2 norm (including the cell measure).
double grid_l2(const Field2D& f);

/// ||a - b||_2 / ||b||_2 on matching grids.
double relative_l2_diff(const Field2D& a, const Field2D& b);

/// Samples an equilibrium on the grid.
Field2D sample(const QuarticEquilibrium& eq, const EvolutionGrid& grid);

/// Samples an arbitrary phase-space function on the grid.
Field2D sample(const std::function<double(double q, double p)>& f, const EvolutionGrid& grid);

/// Advective stability bound 0.5 * min(dq / L_p, dp / max|force|) used to
/// validate dt.
double stability_bound(const EvolutionGrid& grid, const QuarticParams& params,
                       bool harmonic_only = false);

struct EvolveOptions {
  /// Restrict the force to its harmonic part and drop the quantum term;
  /// the classical harmonic flow is exactly periodic and makes a clean
  /// self-test of the transport machinery.
  bool harmonic_only = false;
  /// Track mass drift per step; the largest relative drift is written here.
  double* max_mass_drift = nullptr;
};

/// Evolves f0 to t_final with Strang-split exact sub-flows: the q shear is a
/// Fourier phase in k_q, and the force plus third-derivative term together
/// form a single Fourier phase in k_p. dt must divide t_final and satisfy
/// the stability bound; |f0| must be below edge_tol on the boundary ring.
Field2D evolve(const Field2D& f0, const EvolutionGrid& grid, const QuarticParams& params,
               const EvolveOptions& options = {});

/// ||F(T) - F(0)||_2 / ||F(0)||_2 for an equilibrium sampled on the grid.
/// Restricted to mu = -1: the truncated-support mu = +1 solution has a
/// support-edge kink that a periodic spectral method cannot represent.
double stationarity_deviation(const QuarticEquilibrium& eq, const EvolutionGrid& grid);

/// Builds a grid for the given equilibrium: the box is grown from the
/// defaults until |F| < edge_tol on the boundary, and dt is capped by the
/// stability bound and snapped so it divides t_final exactly.
EvolutionGrid auto_evolution_grid(const QuarticEquilibrium& eq, double t_final, int nq = 256,
                                  int np = 256, double dt_cap = 1e-3, double edge_tol = 1e-12);

}  // namespace wigner
