#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wigner/quartic.hpp"

namespace wigner {

/// A phase-space field expressed through the energy: F(q, p) = value(H, q)
/// with analytic energy derivatives. Lets the residual checks run both on
/// equilibria and on hand-built control fields.
struct EnergyField {
  std::function<double(double h, double q)> value;
  std::function<double(double h, double q, int order)> d_energy;
};

/// EnergyField view of a quartic equilibrium.
EnergyField energy_field(const QuarticEquilibrium& eq);

/// Evaluation grid for the residual scans. The q range is
/// q_margin * q_max for bounded support, else q_half; p ranges follow the
/// per-column Gaussian width times p_mult.
struct ResidualGrid {
  int nq = 101;
  int np = 101;
  double q_margin = 0.9;  ///< fraction of q_max used when support is bounded
  double q_half = 4.0;    ///< half-width for unbounded support
  double p_mult = 8.0;    ///< p half-width in Gaussian widths
  double fd_step = 1e-3;  ///< relative Richardson step for d/dq
};

struct ResidualReport {
  std::string form;  ///< "qp" or "Hq"
  double max_abs_residual = 0.0;
  PhasePoint location;
  ResidualGrid grid;
};

/// Residual of the stationary equation in (q, p) form:
/// p dF/dq - mu (q - q^3/6) dF/dp - mu gamma q d^3F/dp^3,
/// with analytic p-derivatives through the energy and a Richardson
/// finite-difference q-derivative at fixed p.
ResidualReport residual_qp(const EnergyField& field, const QuarticParams& params,
                           const QuarticEquilibrium& eq, const ResidualGrid& grid = {});
ResidualReport residual_qp(const QuarticEquilibrium& eq, const ResidualGrid& grid = {});

/// Residual of the equivalent (H, q) form:
/// dF/dq|_H - mu gamma q ([2H - mu (q^2 - q^4/12)] d^3F/dH^3 + 3 d^2F/dH^2),
/// on classically reachable (H, q) pairs.
ResidualReport residual_Hq(const EnergyField& field, const QuarticParams& params,
                           const QuarticEquilibrium& eq, const ResidualGrid& grid = {});
ResidualReport residual_Hq(const QuarticEquilibrium& eq, const ResidualGrid& grid = {});

/// One grid point of a residual scan.
struct ResidualSample {
  double q, p, value;
};

/// The full transport-form residual grid, row-major in (q, p); feed to
/// write_csv for a (q, p, residual) dump.
std::vector<ResidualSample> residual_samples_qp(const QuarticEquilibrium& eq,
                                                const ResidualGrid& grid = {});

}  // namespace wigner
