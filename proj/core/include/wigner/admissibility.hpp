#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wigner/quadrature.hpp"
#include "wigner/quartic.hpp"

namespace wigner {

/// Integration window for an equilibrium: q in [-q_half, q_half], p in
/// [-p_half(q), p_half(q)].
struct PhaseWindow {
  double q_half;
  std::function<double(double)> p_half;
};

/// Window where the equilibrium is numerically supported: the exact support
/// for mu = +1, or expanded until |F| drops below `tail_tol` for mu = -1.
/// The p half-width is 8 Gaussian widths, 8 / sqrt(|C(q)|).
PhaseWindow integration_window(const QuarticEquilibrium& eq, double tail_tol = 1e-14);

/// Gaussian-width-based p half-width at position q.
double p_half_width(const QuarticEquilibrium& eq, double q);

/// Uncertainty-principle bound on the squared-integral, 1 / (2 pi sqrt(6 gamma)).
double purity_bound(double gamma);

/// Settings for the necessary-condition checks.
struct AdmissibilitySpec {
  QuadratureSpec quad{1e-8, 1e-8, 400000};
  int density_grid = 401;     ///< q samples for the spatial-density minimum
  int marginal_grid = 201;    ///< p samples for the velocity-marginal minimum
  double norm_tol = 0.02;     ///< |norm - 1| accepted as "normalized"
  double nonneg_tol = 1e-9;   ///< relative round-off floor for marginal minima
};

/// Results of the four necessary Wigner-function conditions in rescaled form.
struct AdmissibilityReport {
  double norm = 0.0;                  ///< integral of F over phase space
  double min_spatial_density = 0.0;   ///< min over q of integral of F dp
  double min_velocity_marginal = 0.0; ///< min over p of integral of F dq
  double purity = 0.0;                ///< integral of F^2
  double purity_bound = 0.0;          ///< 1 / (2 pi sqrt(6 gamma))
  struct Flags {
    bool normalized = false;
    bool spatial_density_nonneg = false;
    bool velocity_marginal_nonneg = false;
    bool purity_within_bound = false;
    bool operator==(const Flags&) const = default;
  } flags;

  bool pass() const {
    return flags.normalized && flags.spatial_density_nonneg &&
           flags.velocity_marginal_nonneg && flags.purity_within_bound;
  }
  bool operator==(const AdmissibilityReport&) const = default;
};

AdmissibilityReport check_admissibility(const QuarticEquilibrium& eq,
                                        const AdmissibilitySpec& spec = {});

/// Rescales (a0, b0) by 1/norm so that the phase-space integral is one; the
/// b0/a0 ratio is preserved. Throws ValidationError on zero or negative norm.
QuarticEquilibrium normalize(const QuarticEquilibrium& eq, const AdmissibilitySpec& spec = {});

/// Counts strict local maxima of p -> F(q, p) on a uniform grid over the
/// Gaussian window, merging plateaus flat to within 1e-12 of the profile scale.
int count_humps(const QuarticEquilibrium& eq, double q, int grid_points = 2001);

/// Bisection for the switch point of a boolean predicate over the quantum
/// strength. The predicate must differ at the bracket ends.
double critical_gamma(const std::function<bool(double)>& predicate, double gamma_lo,
                      double gamma_hi, double tol = 1e-4);

/// The paper's reference family: mu = -1, c0 = 1, b0 = -2.5 a0, with a0 of
/// the requested sign (+1 or -1).
QuarticEquilibrium reference_family(double gamma, int a0_sign);

/// Ready-made scan predicates on the reference family. All three probe the
/// q = 0 slice, where the family's analytic conditions are stated.
enum class ScanPredicate {
  kTwoHumpOnset,      ///< velocity profile at q = 0 develops two maxima (a0 > 0)
  kNegativityOnset,   ///< velocity profile at q = 0 develops negative values (a0 > 0)
  kDensityNegative,   ///< n(0) turns negative (branch picked by a0_sign)
};

double critical_gamma(ScanPredicate predicate, int a0_sign, double gamma_lo, double gamma_hi,
                      double tol = 1e-4);

}  // namespace wigner
