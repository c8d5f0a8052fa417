#pragma once

#include <vector>

#include "wigner/errors.hpp"
#include "wigner/quadrature.hpp"

namespace wigner {

/// Dimensional constants of the electron gas. Defaults are the natural units
/// used for all reference curves: e = m = hbar = n0 = omega_p = epsilon0 = 1.
struct WPUnits {
  double e = 1.0;         ///< elementary charge
  double m = 1.0;         ///< electron mass
  double hbar = 1.0;      ///< reduced Planck constant
  double n0 = 1.0;        ///< background ion density
  double omega_p = 1.0;   ///< electron plasma frequency
  double epsilon0 = 1.0;  ///< permittivity

  /// Throws ValidationError unless all constants are positive and
  /// omega_p^2 = n0 e^2 / (m epsilon0) to 1e-12 relative.
  void validate() const;
};

/// First-order self-consistent equilibrium of the electrostatic electron
/// gas: f(H, n) = B(n) exp(C(n) H), Gaussian in velocity at every density.
class WPEquilibrium {
 public:
  WPEquilibrium(WPUnits units, double c0, double b0);

  const WPUnits& units() const { return units_; }
  double c0() const { return c0_; }
  double b0() const { return b0_; }

  /// Density cutoff 6 n0 / (hbar^2 omega_p^2 c0^2) where C(n) diverges.
  double n_cut() const { return n_cut_; }

  /// Dimensionless quantum strength hbar^2 omega_p^2 c0^2 / 6
  /// (inverse square of an effective temperature).
  double quantum_strength() const;

 private:
  WPUnits units_;
  double c0_;
  double b0_;
  double n_cut_;
};

/// C(n) = -c0 / sqrt(1 - n/n_cut); strictly negative and decreasing,
/// diverging at the cutoff. Domain: 0 < n < n_cut.
double wp_C(double n, const WPEquilibrium& eq);

/// B(n) from the first-order closure (B -> b0 inside the integral), the
/// log-integrand evaluated by adaptive quadrature with the integrable
/// n' -> 0 endpoint handled by the substitution n' = t^2.
double wp_B(double n, const WPEquilibrium& eq, const QuadratureSpec& spec = {1e-11, 1e-11, 400000});

/// Independent closed form of the same integral in terms of the dilogarithm;
/// cross-check path for wp_B.
double wp_B_closed(double n, const WPEquilibrium& eq);

/// Electrostatic potential as a function of density:
/// phi = -ln(n sqrt(-C m / (2 pi)) / B) / (e C).
double wp_phi(double n, const WPEquilibrium& eq);

/// f(H, n) = B(n) exp(C(n) H). H must include the potential energy,
/// H = m v^2 / 2 - e phi(n).
double wp_eval_f(double h_energy, double n, const WPEquilibrium& eq);

/// Inverts phi = wp_phi(n) on the monotone branch n in
/// [lo_frac, hi_frac] * n_cut. Throws DomainError when phi falls outside
/// that branch's range.
double wp_density_of_phi(double phi, const WPEquilibrium& eq, double lo_frac = 1e-6,
                         double hi_frac = 0.98);

/// Tabulated (n, C, B, phi) columns on a uniform density grid.
struct WPTable {
  std::vector<double> n, coeff_c, coeff_b, phi;
};
WPTable tabulate(const WPEquilibrium& eq, int points = 400, double lo_frac = 1e-4,
                 double hi_frac = 0.98);

/// Boundary data for the spatial potential profile at x = 0.
struct ProfileBoundary {
  double phi0;
  double dphi0;
};

struct ProfilePoint {
  double x, phi, n;
};

/// Integrates the Poisson equation phi'' = (e/eps0)(n(phi) - n0) with
/// classic fourth-order Runge-Kutta on a uniform x grid, inverting the
/// phi(n) map at every stage. Integration stops early when phi exits the
/// invertible density window; `exited`/`exit_x` record that.
struct ProfileResult {
  std::vector<ProfilePoint> points;
  bool exited = false;
  double exit_x = 0.0;
};
ProfileResult wp_phi_profile(double x_max, int steps, const WPEquilibrium& eq,
                             ProfileBoundary boundary, double lo_frac = 1e-6,
                             double hi_frac = 0.98);

}  // namespace wigner
