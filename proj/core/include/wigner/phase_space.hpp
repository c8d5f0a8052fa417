#pragma once

#include "wigner/errors.hpp"

namespace wigner {

/// Largest admissible argument to exp() in ansatz evaluations. Larger values
/// raise OverflowError instead of saturating to infinity.
inline constexpr double kMaxExpArg = 700.0;

/// Rescaled quartic-well parameters: well orientation and the dimensionless
/// quantum strength.
struct QuarticParams {
  int mu;        ///< +1 single well, -1 double well
  double gamma;  ///< dimensionless quantum strength, > 0

  QuarticParams(int mu_, double gamma_);
};

/// Dimensional constants of the underlying oscillator. Exists only to derive
/// the dimensionless quantum strength and document the rescaling
/// q = k x, p = k v / omega, F = omega f / k^2; there is no dimensional
/// evaluation path.
struct PhysicalUnits {
  double m;      ///< particle mass
  double hbar;   ///< reduced Planck constant
  double omega;  ///< angular frequency of the harmonic part
  double k;      ///< anharmonicity wavenumber

  PhysicalUnits(double m_, double hbar_, double omega_, double k_);

  /// hbar^2 k^4 / (6 m^2 omega^2)
  double gamma() const;
};

/// Throws ValidationError unless params.gamma matches the value derived from
/// units to 1e-12 relative.
void check_consistent(const PhysicalUnits& units, const QuarticParams& params);

/// A point of the rescaled phase plane.
struct PhasePoint {
  double q = 0.0;
  double p = 0.0;
};

/// The three ansatz coefficients at one position: F = (a H + b) exp(c H).
struct AnsatzValue {
  double a;
  double b;
  double c;  ///< must be < 0 for p-integrability

  AnsatzValue(double a_, double b_, double c_);
};

/// Rescaled energy H = p^2/2 + mu (q^2/2 - q^4/24). Even in q and in p
/// exactly (all powers are computed from q*q and p*p).
double energy(PhasePoint pt, const QuarticParams& params);

/// (a H + b) exp(c H). Throws OverflowError when c*H exceeds kMaxExpArg.
double ansatz_eval(double h_energy, const AnsatzValue& v);

/// Exact analytic d^k/dH^k of (a H + b) exp(c H) for k in {1, 2, 3}.
double ansatz_dH(double h_energy, const AnsatzValue& v, int order);

}  // namespace wigner
