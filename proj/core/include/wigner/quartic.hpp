#pragma once

#include <optional>

#include "wigner/phase_space.hpp"

namespace wigner {

/// Integration constants of the closed-form equilibrium coefficients.
struct AnsatzConstants {
  double a0;
  double b0;
  double c0;
};

/// A fully specified stationary solution of the rescaled quartic-well Wigner
/// equation: F(q, p) = [A(q) H + B(q)] exp(C(q) H).
///
/// For mu = +1 the solution lives on |q| <= q_max = sqrt(c0 / (2 gamma)) and
/// is defined as exactly zero outside (no scattering states); for mu = -1 the
/// support is the whole line and requires c0 > 0.
class QuarticEquilibrium {
 public:
  QuarticEquilibrium(QuarticParams params, AnsatzConstants consts);

  const QuarticParams& params() const { return params_; }
  const AnsatzConstants& consts() const { return consts_; }

  /// Support half-width for mu = +1; nullopt for the unbounded mu = -1 case.
  std::optional<double> q_max() const { return q_max_; }

  /// True when q is strictly inside the support. Decided by the sign of the
  /// coefficient radicand so it stays consistent with the formulas at
  /// round-off distance from the edge.
  bool in_support(double q) const {
    return !q_max_ || consts_.c0 - 2.0 * params_.gamma * (q * q) > 0.0;
  }

  /// mu = +1 with c0 < 24 gamma: the coefficient functions A, B diverge at
  /// the support edge (they vanish there for c0 > 24 gamma). The Wigner
  /// function itself grows like (q_max - |q|)^{-3/4} along p = 0 in both
  /// regimes; interior evaluation is always well defined.
  bool boundary_singular() const { return boundary_singular_; }

  /// Returns a copy with (a0, b0) multiplied by s; the exponent constant and
  /// support are unchanged.
  QuarticEquilibrium scaled(double s) const;

 private:
  QuarticParams params_;
  AnsatzConstants consts_;
  std::optional<double> q_max_;
  bool boundary_singular_ = false;
};

/// C(q) = -(c0 - 2 mu gamma q^2)^{-1/2}, strictly negative on the support.
/// Throws DomainError when the radicand is <= 0.
double coeff_C(double q, const QuarticEquilibrium& eq);

/// A(q): amplitude of the energy-linear part. Zero outside the mu = +1
/// support and identically zero when a0 = 0.
double coeff_A(double q, const QuarticEquilibrium& eq);

/// B(q): energy-independent amplitude. Zero outside the mu = +1 support.
double coeff_B(double q, const QuarticEquilibrium& eq);

/// F(q, p) = [A(q) H + B(q)] exp(C(q) H); exactly 0 for |q| >= q_max when the
/// support is bounded. Even in q and in p.
double eval_wigner(PhasePoint pt, const QuarticEquilibrium& eq);

/// Closed-form spatial density n(q) = integral of F over p.
double density_closed(double q, const QuarticEquilibrium& eq);

/// Analytic condition for n(0) >= 0 in the mu = -1, a0 < 0, b0 > 0 class:
/// 12 b0 c0^{3/2} gamma^2 >= |a0| (c0^2 + 6 gamma c0 + 24 gamma^2 sqrt(c0)).
/// Throws ValidationError outside that parameter class.
bool origin_positivity(const QuarticEquilibrium& eq);

/// Residuals of the coefficient ODE system, one per energy power. The
/// derivatives A', B', C' are Richardson finite differences of the closed
/// forms; the third line doubles as a cross-check of the exact
/// C' = 2 mu gamma q C^3.
struct OdeResidual {
  double linear_in_h;   ///< A' + B C' - rhs
  double constant_in_h; ///< B' - rhs
  double quadratic_in_h;///< A C' - rhs
  double max_abs() const;
};

/// Evaluates the ODE residuals at q. The finite-difference step is
/// fd_step * max(1, |q|); the stencil must stay strictly inside the support.
OdeResidual ode_residual(double q, const QuarticEquilibrium& eq, double fd_step = 1e-3);

}  // namespace wigner
