#include "wigner/quartic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wigner/fd.hpp"

namespace wigner {

namespace {

// Radicand shared by all three coefficient formulas.
double radicand(double q, int mu, double gamma, double c0) {
  return c0 - 2.0 * mu * gamma * (q * q);
}

// Exponent of the factor common to A(q) and B(q). Solving the coefficient
// system with the integrable (negative) root of the C equation fixes the
// sign of the q-dependence; the additive constant is chosen so the q = 0
// values take the standard A0, B0 parameterization, which keeps every
// origin-based admissibility condition in its usual form.
double shared_exp_arg(double q, int mu, double gamma, double c0, double rad) {
  const double q2 = q * q;
  const double num = 2.0 * c0 * c0 - 2.0 * mu * gamma * c0 * (18.0 + q2) +
                     gamma * gamma * q2 * (36.0 - q2);
  const double num0 = 2.0 * c0 * c0 - 36.0 * mu * gamma * c0;
  const double scale = 72.0 * mu * gamma * gamma;
  return (2.0 * num0 / std::sqrt(c0) - num / std::sqrt(rad)) / scale;
}

// A sum of sign_i * exp(expo_i) kept in log form until the final reduction,
// so inner growth cancelled by exp(C H) never overflows prematurely.
struct ScaledTerms {
  double expo[8];
  double sign[8];
  int n = 0;

  void add(double coefficient, double log_part) {
    if (coefficient == 0.0) return;
    expo[n] = log_part + std::log(std::abs(coefficient));
    sign[n] = coefficient > 0.0 ? 1.0 : -1.0;
    ++n;
  }

  double peak() const {
    double m = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) m = std::max(m, expo[i]);
    return m;
  }

  // mantissa relative to a common peak exponent
  double mantissa(double peak_expo) const {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += sign[i] * std::exp(expo[i] - peak_expo);
    return s;
  }

  double value(const char* what) const {
    if (n == 0) return 0.0;
    const double m = peak();
    if (m < -745.0) return 0.0;
    if (m > kMaxExpArg) throw OverflowError(what);
    return mantissa(m) * std::exp(m);
  }
};

struct CoeffDecomp {
  ScaledTerms a;  // A(q)
  ScaledTerms b;  // B(q)
  double c;       // C(q)
};

CoeffDecomp decompose(double q, const QuarticEquilibrium& eq) {
  const auto& [a0, b0, c0] = eq.consts();
  const int mu = eq.params().mu;
  const double gamma = eq.params().gamma;
  const double rad = radicand(q, mu, gamma, c0);
  if (!(rad > 0.0)) throw DomainError("coefficient radicand is non-positive");
  const double shared = shared_exp_arg(q, mu, gamma, c0, rad);
  const double log_rad = std::log(rad);
  const double g2 = gamma * gamma;

  CoeffDecomp d;
  d.c = -1.0 / std::sqrt(rad);
  d.a.add(a0, shared - 2.25 * log_rad);
  // B = exp(shared) * [ (b0 + 3 a0/c0) rad^{-3/4} - (3 a0/2) rad^{-7/4}
  //       + a0 (mu c0^2/(96 g^2) - c0/(4 g)) rad^{-9/4}
  //       + a0 (3/(4 g) - mu c0/(16 g^2)) rad^{-5/4}
  //       - a0 mu/(32 g^2) rad^{-1/4} ]
  // (variation of constants along the coefficient system; the rad^{-3/4}
  // coefficient makes B(0) the standard b0 + a0 (...) combination).
  d.b.add(b0 + 3.0 * a0 / c0, shared - 0.75 * log_rad);
  d.b.add(-1.5 * a0, shared - 1.75 * log_rad);
  d.b.add(a0 * (mu * c0 * c0 / (96.0 * g2) - c0 / (4.0 * gamma)), shared - 2.25 * log_rad);
  d.b.add(a0 * (3.0 / (4.0 * gamma) - mu * c0 / (16.0 * g2)), shared - 1.25 * log_rad);
  d.b.add(-a0 * mu / (32.0 * g2), shared - 0.25 * log_rad);
  return d;
}

// (A H + B) exp(c H + shift) with the exponent cancellation done in log
// space; shift = 0 gives the plain Wigner value.
double combine(const CoeffDecomp& d, double h_energy, double shift, const char* what) {
  ScaledTerms total;
  if (h_energy != 0.0) {
    const double log_h = std::log(std::abs(h_energy));
    const double sign_h = h_energy > 0.0 ? 1.0 : -1.0;
    for (int i = 0; i < d.a.n; ++i) total.add(d.a.sign[i] * sign_h, d.a.expo[i] + log_h);
  }
  for (int i = 0; i < d.b.n; ++i) total.add(d.b.sign[i], d.b.expo[i]);
  if (total.n == 0) return 0.0;
  const double m = total.peak() + d.c * h_energy + shift;
  if (m < -745.0) return 0.0;
  if (m > kMaxExpArg) throw OverflowError(what);
  return total.mantissa(total.peak()) * std::exp(m);
}

}  // namespace

QuarticEquilibrium::QuarticEquilibrium(QuarticParams params, AnsatzConstants consts)
    : params_(params), consts_(consts) {
  if (consts_.c0 == 0.0) throw ValidationError("c0 must be nonzero");
  // a0 = b0 = 0 makes B(q) vanish identically, the one parameter class the
  // coefficient system admits no solution for.
  if (consts_.a0 == 0.0 && consts_.b0 == 0.0)
    throw ValidationError("a0 = b0 = 0 makes B identically zero; no such equilibrium");
  if (!(consts_.c0 > 0.0))
    throw ValidationError(params_.mu == -1
                              ? "mu = -1 requires c0 > 0 for a bounded solution"
                              : "mu = +1 requires c0 > 0 for a nonempty support");
  if (params_.mu == 1) {
    q_max_ = std::sqrt(consts_.c0 / (2.0 * params_.gamma));
    // A and B grow like exp(+c/sqrt(rad)) toward the support edge when
    // c0 < 24 gamma and are damped the same way when c0 > 24 gamma; the
    // exponential cancels against exp(C H) at p = 0 either way, leaving a
    // rad^{-3/4} ridge in F itself.
    boundary_singular_ = consts_.c0 < 24.0 * params_.gamma;
  }
}

QuarticEquilibrium QuarticEquilibrium::scaled(double s) const {
  if (s == 0.0 || !std::isfinite(s)) throw ValidationError("scale must be finite and nonzero");
  return QuarticEquilibrium(params_, {consts_.a0 * s, consts_.b0 * s, consts_.c0});
}

double coeff_C(double q, const QuarticEquilibrium& eq) {
  const double rad = radicand(q, eq.params().mu, eq.params().gamma, eq.consts().c0);
  if (!(rad > 0.0)) throw DomainError("coefficient radicand is non-positive");
  return -1.0 / std::sqrt(rad);
}

double coeff_A(double q, const QuarticEquilibrium& eq) {
  if (eq.consts().a0 == 0.0) return 0.0;
  if (!eq.in_support(q)) return 0.0;
  return decompose(q, eq).a.value("A(q) overflow near the support boundary");
}

double coeff_B(double q, const QuarticEquilibrium& eq) {
  if (!eq.in_support(q)) return 0.0;
  return decompose(q, eq).b.value("B(q) overflow near the support boundary");
}

double eval_wigner(PhasePoint pt, const QuarticEquilibrium& eq) {
  if (!eq.in_support(pt.q)) return 0.0;
  const CoeffDecomp d = decompose(pt.q, eq);
  const double h = energy(pt, eq.params());
  return combine(d, h, 0.0, "Wigner exponent out of range");
}

double density_closed(double q, const QuarticEquilibrium& eq) {
  if (!eq.in_support(q)) return 0.0;
  const CoeffDecomp d = decompose(q, eq);
  const int mu = eq.params().mu;
  const double abs_c = -d.c;
  const double q2 = q * q;
  const double w = mu * (q2 - q2 * q2 / 12.0);  // = 2 * potential term of H
  // n = sqrt(pi/(2|C|)) exp(-|C| w / 2) (A/|C| + A w + 2B), reduced in log
  // space like eval_wigner so the Gaussian exponent can cancel coefficient
  // growth near a singular support edge.
  ScaledTerms total;
  const double a_factor = 1.0 / abs_c + w;
  if (a_factor != 0.0) {
    const double log_f = std::log(std::abs(a_factor));
    const double sign_f = a_factor > 0.0 ? 1.0 : -1.0;
    for (int i = 0; i < d.a.n; ++i) total.add(d.a.sign[i] * sign_f, d.a.expo[i] + log_f);
  }
  for (int i = 0; i < d.b.n; ++i) total.add(d.b.sign[i] * 2.0, d.b.expo[i]);
  if (total.n == 0) return 0.0;
  const double m = total.peak() - 0.5 * abs_c * w;
  if (m < -745.0) return 0.0;
  if (m > kMaxExpArg) throw OverflowError("density exponent out of range");
  return std::sqrt(std::numbers::pi / (2.0 * abs_c)) * total.mantissa(total.peak()) *
         std::exp(m);
}

bool origin_positivity(const QuarticEquilibrium& eq) {
  const auto& [a0, b0, c0] = eq.consts();
  if (eq.params().mu != -1 || !(a0 <= 0.0) || !(b0 > 0.0))
    throw ValidationError(
        "origin positivity condition is stated only for mu = -1, a0 <= 0, b0 > 0");
  const double gamma = eq.params().gamma;
  const double lhs = 12.0 * b0 * std::pow(c0, 1.5) * gamma * gamma;
  const double rhs =
      std::abs(a0) * (c0 * c0 + 6.0 * gamma * c0 + 24.0 * gamma * gamma * std::sqrt(c0));
  return lhs >= rhs;
}

double OdeResidual::max_abs() const {
  return std::max({std::abs(linear_in_h), std::abs(constant_in_h), std::abs(quadratic_in_h)});
}

OdeResidual ode_residual(double q, const QuarticEquilibrium& eq, double fd_step) {
  const double h = fd_step * std::max(1.0, std::abs(q));
  if (auto qm = eq.q_max(); qm && std::abs(q) + h >= *qm)
    throw DomainError("finite-difference stencil crosses the support boundary");

  const double a_prime = deriv_richardson([&](double x) { return coeff_A(x, eq); }, q, h);
  const double b_prime = deriv_richardson([&](double x) { return coeff_B(x, eq); }, q, h);
  const double c_prime = deriv_richardson([&](double x) { return coeff_C(x, eq); }, q, h);

  const double a = coeff_A(q, eq);
  const double b = coeff_B(q, eq);
  const double c = coeff_C(q, eq);
  const int mu = eq.params().mu;
  const double gamma = eq.params().gamma;
  const double q2 = q * q;
  const double w = q2 - q2 * q2 / 12.0;
  const double c2 = c * c, c3 = c2 * c;
  const double g = mu * gamma * q;

  const double rhs_linear = g * (9.0 * a * c2 + 2.0 * b * c3 - mu * a * c3 * w);
  const double rhs_const = g * (6.0 * a * c + 3.0 * b * c2 - mu * (3.0 * a * c2 + b * c3) * w);
  const double rhs_quad = 2.0 * g * c3 * a;

  return {a_prime + b * c_prime - rhs_linear, b_prime - rhs_const, a * c_prime - rhs_quad};
}

}  // namespace wigner
