#include "wigner/phase_space.hpp"

#include <cmath>

namespace wigner {

QuarticParams::QuarticParams(int mu_, double gamma_) : mu(mu_), gamma(gamma_) {
  if (mu != 1 && mu != -1) throw ValidationError("mu must be +1 or -1");
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw ValidationError("gamma must be a positive finite number");
}

PhysicalUnits::PhysicalUnits(double m_, double hbar_, double omega_, double k_)
    : m(m_), hbar(hbar_), omega(omega_), k(k_) {
  if (!(m > 0.0 && hbar > 0.0 && omega > 0.0 && k > 0.0))
    throw ValidationError("physical units must all be strictly positive");
}

double PhysicalUnits::gamma() const {
  const double k2 = k * k;
  return hbar * hbar * k2 * k2 / (6.0 * m * m * omega * omega);
}

void check_consistent(const PhysicalUnits& units, const QuarticParams& params) {
  const double derived = units.gamma();
  if (std::abs(derived - params.gamma) > 1e-12 * std::abs(derived))
    throw ValidationError("gamma inconsistent with physical units");
}

AnsatzValue::AnsatzValue(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  if (!(c < 0.0)) throw ValidationError("ansatz exponent coefficient must be negative");
}

double energy(PhasePoint pt, const QuarticParams& params) {
  const double q2 = pt.q * pt.q;
  const double p2 = pt.p * pt.p;
  return 0.5 * p2 + params.mu * (0.5 * q2 - q2 * q2 / 24.0);
}

namespace {

double guarded_exp(double arg) {
  if (arg > kMaxExpArg) throw OverflowError("ansatz exponent out of range");
  return std::exp(arg);
}

}  // namespace

double ansatz_eval(double h_energy, const AnsatzValue& v) {
  return (v.a * h_energy + v.b) * guarded_exp(v.c * h_energy);
}

double ansatz_dH(double h_energy, const AnsatzValue& v, int order) {
  const double lin = v.c * (v.a * h_energy + v.b);
  const double e = guarded_exp(v.c * h_energy);
  switch (order) {
    case 1:
      return (v.a + lin) * e;
    case 2:
      return v.c * (2.0 * v.a + lin) * e;
    case 3:
      return v.c * v.c * (3.0 * v.a + lin) * e;
    default:
      throw ValidationError("ansatz_dH order must be 1, 2 or 3");
  }
}

}  // namespace wigner
