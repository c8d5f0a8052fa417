#include "wigner/wigner_poisson.hpp"

#include <cmath>
#include <numbers>

#include "wigner/dilog.hpp"

namespace wigner {

void WPUnits::validate() const {
  if (!(e > 0 && m > 0 && hbar > 0 && n0 > 0 && omega_p > 0 && epsilon0 > 0))
    throw ValidationError("all plasma constants must be strictly positive");
  const double derived = std::sqrt(n0 * e * e / (m * epsilon0));
  if (std::abs(derived - omega_p) > 1e-12 * derived)
    throw ValidationError("omega_p inconsistent with n0 e^2 / (m epsilon0)");
}

WPEquilibrium::WPEquilibrium(WPUnits units, double c0, double b0)
    : units_(units), c0_(c0), b0_(b0) {
  units_.validate();
  if (!(c0_ > 0.0)) throw ValidationError("c0 must be positive for an integrable solution");
  if (!(b0_ > 0.0)) throw ValidationError("b0 must be positive for a nonnegative density");
  const double hw = units_.hbar * units_.omega_p;
  n_cut_ = 6.0 * units_.n0 / (hw * hw * c0_ * c0_);
}

double WPEquilibrium::quantum_strength() const {
  const double hw = units_.hbar * units_.omega_p;
  return hw * hw * c0_ * c0_ / 6.0;
}

namespace {

double cut_fraction(double n, const WPEquilibrium& eq) {
  if (!(n > 0.0)) throw DomainError("density must be positive");
  const double x = n / eq.n_cut();
  if (!(x < 1.0)) throw DomainError("density at or beyond the cutoff");
  return x;
}

// ln of the closure integrand factor: (n'/b0) sqrt(-C(n') m / (2 pi)).
double log_factor(double n_prime, const WPEquilibrium& eq) {
  const double c = wp_C(n_prime, eq);
  return std::log(n_prime / eq.b0()) + 0.5 * std::log(-c * eq.units().m / (2.0 * std::numbers::pi));
}

}  // namespace

double wp_C(double n, const WPEquilibrium& eq) {
  const double x = cut_fraction(n, eq);
  return -eq.c0() / std::sqrt(1.0 - x);
}

double wp_B(double n, const WPEquilibrium& eq, const QuadratureSpec& spec) {
  const double x = cut_fraction(n, eq);
  // integral over n' of C^2 ln(...) with n' = t^2 to absorb the log endpoint
  const double t_max = std::sqrt(n);
  auto integrand = [&](double t) {
    const double np = t * t;
    if (np <= 0.0) return 0.0;
    const double c = wp_C(np, eq);
    return 2.0 * t * c * c * log_factor(np, eq);
  };
  const double integral = integrate_1d(integrand, 0.0, t_max, spec).value;
  const auto& u = eq.units();
  const double hw2 = u.hbar * u.hbar * u.omega_p * u.omega_p;
  const double arg = -hw2 / (12.0 * u.n0) * integral;
  return eq.b0() * std::pow(1.0 - x, -0.75) * std::exp(arg);
}

double wp_B_closed(double n, const WPEquilibrium& eq) {
  const double x = cut_fraction(n, eq);
  const auto& u = eq.units();
  const double one_minus = 1.0 - x;
  const double log_om = std::log(one_minus);
  const double big_k =
      (eq.n_cut() / eq.b0()) * std::sqrt(u.m * eq.c0() / (2.0 * std::numbers::pi));
  // integral = n_cut c0^2 [ -ln K ln(1-x) + Li2(1-x) - pi^2/6 + ln^2(1-x)/8 ]
  const double integral =
      eq.n_cut() * eq.c0() * eq.c0() *
      (-std::log(big_k) * log_om + dilog(one_minus) -
       std::numbers::pi * std::numbers::pi / 6.0 + 0.125 * log_om * log_om);
  const double hw2 = u.hbar * u.hbar * u.omega_p * u.omega_p;
  const double arg = -hw2 / (12.0 * u.n0) * integral;
  return eq.b0() * std::pow(one_minus, -0.75) * std::exp(arg);
}

double wp_phi(double n, const WPEquilibrium& eq) {
  const double c = wp_C(n, eq);
  const double b = wp_B(n, eq);
  const double ratio = n * std::sqrt(-c * eq.units().m / (2.0 * std::numbers::pi)) / b;
  return -std::log(ratio) / (eq.units().e * c);
}

double wp_eval_f(double h_energy, double n, const WPEquilibrium& eq) {
  const double c = wp_C(n, eq);
  const double b = wp_B(n, eq);
  const double arg = c * h_energy;
  if (arg > 700.0) throw OverflowError("wigner-poisson exponent out of range");
  return b * std::exp(arg);
}

double wp_density_of_phi(double phi, const WPEquilibrium& eq, double lo_frac, double hi_frac) {
  const double n_lo = lo_frac * eq.n_cut();
  const double n_hi = hi_frac * eq.n_cut();
  double phi_lo = wp_phi(n_lo, eq);
  double phi_hi = wp_phi(n_hi, eq);
  if (!(phi >= phi_lo && phi <= phi_hi))
    throw DomainError("potential outside the invertible phi(n) branch");
  // Monotone bracket solve: secant candidates accelerate, but every other
  // step forces plain bisection so the bracket provably shrinks.
  double a = n_lo, b = n_hi;
  for (int it = 0; it < 120; ++it) {
    double mid;
    const double denom = phi_hi - phi_lo;
    if (it % 2 == 0 && denom > 0.0) {
      mid = a + (phi - phi_lo) / denom * (b - a);
      const double margin = 0.05 * (b - a);
      if (!(mid > a + margin && mid < b - margin)) mid = 0.5 * (a + b);
    } else {
      mid = 0.5 * (a + b);
    }
    const double val = wp_phi(mid, eq);
    if (std::abs(val - phi) < 1e-13 * std::max(1.0, std::abs(phi)) ||
        b - a < 1e-14 * eq.n_cut())
      return mid;
    if (val < phi) {
      a = mid;
      phi_lo = val;
    } else {
      b = mid;
      phi_hi = val;
    }
  }
  return 0.5 * (a + b);
}

WPTable tabulate(const WPEquilibrium& eq, int points, double lo_frac, double hi_frac) {
  if (points < 2) throw ValidationError("table needs at least two points");
  if (!(lo_frac > 0.0 && hi_frac < 1.0 && lo_frac < hi_frac))
    throw ValidationError("table range must satisfy 0 < lo < hi < 1 (fractions of the cutoff)");
  WPTable table;
  table.n.resize(points);
  table.coeff_c.resize(points);
  table.coeff_b.resize(points);
  table.phi.resize(points);
  const double n_lo = lo_frac * eq.n_cut();
  const double n_hi = hi_frac * eq.n_cut();
  for (int i = 0; i < points; ++i) {
    const double n = n_lo + (n_hi - n_lo) * i / (points - 1.0);
    table.n[i] = n;
    table.coeff_c[i] = wp_C(n, eq);
    table.coeff_b[i] = wp_B(n, eq);
    table.phi[i] = wp_phi(n, eq);
  }
  return table;
}

ProfileResult wp_phi_profile(double x_max, int steps, const WPEquilibrium& eq,
                             ProfileBoundary boundary, double lo_frac, double hi_frac) {
  if (!(x_max > 0.0) || steps < 1) throw ValidationError("bad profile grid");
  const double dx = x_max / steps;
  const auto& u = eq.units();

  auto rhs = [&](double phi) {
    const double n = wp_density_of_phi(phi, eq, lo_frac, hi_frac);
    return u.e / u.epsilon0 * (n - u.n0);
  };

  ProfileResult result;
  double phi = boundary.phi0;
  double slope = boundary.dphi0;
  double x = 0.0;
  try {
    result.points.push_back({x, phi, wp_density_of_phi(phi, eq, lo_frac, hi_frac)});
  } catch (const DomainError&) {
    throw ValidationError("boundary potential outside the invertible density window");
  }
  for (int i = 0; i < steps; ++i) {
    try {
      // RK4 on (phi, phi')
      const double k1p = slope, k1s = rhs(phi);
      const double k2p = slope + 0.5 * dx * k1s, k2s = rhs(phi + 0.5 * dx * k1p);
      const double k3p = slope + 0.5 * dx * k2s, k3s = rhs(phi + 0.5 * dx * k2p);
      const double k4p = slope + dx * k3s, k4s = rhs(phi + dx * k3p);
      phi += dx / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
      slope += dx / 6.0 * (k1s + 2.0 * k2s + 2.0 * k3s + k4s);
      x += dx;
      result.points.push_back({x, phi, wp_density_of_phi(phi, eq, lo_frac, hi_frac)});
    } catch (const DomainError&) {
      result.exited = true;
      result.exit_x = x + dx;
      break;
    }
  }
  return result;
}

}  // namespace wigner
