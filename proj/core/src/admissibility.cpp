#include "wigner/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace wigner {

double p_half_width(const QuarticEquilibrium& eq, double q) {
  return 8.0 / std::sqrt(-coeff_C(q, eq));
}

double purity_bound(double gamma) {
  return 1.0 / (2.0 * std::numbers::pi * std::sqrt(6.0 * gamma));
}

PhaseWindow integration_window(const QuarticEquilibrium& eq, double tail_tol) {
  // Width zero at and beyond the edge keeps adaptive refinement from
  // evaluating coefficients a round-off step outside the support.
  auto safe_width = [&eq](double q) { return eq.in_support(q) ? p_half_width(eq, q) : 0.0; };
  if (auto qm = eq.q_max()) return {*qm, safe_width};
  // mu = -1: expand until the density envelope falls below the tail
  // tolerance relative to its peak. Decay is faster than exponential, so a
  // multiplicative march converges quickly.
  double peak = 0.0;
  for (int i = 0; i <= 64; ++i) {
    const double q = 6.0 * i / 64.0;
    peak = std::max(peak, std::abs(density_closed(q, eq)));
  }
  double q_half = 6.0;
  for (int it = 0; it < 200; ++it) {
    if (std::abs(density_closed(q_half, eq)) < tail_tol * peak &&
        std::abs(density_closed(0.97 * q_half, eq)) < tail_tol * peak)
      break;
    q_half *= 1.1;
  }
  return {q_half, safe_width};
}

namespace {

// Rejects quadrature results whose accumulated error estimate is out of
// proportion to the tolerance; a non-integrable support edge shows up here
// instead of as a silently wrong number.
double checked(const QuadratureResult& r, const QuadratureSpec& spec, const char* what) {
  if (r.error > std::max(50.0 * spec.abs_tol, 1e-4 * std::abs(r.value)))
    throw ConvergenceError(std::string(what) + " integral did not converge");
  return r.value;
}

}  // namespace

AdmissibilityReport check_admissibility(const QuarticEquilibrium& eq,
                                        const AdmissibilitySpec& spec) {
  AdmissibilityReport report;
  const PhaseWindow win = integration_window(eq);
  auto f = [&](double q, double p) { return eval_wigner({q, p}, eq); };
  auto neg_p = [&](double q) { return -win.p_half(q); };
  auto pos_p = [&](double q) { return win.p_half(q); };

  report.norm = checked(integrate_2d(f, -win.q_half, win.q_half, neg_p, pos_p, spec.quad),
                        spec.quad, "normalization");
  report.purity =
      checked(integrate_2d([&](double q, double p) { return f(q, p) * f(q, p); },
                           -win.q_half, win.q_half, neg_p, pos_p, spec.quad),
              spec.quad, "purity");
  report.purity_bound = purity_bound(eq.params().gamma);

  // Spatial density minimum over a uniform q grid (closed-form marginal).
  double min_density = std::numeric_limits<double>::infinity();
  double max_density = 0.0;
  for (int i = 0; i < spec.density_grid; ++i) {
    const double q = -win.q_half + 2.0 * win.q_half * i / (spec.density_grid - 1.0);
    const double n = eq.in_support(q) ? density_closed(q, eq) : 0.0;
    min_density = std::min(min_density, n);
    max_density = std::max(max_density, std::abs(n));
  }
  report.min_spatial_density = min_density;

  // Velocity marginal minimum over a uniform p grid; each sample is a 1-D
  // quadrature over q.
  double p_max = 0.0;
  for (int i = 0; i <= 32; ++i) {
    const double q = -win.q_half + 2.0 * win.q_half * i / 32.0;
    if (eq.in_support(q)) p_max = std::max(p_max, win.p_half(q));
  }
  QuadratureSpec marg = spec.quad;
  marg.abs_tol = std::max(marg.abs_tol, 1e-10);
  double min_marginal = std::numeric_limits<double>::infinity();
  double max_marginal = 0.0;
  for (int i = 0; i < spec.marginal_grid; ++i) {
    const double p = -p_max + 2.0 * p_max * i / (spec.marginal_grid - 1.0);
    const double g =
        integrate_1d([&](double q) { return f(q, p); }, -win.q_half, win.q_half, marg).value;
    min_marginal = std::min(min_marginal, g);
    max_marginal = std::max(max_marginal, std::abs(g));
  }
  report.min_velocity_marginal = min_marginal;

  report.flags.normalized = std::abs(report.norm - 1.0) <= spec.norm_tol;
  report.flags.spatial_density_nonneg =
      report.min_spatial_density >= -spec.nonneg_tol * std::max(1.0, max_density);
  report.flags.velocity_marginal_nonneg =
      report.min_velocity_marginal >= -spec.nonneg_tol * std::max(1.0, max_marginal);
  report.flags.purity_within_bound = report.purity <= report.purity_bound;
  return report;
}

QuarticEquilibrium normalize(const QuarticEquilibrium& eq, const AdmissibilitySpec& spec) {
  const PhaseWindow win = integration_window(eq);
  const double norm =
      integrate_2d([&](double q, double p) { return eval_wigner({q, p}, eq); }, -win.q_half,
                   win.q_half, [&](double q) { return -win.p_half(q); },
                   [&](double q) { return win.p_half(q); }, spec.quad)
          .value;
  if (norm == 0.0) throw ValidationError("cannot normalize: phase-space integral is zero");
  if (norm < 0.0)
    throw ValidationError("cannot normalize: negative phase-space integral (unphysical sign)");
  return eq.scaled(1.0 / norm);
}

int count_humps(const QuarticEquilibrium& eq, double q, int grid_points) {
  if (!eq.in_support(q)) throw DomainError("hump counting requested outside the support");
  if (grid_points < 5) throw ValidationError("hump grid needs at least 5 points");
  const double half = p_half_width(eq, q);
  std::vector<double> values(grid_points);
  double scale = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double p = -half + 2.0 * half * i / (grid_points - 1.0);
    values[i] = eval_wigner({q, p}, eq);
    scale = std::max(scale, std::abs(values[i]));
  }
  const double flat = 1e-12 * std::max(1.0, scale);

  // Merge plateaus, then count strict interior maxima of the compressed walk.
  std::vector<double> compressed;
  compressed.push_back(values[0]);
  for (int i = 1; i < grid_points; ++i)
    if (std::abs(values[i] - compressed.back()) > flat) compressed.push_back(values[i]);
  int humps = 0;
  for (std::size_t i = 1; i + 1 < compressed.size(); ++i)
    if (compressed[i] > compressed[i - 1] && compressed[i] > compressed[i + 1]) ++humps;
  return humps;
}

double critical_gamma(const std::function<bool(double)>& predicate, double gamma_lo,
                      double gamma_hi, double tol) {
  if (!(gamma_lo > 0.0 && gamma_hi > gamma_lo)) throw ValidationError("bad gamma bracket");
  if (!(tol > 0.0)) throw ValidationError("bisection tolerance must be positive");
  bool lo = predicate(gamma_lo);
  const bool hi = predicate(gamma_hi);
  if (lo == hi)
    throw ValidationError("predicate does not change truth value across the bracket");
  while (gamma_hi - gamma_lo > tol) {
    const double mid = 0.5 * (gamma_lo + gamma_hi);
    if (predicate(mid) == lo)
      gamma_lo = mid;
    else
      gamma_hi = mid;
  }
  return 0.5 * (gamma_lo + gamma_hi);
}

QuarticEquilibrium reference_family(double gamma, int a0_sign) {
  if (a0_sign != 1 && a0_sign != -1) throw ValidationError("a0 sign must be +1 or -1");
  const double a0 = static_cast<double>(a0_sign);
  return QuarticEquilibrium({-1, gamma}, {a0, -2.5 * a0, 1.0});
}

double critical_gamma(ScanPredicate predicate, int a0_sign, double gamma_lo, double gamma_hi,
                      double tol) {
  switch (predicate) {
    case ScanPredicate::kTwoHumpOnset:
      return critical_gamma(
          [&](double g) { return count_humps(reference_family(g, +1), 0.0) >= 2; },
          gamma_lo, gamma_hi, tol);
    case ScanPredicate::kNegativityOnset:
      return critical_gamma(
          [&](double g) {
            const QuarticEquilibrium eq = reference_family(g, +1);
            const double half = p_half_width(eq, 0.0);
            double lo = std::numeric_limits<double>::infinity();
            for (int i = 0; i < 2001; ++i) {
              const double p = -half + 2.0 * half * i / 2000.0;
              lo = std::min(lo, eval_wigner({0.0, p}, eq));
            }
            return lo < 0.0;
          },
          gamma_lo, gamma_hi, tol);
    case ScanPredicate::kDensityNegative:
      // The density boundary of this family lives at the origin (where the
      // analytic inequality is stated); off-origin minima never change sign
      // within the physical brackets.
      return critical_gamma(
          [&](double g) { return density_closed(0.0, reference_family(g, a0_sign)) < 0.0; },
          gamma_lo, gamma_hi, tol);
  }
  throw ValidationError("unknown scan predicate");
}

}  // namespace wigner
