#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "wigner/errors.hpp"

namespace wigner {

/// Tolerances and budget for adaptive quadrature.
struct QuadratureSpec {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  int max_panels = 400000;   ///< subdivision budget before ConvergenceError
  double noise_floor = 0.0;  ///< absolute per-panel floor; set when the
                             ///< integrand itself carries quadrature noise
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  ///< estimated absolute error
  long panels = 0;     ///< subdivisions spent (diagnostic)
};

namespace detail {

/// 15-point Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton
/// iteration on the Legendre recurrence.
struct GaussRule {
  std::vector<double> node;
  std::vector<double> weight;
};
const GaussRule& gauss15();

template <class F>
double gauss_panel(F&& f, double a, double b) {
  const GaussRule& r = gauss15();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < r.node.size(); ++i)
    s += r.weight[i] * f(mid + half * r.node[i]);
  return half * s;
}

}  // namespace detail

/// Adaptive 1-D quadrature: Gauss panels refined by bisection until the
/// whole-vs-halves discrepancy meets the per-length tolerance budget.
template <class F>
QuadratureResult integrate_1d(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  if (!(b > a)) return {0.0, 0.0};
  struct Piece {
    double a, b, whole;
  };
  const double rough = detail::gauss_panel(f, a, b);
  const double length = b - a;
  std::vector<Piece> stack{{a, b, rough}};
  double total = 0.0, err = 0.0;
  int panels = 0;
  while (!stack.empty()) {
    if (++panels > spec.max_panels)
      throw ConvergenceError("adaptive quadrature exceeded subdivision budget");
    const Piece piece = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (piece.a + piece.b);
    const double left = detail::gauss_panel(f, piece.a, mid);
    const double right = detail::gauss_panel(f, mid, piece.b);
    const double refined = left + right;
    const double discrepancy = std::abs(refined - piece.whole);
    // Per-length budget, with two floors: a panel-relative one (a panel
    // resolved to 1e-12 of its own value gains nothing from splitting; an
    // integrable endpoint singularity otherwise cascades at every scale)
    // and the caller's noise floor (splitting below the integrand's own
    // noise level refines noise, not the integral).
    const double budget =
        std::max({((piece.b - piece.a) / length) *
                      std::max(spec.abs_tol, spec.rel_tol * std::abs(rough)),
                  1e-12 * std::abs(refined), spec.noise_floor});
    // Stop descending once the panel is resolved or too narrow to matter.
    if (discrepancy <= budget || (piece.b - piece.a) < 1e-14 * length) {
      total += refined;
      err += discrepancy;
    } else {
      stack.push_back({piece.a, mid, left});
      stack.push_back({mid, piece.b, right});
    }
  }
  return {total, err, panels};
}

/// Adaptive tensor quadrature over q in [q_lo, q_hi], p in
/// [p_lo(q), p_hi(q)]: an adaptive outer integral of adaptive inner
/// integrals. The inner tolerance is budgeted so its accumulated
/// contribution stays below the requested absolute tolerance.
template <class F2, class WLo, class WHi>
QuadratureResult integrate_2d(F2&& f, double q_lo, double q_hi, WLo&& p_lo, WHi&& p_hi,
                              const QuadratureSpec& spec = {}) {
  QuadratureSpec inner_spec = spec;
  inner_spec.abs_tol = spec.abs_tol / (4.0 * std::max(1.0, q_hi - q_lo));
  inner_spec.rel_tol = spec.rel_tol / 4.0;
  double inner_err = 0.0;
  auto marginal = [&](double q) {
    const QuadratureResult r =
        integrate_1d([&](double p) { return f(q, p); }, p_lo(q), p_hi(q), inner_spec);
    inner_err = std::max(inner_err, r.error);
    return r.value;
  };
  QuadratureSpec outer_spec = spec;
  outer_spec.abs_tol = spec.abs_tol / 2.0;
  outer_spec.noise_floor = 5.0 * inner_spec.abs_tol;
  QuadratureResult outer = integrate_1d(marginal, q_lo, q_hi, outer_spec);
  outer.error += inner_err * (q_hi - q_lo);
  return outer;
}

/// Rectangular-window overload.
template <class F2>
QuadratureResult integrate_2d(F2&& f, double q_lo, double q_hi, double p_lo, double p_hi,
                              const QuadratureSpec& spec = {}) {
  return integrate_2d(
      std::forward<F2>(f), q_lo, q_hi, [=](double) { return p_lo; },
      [=](double) { return p_hi; }, spec);
}

}  // namespace wigner
