#pragma once

namespace wigner {

/// Plain second-order central difference at step h.
template <class F>
double central_diff(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Fourth-order first derivative: one Richardson extrapolation over central
/// differences at steps h and h/2.
template <class F>
double deriv_richardson(F&& f, double x, double h) {
  const double d1 = central_diff(f, x, h);
  const double d2 = central_diff(f, x, h / 2.0);
  return (4.0 * d2 - d1) / 3.0;
}

/// k-th derivative (k in {1,2,3}) by Richardson-extrapolated central
/// differences. Used by verification paths and tests; the stencil spans
/// [x - 1.5h, x + 1.5h] for k = 3.
template <class F>
double deriv_richardson_k(F&& f, double x, double h, int k) {
  auto central_k = [&](double hh) {
    switch (k) {
      case 1:
        return (f(x + hh) - f(x - hh)) / (2.0 * hh);
      case 2:
        return (f(x + hh) - 2.0 * f(x) + f(x - hh)) / (hh * hh);
      default:  // 3
        return (f(x + 1.5 * hh) - 3.0 * f(x + 0.5 * hh) + 3.0 * f(x - 0.5 * hh) -
                f(x - 1.5 * hh)) /
               (hh * hh * hh);
    }
  };
  const double d1 = central_k(h);
  const double d2 = central_k(h / 2.0);
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace wigner
