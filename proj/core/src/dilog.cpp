#include "wigner/dilog.hpp"

#include <cmath>
#include <numbers>

#include "wigner/errors.hpp"

namespace wigner {

namespace {

constexpr double kPi2Over6 = std::numbers::pi * std::numbers::pi / 6.0;

// Power series on |z| <= 1/2, where it converges geometrically.
double dilog_series(double z) {
  double term = z;
  double sum = z;
  for (int k = 2; k < 200; ++k) {
    term *= z;
    const double add = term / (k * static_cast<double>(k));
    sum += add;
    if (std::abs(add) < 1e-17 * std::abs(sum) + 1e-300) break;
  }
  return sum;
}

}  // namespace

double dilog(double z) {
  if (!(z <= 1.0)) throw DomainError("dilog is real only for z <= 1");
  if (z == 1.0) return kPi2Over6;
  if (z == 0.0) return 0.0;
  if (z < -1.0) {
    // Inversion: Li2(z) + Li2(1/z) = -pi^2/6 - ln^2(-z)/2
    const double l = std::log(-z);
    return -kPi2Over6 - 0.5 * l * l - dilog(1.0 / z);
  }
  if (z < 0.0) {
    // Landen: Li2(z) + Li2(z/(z-1)) = -ln^2(1-z)/2, with z/(z-1) in (0, 1/2]
    const double l = std::log1p(-z);
    return -0.5 * l * l - dilog_series(z / (z - 1.0));
  }
  if (z <= 0.5) return dilog_series(z);
  // Reflection: Li2(z) + Li2(1-z) = pi^2/6 - ln(z) ln(1-z)
  return kPi2Over6 - std::log(z) * std::log1p(-z) - dilog_series(1.0 - z);
}

}  // namespace wigner
