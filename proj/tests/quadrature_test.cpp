#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wigner/quadrature.hpp"

using namespace wigner;

TEST_CASE("normalized gaussian over the plane") {
  auto f = [](double q, double p) {
    return std::exp(-(q * q + p * p) / 2.0) / (2.0 * std::numbers::pi);
  };
  const auto r = integrate_2d(f, -10.0, 10.0, -10.0, 10.0, {1e-9, 1e-9, 400000});
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(r.error < 1e-7);
}

TEST_CASE("constant zero") {
  const auto r = integrate_2d([](double, double) { return 0.0; }, -3.0, 3.0, -2.0, 2.0);
  CHECK(r.value == 0.0);
}

TEST_CASE("exp(-q^2-p^2) integrates to pi") {
  auto f = [](double q, double p) { return std::exp(-q * q - p * p); };
  const auto r = integrate_2d(f, -9.0, 9.0, -9.0, 9.0, {1e-9, 1e-9, 400000});
  CHECK(r.value == doctest::Approx(std::numbers::pi).epsilon(1e-8));
}

TEST_CASE("1d: oscillatory and endpoint-singular integrands") {
  const auto osc =
      integrate_1d([](double x) { return std::cos(10.0 * x); }, 0.0, 2.0, {1e-12, 1e-12, 400000});
  CHECK(osc.value == doctest::Approx(std::sin(20.0) / 10.0).epsilon(1e-11));

  // integrable endpoint singularity: resolved without a panel explosion
  const auto sing =
      integrate_1d([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {1e-9, 1e-9, 400000});
  CHECK(sing.value == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(sing.panels < 5000);
}

TEST_CASE("q-dependent p-window") {
  // integral of exp(-p^2/2)/sqrt(2 pi) over |p| <= 8 equals 1 for every q;
  // width callback varies with q
  auto f = [](double, double p) {
    return std::exp(-p * p / 2.0) / std::sqrt(2.0 * std::numbers::pi);
  };
  const auto r = integrate_2d(
      f, 0.0, 2.0, [](double q) { return -8.0 - q; }, [](double q) { return 8.0 + q; },
      {1e-9, 1e-9, 400000});
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("subdivision budget is enforced") {
  // a genuinely rough integrand with an impossible budget
  QuadratureSpec spec{1e-300, 1e-300, 40};
  CHECK_THROWS_AS(integrate_1d([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0, spec),
                  ConvergenceError);
}
