#include <cmath>

#include <doctest.h>

#include "fracdiff/evaluation.hpp"
#include "fracdiff/quadrature.hpp"

using namespace fracdiff;

TEST_CASE("finite-interval adaptive quadrature") {
  QuadResult q = integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
  CHECK(q.value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(q.abs_error <= 1e-12);

  q = integrate([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12);
  CHECK(q.value == doctest::Approx(2.0).epsilon(1e-13));

  // A sharp peak forces bisection.
  q = integrate(
      [](double x) { return 1.0 / (1e-4 + (x - 0.37) * (x - 0.37)); },
      0.0, 1.0, 1e-10);
  const double exact =
      (std::atan((1.0 - 0.37) / 1e-2) + std::atan(0.37 / 1e-2)) / 1e-2;
  CHECK(q.value == doctest::Approx(exact).epsilon(1e-11));
}

TEST_CASE("quadrature budget exhaustion raises convergence_error") {
  CHECK_THROWS_AS(integrate([](double x) { return std::sin(1e4 * x); },
                            0.0, 1.0, 1e-15, 64),
                  convergence_error);
}

TEST_CASE("half-line quadrature via exponential substitution") {
  QuadResult q =
      integrate_half_line([](double x) { return std::exp(-x); }, 1e-12);
  CHECK(q.value == doctest::Approx(1.0).epsilon(1e-12));

  // Gamma(3) with both algebraic growth near 0-moment and decay.
  q = integrate_half_line(
      [](double x) { return x * x * std::exp(-x); }, 1e-12);
  CHECK(q.value == doctest::Approx(2.0).epsilon(1e-12));

  // Mildly singular at the origin: integral of x^{-1/2} e^{-x} =
  // Gamma(1/2).
  q = integrate_half_line(
      [](double x) { return std::exp(-x) / std::sqrt(x); }, 1e-10);
  CHECK(q.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));
}

TEST_CASE("real-line quadrature") {
  QuadResult q = integrate_real_line(
      [](double x) { return std::exp(-x * x); }, 1e-12);
  CHECK(q.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));

  q = integrate_real_line(
      [](double x) { return 1.0 / (M_PI * (1.0 + x * x)); }, 1e-8);
  CHECK(q.value == doctest::Approx(1.0).epsilon(1e-6));
}
