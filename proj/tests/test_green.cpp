#include <cmath>

#include <doctest.h>

#include "fracdiff/gamma.hpp"
#include "fracdiff/green.hpp"
#include "fracdiff/mwright.hpp"
#include "fracdiff/quadrature.hpp"
#include "tail_helpers.hpp"

using namespace fracdiff;

// Frozen reference values from high-precision contour evaluation.
namespace oracle {
constexpr double k_15_09_03_1 = 0.135986878481215826;
constexpr double k_2_05_0_1 = 0.191667708285341768;  // (1/2) M_{1/4}(1)
}  // namespace oracle

TEST_CASE("parameter validation and case classification") {
  CHECK(validate_diffusion_params(2.0, 1.0, 0.0).kind ==
        DiffusionCase::normal);
  CHECK(validate_diffusion_params(1.5, 1.2, 0.0).kind ==
        DiffusionCase::wave_range);
  CHECK(validate_diffusion_params(1.2, 1.0, 0.0).kind ==
        DiffusionCase::space_fractional);
  CHECK(validate_diffusion_params(2.0, 0.5, 0.0).kind ==
        DiffusionCase::time_fractional);
  CHECK(validate_diffusion_params(1.2, 1.2, 0.3).kind ==
        DiffusionCase::neutral);
  CHECK(validate_diffusion_params(1.5, 0.9, 0.3).kind ==
        DiffusionCase::general);
  CHECK(validate_diffusion_params(1.5, 0.9, 0.0).gamma_sim ==
        doctest::Approx(0.6));
  CHECK_THROWS_AS(validate_diffusion_params(1.2, 1.5, 0.0), domain_error);
  CHECK_THROWS_AS(validate_diffusion_params(2.0, 1.0, 0.5), domain_error);
}

TEST_CASE("neutral closed form") {
  CHECK(neutral_density(1.0, 0.0, 1.0) ==
        doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-14));
  for (double x : {0.3, 1.0, 2.5}) {
    CHECK(neutral_density(1.0, 0.0, x) ==
          doctest::Approx(1.0 / (M_PI * (1.0 + x * x))).epsilon(1e-14));
  }
  // cos(pi/2) = 0 collapses the denominator to 1 + x^(2 alpha).
  CHECK(neutral_density(0.5, -0.5, 1.0) ==
        doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-14));
}

TEST_CASE("dispatch to the specialized paths") {
  // Normal diffusion: Gaussian.
  for (double x : {0.0, 0.5, 2.0}) {
    CHECK(reduced_green(validate_diffusion_params(2.0, 1.0, 0.0), x).value ==
          doctest::Approx(std::exp(-x * x / 4.0) / (2.0 * std::sqrt(M_PI)))
              .epsilon(1e-13));
  }
  // Time-fractional: half an M-Wright function.
  Evaluation e = reduced_green(validate_diffusion_params(2.0, 0.5, 0.0), 1.0);
  CHECK(e.value == doctest::Approx(oracle::k_2_05_0_1).epsilon(1e-12));
  CHECK(e.value ==
        doctest::Approx(0.5 * mwright(MWrightOrder(0.25), 1.0).value)
            .epsilon(1e-13));
}

TEST_CASE("general contour path against the frozen oracle") {
  CHECK(reduced_green(validate_diffusion_params(1.5, 0.9, 0.3), 1.0).value ==
        doctest::Approx(oracle::k_15_09_03_1).epsilon(1e-9));
}

TEST_CASE("case collapse on the overlaps") {
  // General contour evaluation against each specialized path.
  struct Point {
    double alpha, beta, theta, x;
  };
  for (const Point& p : {Point{1.5, 1.0, 0.25, 1.0},   // stable overlap
                         Point{2.0, 0.8, 0.0, 1.5},    // M-Wright overlap
                         Point{1.2, 1.2, 0.3, 0.7}}) { // neutral overlap
    DiffusionOrder d = validate_diffusion_params(p.alpha, p.beta, p.theta);
    Evaluation special = reduced_green(d, p.x);
    Evaluation contour = mellin_barnes_eval(green_mb_spec(d), p.x);
    CHECK(std::abs(special.value - contour.value) < 1e-7);
  }
}

TEST_CASE("symmetry relation through the contour path") {
  DiffusionOrder dp = validate_diffusion_params(1.5, 0.9, 0.3);
  DiffusionOrder dm = validate_diffusion_params(1.5, 0.9, -0.3);
  for (double x : {0.5, 1.0, 2.0}) {
    CHECK(std::abs(reduced_green(dp, -x).value -
                   reduced_green(dm, x).value) < 1e-9);
    // Independent evaluation of both specs.
    CHECK(std::abs(mellin_barnes_eval(green_mb_spec(dp), x).value -
                   reduced_green(dm, -x).value) < 1e-9);
  }
}

TEST_CASE("normalization and nonnegativity on the module grid") {
  for (double alpha : {0.75, 1.25, 1.75}) {
    for (double beta : {0.5, 0.9}) {
      for (double theta : {0.0, 0.25, -0.25}) {
        DiffusionOrder d = validate_diffusion_params(alpha, beta, theta);
        auto density = [&d](double x) {
          const double v = reduced_green(d, x).value;
          CHECK(v >= -1e-10);
          return v;
        };
        const double cut = 15.0;
        double mass =
            fracdiff_tests::two_sided_tail_mass(alpha, beta, theta, cut);
        if (alpha < 1.0) {
          // Integrable c |x|^{alpha-1} singularity at the origin.
          const double delta = 1e-7;
          mass += fracdiff_tests::origin_mass(density, alpha, delta);
          mass += integrate(density, delta, cut, 1e-8).value;
          mass += integrate(density, -cut, -delta, 1e-8).value;
        } else {
          mass += integrate(density, -cut, cut, 1e-8).value;
        }
        CHECK(mass == doctest::Approx(1.0).epsilon(2e-6));
      }
    }
  }
}

TEST_CASE("wave-range nonnegativity") {
  for (double x : {0.1, 0.5, 1.0, 2.0, 4.0}) {
    CHECK(reduced_green(validate_diffusion_params(1.8, 1.5, 0.1), x).value >=
          -1e-10);
    CHECK(reduced_green(validate_diffusion_params(2.0, 1.5, 0.0), x).value >=
          -1e-10);
  }
}

TEST_CASE("time scaling of the full Green function") {
  DiffusionOrder d = validate_diffusion_params(1.5, 0.9, 0.3);
  CHECK(green_function(d, 1.0, 1.0).value ==
        doctest::Approx(reduced_green(d, 1.0).value));
  const double t = 2.5, g = d.gamma_sim;
  CHECK(green_function(d, 1.0, t).value ==
        doctest::Approx(std::pow(t, -g) *
                        reduced_green(d, std::pow(t, -g)).value)
            .epsilon(1e-11));
  // Time-fractional origin value: t^{-1/4} / (2 Gamma(3/4)).
  DiffusionOrder tf = validate_diffusion_params(2.0, 0.5, 0.0);
  CHECK(green_function(tf, 0.0, 3.0).value ==
        doctest::Approx(std::pow(3.0, -0.25) * 0.5 * rgamma(0.75))
            .epsilon(1e-12));
  CHECK_THROWS_AS(green_function(d, 1.0, -1.0), domain_error);
}

TEST_CASE("even moments of time-fractional diffusion") {
  CHECK(green_even_moment(0, 0.5, 3.7) == doctest::Approx(1.0));
  CHECK(green_even_moment(1, 1.0, 2.0) == doctest::Approx(4.0));
  CHECK(green_even_moment(1, 0.5, 1.0) ==
        doctest::Approx(2.0 * rgamma(1.5)).epsilon(1e-13));
  CHECK_THROWS_AS(green_even_moment(-1, 0.5, 1.0), domain_error);

  // Quadrature cross-check of the second moment.
  for (double beta : {0.5, 0.9}) {
    for (double t : {0.5, 2.0}) {
      DiffusionOrder d = validate_diffusion_params(2.0, beta, 0.0);
      QuadResult q = integrate_half_line(
          [&d, t](double x) {
            return 2.0 * x * x * green_function(d, x, t).value;
          },
          1e-9);
      CHECK(q.value == doctest::Approx(green_even_moment(1, beta, t))
                           .epsilon(1e-5));
    }
  }
}
