#include <cmath>

#include <doctest.h>

#include "fracdiff/green.hpp"
#include "fracdiff/mellin.hpp"
#include "fracdiff/mwright.hpp"
#include "fracdiff/stable.hpp"

using namespace fracdiff;

TEST_CASE("strip of analyticity for the library specs") {
  // Symmetric stable, alpha = 0.5: strip (0, min(alpha, 1)).
  auto strip = strip_of_analyticity(
      stable_mb_spec(validate_stable_params(0.5, 0.0)));
  CHECK(strip.first == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(strip.second == doctest::Approx(0.5).epsilon(1e-14));

  // Time-fractional (alpha = 2) spec: strip (0, 1).
  strip = strip_of_analyticity(mwright_mb_spec(0.5));
  CHECK(strip.first == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(strip.second == doctest::Approx(1.0).epsilon(1e-14));

  // Extremal one-sided, alpha = 0.7: strip (0, alpha).
  strip = strip_of_analyticity(
      stable_mb_spec(validate_stable_params(0.7, -0.7)));
  CHECK(strip.first == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(strip.second == doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("contour evaluation recovers closed forms") {
  // Gaussian corner at x = 1: (1/(2 sqrt(pi))) e^{-1/4}.
  const double gauss = std::exp(-0.25) / (2.0 * std::sqrt(M_PI));
  Evaluation e = mellin_barnes_eval(
      stable_mb_spec(validate_stable_params(2.0, 0.0)), 1.0);
  CHECK(std::abs(e.value - gauss) < 1e-9);
  CHECK(e.method == Method::contour);

  // Cauchy corner at x = 1: 1/(2 pi).
  e = mellin_barnes_eval(stable_mb_spec(validate_stable_params(1.0, 0.0)),
                         1.0);
  CHECK(std::abs(e.value - 1.0 / (2.0 * M_PI)) < 1e-9);

  // M-Wright nu = 1/2 at x = 2: (1/sqrt(pi)) e^{-1}.
  e = mellin_barnes_eval(mwright_mb_spec(0.5), 2.0);
  CHECK(std::abs(e.value - std::exp(-1.0) / std::sqrt(M_PI)) < 1e-9);
}

static void check_engine_invariants(const GammaRatioSpec& spec, double x) {
  auto strip = strip_of_analyticity(spec);
  const double width = strip.second - strip.first;
  Evaluation base = mellin_barnes_eval(spec, x);

  // Abscissa independence inside the strip.
  for (double f : {0.35, 0.65}) {
    ContourSpec c;
    c.abscissa = strip.first + f * width;
    Evaluation moved = mellin_barnes_eval(spec, x, c);
    CHECK(std::abs(moved.value - base.value) <
          std::max({base.abs_error_estimate, moved.abs_error_estimate,
                    1e-10}));
  }

  // Doubling node count and truncation height stays within the error
  // estimate.
  ContourSpec dense;
  dense.abscissa = strip.first + 0.5 * width;
  dense.node_count = 1024;
  dense.height = 60.0;
  Evaluation refined = mellin_barnes_eval(spec, x, dense);
  CHECK(std::abs(refined.value - base.value) <
        std::max({base.abs_error_estimate, refined.abs_error_estimate,
                  1e-10}));
}

TEST_CASE("contour-abscissa independence and refinement stability") {
  check_engine_invariants(stable_mb_spec(validate_stable_params(1.5, 0.25)),
                          1.0);
  check_engine_invariants(stable_mb_spec(validate_stable_params(0.8, -0.4)),
                          2.0);
  check_engine_invariants(mwright_mb_spec(0.35), 0.7);
  check_engine_invariants(
      green_mb_spec(validate_diffusion_params(1.5, 0.9, 0.3)), 1.0);
}

TEST_CASE("contour outside the strip is rejected") {
  GammaRatioSpec spec = stable_mb_spec(validate_stable_params(1.5, 0.0));
  ContourSpec c;
  c.abscissa = 5.0;
  CHECK_THROWS_AS(mellin_barnes_eval(spec, 1.0, c), domain_error);
}
