#include "fracdiff/green.hpp"

#include <cmath>

#include "fracdiff/mwright.hpp"

namespace fracdiff {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEps = 1e-12;

}  // namespace

const char* diffusion_case_name(DiffusionCase c) {
  switch (c) {
    case DiffusionCase::normal: return "normal";
    case DiffusionCase::space_fractional: return "space_fractional";
    case DiffusionCase::time_fractional: return "time_fractional";
    case DiffusionCase::neutral: return "neutral";
    case DiffusionCase::wave_range: return "wave_range";
    case DiffusionCase::general: return "general";
  }
  return "unknown";
}

DiffusionOrder validate_diffusion_params(double alpha, double beta,
                                         double theta) {
  validate_stable_params(alpha, theta);  // alpha / theta region
  if (!(beta > 0.0)) {
    throw domain_error("validate_diffusion_params: beta must be > 0");
  }
  if (beta > 1.0 + kEps && !(beta <= alpha + kEps)) {
    throw domain_error(
        "validate_diffusion_params: beta must satisfy 0 < beta <= 1 or "
        "1 < beta <= alpha <= 2");
  }
  DiffusionOrder d;
  d.alpha = alpha;
  d.beta = beta;
  d.theta = theta;
  d.gamma_sim = d.beta / d.alpha;
  const bool beta_one = std::abs(d.beta - 1.0) <= kEps;
  const bool alpha_two = d.alpha == 2.0;
  if (alpha_two && beta_one) {
    d.kind = DiffusionCase::normal;
  } else if (beta_one) {
    d.kind = DiffusionCase::space_fractional;
  } else if (std::abs(d.alpha - d.beta) <= kEps && d.alpha < 2.0) {
    d.kind = DiffusionCase::neutral;
  } else if (alpha_two && d.beta < 2.0 - kEps) {
    d.kind = DiffusionCase::time_fractional;
  } else if (d.beta > 1.0) {
    d.kind = DiffusionCase::wave_range;
  } else {
    d.kind = DiffusionCase::general;
  }
  return d;
}

double neutral_density(double alpha, double theta, double x) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw domain_error("neutral_density: alpha must lie in (0, 2)");
  }
  if (!(std::abs(theta) <= std::min(alpha, 2.0 - alpha) + kEps)) {
    throw domain_error("neutral_density: theta outside region");
  }
  if (!(x > 0.0)) throw domain_error("neutral_density: x must be > 0");
  const double half_angle = kPi / 2.0 * (alpha - theta);
  const double xa = std::pow(x, alpha);
  const double value = std::pow(x, alpha - 1.0) * std::sin(half_angle) /
                       (kPi * (1.0 + 2.0 * xa * std::cos(half_angle) +
                               xa * xa));
  return std::max(value, 0.0);
}

GammaRatioSpec green_mb_spec(const DiffusionOrder& d) {
  const double inv_a = 1.0 / d.alpha;
  const double rho = (d.alpha - d.theta) / (2.0 * d.alpha);
  GammaRatioSpec spec;
  spec.numerator_factors = {{{0.0, 0.0}, inv_a}, {{1.0, 0.0}, -inv_a},
                            {{1.0, 0.0}, -1.0}};
  spec.denominator_factors = {{{1.0, 0.0}, -d.beta * inv_a},
                              {{0.0, 0.0}, rho}, {{1.0, 0.0}, -rho}};
  spec.prefactor_power = -1.0;
  spec.prefactor_scale = inv_a;
  return spec;
}

namespace {

Evaluation reduced_green_positive(const DiffusionOrder& d, double x) {
  switch (d.kind) {
    case DiffusionCase::normal:
    case DiffusionCase::space_fractional: {
      StableParams p = validate_stable_params(d.alpha, d.theta);
      return stable_density(p, x);
    }
    case DiffusionCase::time_fractional:
    case DiffusionCase::wave_range:
      if (d.alpha == 2.0) {
        Evaluation m = mwright(MWrightOrder(d.beta / 2.0), x);
        m.value *= 0.5;
        m.abs_error_estimate *= 0.5;
        return m;
      }
      break;
    case DiffusionCase::neutral:
      return {neutral_density(d.alpha, d.theta, x), 1e-15,
              Method::closed_form};
    case DiffusionCase::general:
      break;
  }
  Evaluation mb = mellin_barnes_eval(green_mb_spec(d), x);
  if (mb.value < 0.0 && mb.value > -mb.abs_error_estimate) mb.value = 0.0;
  return mb;
}

}  // namespace

Evaluation reduced_green(const DiffusionOrder& d, double x) {
  if (x > 0.0) return reduced_green_positive(d, x);
  if (x < 0.0) {
    DiffusionOrder mirror = d;
    mirror.theta = -d.theta;
    return reduced_green_positive(mirror, -x);
  }
  // x = 0.
  if (d.kind == DiffusionCase::normal ||
      d.kind == DiffusionCase::space_fractional) {
    return stable_density(validate_stable_params(d.alpha, d.theta), 0.0);
  }
  if (d.alpha == 2.0) {
    Evaluation m = mwright(MWrightOrder(d.beta / 2.0), 0.0);
    m.value *= 0.5;
    m.abs_error_estimate *= 0.5;
    return m;
  }
  if (d.kind == DiffusionCase::neutral) {
    if (d.alpha > 1.0) return {0.0, 0.0, Method::closed_form};
    if (d.alpha == 1.0) {
      return {std::sin(kPi / 2.0 * (1.0 - d.theta)) / kPi, 1e-16,
              Method::closed_form};
    }
  }
  if (d.alpha < 1.0) {
    // K(x) ~ c x^{alpha - 1} near the origin whenever beta != 1: the
    // density itself diverges (integrably).
    throw domain_error(
        "reduced_green: density diverges at x = 0 for alpha < 1 with "
        "beta != 1");
  }
  // Small-x extrapolation, as for the stable densities.
  const double eps = 1e-6;
  Evaluation a = reduced_green_positive(d, eps);
  Evaluation b = reduced_green_positive(d, 2.0 * eps);
  Evaluation out;
  out.value = 2.0 * a.value - b.value;
  out.abs_error_estimate = 2.0 * a.abs_error_estimate +
                           b.abs_error_estimate +
                           std::abs(a.value - b.value);
  out.method = a.method;
  return out;
}

Evaluation green_function(const DiffusionOrder& d, double x, double t) {
  if (!(t > 0.0)) throw domain_error("green_function: t must be > 0");
  const double scale = std::pow(t, -d.gamma_sim);
  Evaluation out = reduced_green(d, x * scale);
  out.value *= scale;
  out.abs_error_estimate *= scale;
  return out;
}

double green_even_moment(int n, double beta, double t) {
  if (n < 0) throw domain_error("green_even_moment: n must be >= 0");
  if (!(beta > 0.0 && beta < 2.0)) {
    throw domain_error("green_even_moment: beta must lie in (0, 2)");
  }
  if (!(t > 0.0)) throw domain_error("green_even_moment: t must be > 0");
  return std::exp(std::lgamma(2.0 * n + 1.0) -
                  std::lgamma(beta * n + 1.0)) *
         std::pow(t, beta * n);
}

}  // namespace fracdiff
