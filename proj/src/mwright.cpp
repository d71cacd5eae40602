#include "fracdiff/mwright.hpp"

#include <cmath>

#include "fracdiff/gamma.hpp"
#include "fracdiff/quadrature.hpp"

namespace fracdiff {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSeriesBlowup = 1e6;   // largest term vs. sum bound
constexpr double kAsymptoticFloor = 34.0;  // Y beyond which exp(-Y) ~ eps

}  // namespace

MWrightOrder::MWrightOrder(double nu_) : nu(nu_) {
  if (!(nu > 0.0 && nu < 1.0)) {
    throw domain_error("MWrightOrder: nu must lie in (0, 1)");
  }
}

double mwright_decay_variable(double nu, double r) {
  return (1.0 - nu) * std::pow(std::pow(nu, nu) * r, 1.0 / (1.0 - nu));
}

Evaluation mwright_series(MWrightOrder order, double z, double tol) {
  if (!(z >= 0.0)) throw domain_error("mwright_series: z must be >= 0");
  if (!(tol > 0.0)) throw domain_error("mwright_series: tol must be > 0");
  const double nu = order.nu;
  // term_n = (-z)^n / (n! Gamma(-nu n + 1 - nu)); the reciprocal gamma is
  // evaluated through the reflection formula so that poles give exact
  // zeros:  term_n = (-1)^n z^n sin(pi nu (n+1)) Gamma(nu (n+1)) / (pi n!).
  const double log_z = z > 0.0 ? std::log(z) : 0.0;
  double sum = 0.0;
  double max_term = 0.0;
  int below_tol_streak = 0;
  for (int n = 0; n < 600; ++n) {
    double term;
    if (z == 0.0 && n > 0) break;
    const double s = std::sin(kPi * nu * (n + 1));
    if (s == 0.0) {
      term = 0.0;
    } else {
      const double log_mag = n * log_z + std::lgamma(nu * (n + 1)) +
                             std::log(std::abs(s)) - std::log(kPi) -
                             std::lgamma(n + 1.0);
      if (log_mag > 700.0) {
        throw convergence_error("mwright_series: loss of significance");
      }
      term = std::exp(log_mag);
      if (n % 2 == 1) term = -term;
      if (s < 0.0) term = -term;
    }
    sum += term;
    max_term = std::max(max_term, std::abs(term));
    if (max_term > kSeriesBlowup * std::max(std::abs(sum), 1e-300)) {
      throw convergence_error("mwright_series: loss of significance");
    }
    if (std::abs(term) <= tol * std::abs(sum)) {
      if (++below_tol_streak >= 2) break;
    } else {
      below_tol_streak = 0;
    }
  }
  Evaluation out;
  out.value = sum;
  out.abs_error_estimate = tol * std::abs(sum) + 2e-16 * max_term;
  out.method = Method::series;
  return out;
}

Evaluation mwright_asymptotic(MWrightOrder order, double r) {
  const double nu = order.nu;
  const double y = mwright_decay_variable(nu, r);
  if (y < 4.0) {
    throw domain_error("mwright_asymptotic: below crossover radius");
  }
  // Saddle-point prefactor; reduces to 1/sqrt(pi) at nu = 1/2 where the
  // function is exactly exp(-r^2/4)/sqrt(pi).
  const double a0 = std::pow(nu / (1.0 - nu), nu - 0.5) /
                    std::sqrt(2.0 * kPi * (1.0 - nu));
  Evaluation out;
  out.value = a0 * std::pow(y, nu - 0.5) * std::exp(-y);
  out.abs_error_estimate = out.value / y;
  out.method = Method::asymptotic;
  return out;
}

GammaRatioSpec mwright_mb_spec(double nu) {
  // Time-fractional reduced Green function (alpha = 2, theta = 0,
  // beta = 2 nu) kept in uncanceled quotient form; M_nu = 2 K.
  GammaRatioSpec spec;
  spec.numerator_factors = {{{0.0, 0.0}, 0.5}, {{1.0, 0.0}, -0.5},
                            {{1.0, 0.0}, -1.0}};
  spec.denominator_factors = {{{1.0, 0.0}, -nu}, {{0.0, 0.0}, 0.5},
                              {{1.0, 0.0}, -0.5}};
  spec.prefactor_power = -1.0;
  spec.prefactor_scale = 2.0 / 2.0;  // 2 * (1 / alpha)
  return spec;
}

Evaluation mwright(MWrightOrder order, double r) {
  if (!(r >= 0.0)) throw domain_error("mwright: r must be >= 0");
  if (r == 0.0) return mwright_series(order, 0.0);
  const double y = mwright_decay_variable(order.nu, r);
  if (y >= kAsymptoticFloor) {
    // The value is at or below roundoff of the contour integrand here,
    // while the asymptotic form's own error ~ value/Y is negligible.
    return mwright_asymptotic(order, r);
  }
  try {
    return mwright_series(order, r);
  } catch (const convergence_error&) {
    return mellin_barnes_eval(mwright_mb_spec(order.nu), r);
  }
}

Evaluation mwright_scaled(MWrightOrder order, double x, double t) {
  if (!(t > 0.0)) throw domain_error("mwright_scaled: t must be > 0");
  const double scale = std::pow(t, -order.nu);
  Evaluation out = mwright(order, x * scale);
  out.value *= scale;
  out.abs_error_estimate *= scale;
  return out;
}

double mwright_moment(MWrightOrder order, double delta) {
  if (!(delta > -1.0)) {
    throw domain_error("mwright_moment: delta must be > -1");
  }
  return std::exp(std::lgamma(delta + 1.0) -
                  std::lgamma(order.nu * delta + 1.0));
}

namespace {

// Spectral density of E_nu on the negative axis; coincides with the
// extremal neutral density N_nu^{-nu}.
double ml_spectral_density(double nu, double r) {
  const double rn = std::pow(r, nu);
  return std::sin(nu * kPi) / kPi * std::pow(r, nu - 1.0) /
         (rn * rn + 2.0 * rn * std::cos(nu * kPi) + 1.0);
}

}  // namespace

Evaluation mittag_leffler(double nu, double x) {
  if (!(nu > 0.0 && nu <= 1.0)) {
    throw domain_error("mittag_leffler: nu must lie in (0, 1]");
  }
  if (!(x <= 0.0)) {
    throw domain_error("mittag_leffler: only the nonpositive axis");
  }
  Evaluation out;
  if (nu == 1.0) {
    out.value = std::exp(x);
    out.abs_error_estimate = 2e-16 * out.value;
    out.method = Method::closed_form;
    return out;
  }
  if (x == 0.0) {
    out.value = 1.0;
    out.abs_error_estimate = 0.0;
    out.method = Method::series;
    return out;
  }
  if (-x <= 5.0) {
    // Series with a cancellation guard; fall through to the spectral
    // integral when the alternating terms grow too large.
    double sum = 0.0, max_term = 0.0;
    bool converged = false;
    double term = 1.0;
    for (int n = 0; n < 400; ++n) {
      term = std::pow(x, n) * rgamma(nu * n + 1.0);
      sum += term;
      max_term = std::max(max_term, std::abs(term));
      if (std::abs(term) <= 1e-16 * std::abs(sum) && n > 2) {
        converged = true;
        break;
      }
    }
    if (converged && max_term < 1e5 * std::abs(sum)) {
      out.value = sum;
      out.abs_error_estimate = 2e-16 * max_term + 1e-16 * std::abs(sum);
      out.method = Method::series;
      return out;
    }
  }
  const double t = -x;
  QuadResult q = integrate_half_line(
      [nu, t](double r) { return ml_spectral_density(nu, r) * std::exp(-r * t); },
      1e-11);
  out.value = q.value;
  out.abs_error_estimate = q.abs_error + 1e-12;
  out.method = Method::quadrature;
  return out;
}

}  // namespace fracdiff
