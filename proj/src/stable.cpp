#include "fracdiff/stable.hpp"

#include <cmath>

#include "fracdiff/mwright.hpp"
#include "fracdiff/quadrature.hpp"

namespace fracdiff {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrtPi = 1.772453850905516027298167483341145183;
constexpr double kEps = 1e-12;  // slack on the parameter-region boundary

}  // namespace

StableParams validate_stable_params(double alpha, double theta) {
  if (!(alpha > 0.0 && alpha <= 2.0 + kEps)) {
    throw domain_error(
        "validate_stable_params: alpha must satisfy 0 < alpha <= 2");
  }
  alpha = std::min(alpha, 2.0);
  const double bound = std::min(alpha, 2.0 - alpha);
  if (!(std::abs(theta) <= bound + kEps)) {
    throw domain_error(
        "validate_stable_params: |theta| must satisfy |theta| <= "
        "min(alpha, 2 - alpha)");
  }
  StableParams p;
  p.alpha = alpha;
  p.theta = theta;
  p.rho = (alpha - theta) / (2.0 * alpha);
  return p;
}

std::complex<double> char_exponent(const StableParams& p, double kappa) {
  if (kappa == 0.0) return {0.0, 0.0};
  const double sign = kappa > 0.0 ? 1.0 : -1.0;
  const double mag = std::pow(std::abs(kappa), p.alpha);
  const double phase = sign * p.theta * kPi / 2.0;
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

GammaRatioSpec stable_mb_spec(const StableParams& p) {
  // Space-fractional quotient (beta = 1), kept uncanceled so that the
  // pole lattice of Gamma(1 - s/alpha) bounds the strip at alpha when
  // alpha < 1.
  GammaRatioSpec spec;
  const double inv_a = 1.0 / p.alpha;
  spec.numerator_factors = {{{0.0, 0.0}, inv_a}, {{1.0, 0.0}, -inv_a},
                            {{1.0, 0.0}, -1.0}};
  spec.denominator_factors = {{{1.0, 0.0}, -inv_a}, {{0.0, 0.0}, p.rho},
                              {{1.0, 0.0}, -p.rho}};
  spec.prefactor_power = -1.0;
  spec.prefactor_scale = inv_a;
  return spec;
}

double cauchy_density(double theta, double x) {
  if (!(std::abs(theta) < 1.0)) {
    throw domain_error("cauchy_density: requires |theta| < 1");
  }
  const double s = std::sin(theta * kPi / 2.0);
  const double c = std::cos(theta * kPi / 2.0);
  return c / (kPi * ((x + s) * (x + s) + c * c));
}

Evaluation extremal_from_mwright(double nu, double c, double r) {
  if (!(nu > 0.0 && nu < 1.0)) {
    throw domain_error("extremal_from_mwright: nu must lie in (0, 1)");
  }
  if (!(c > 0.0)) throw domain_error("extremal_from_mwright: c must be > 0");
  if (!(r > 0.0)) throw domain_error("extremal_from_mwright: r must be > 0");
  const double jac = c * nu / std::pow(r, nu + 1.0);
  Evaluation m = mwright(MWrightOrder(nu), c / std::pow(r, nu));
  m.value *= jac;
  m.abs_error_estimate *= jac;
  return m;
}

namespace {

Evaluation stable_density_positive(const StableParams& p, double x);

// Small-x limit by linear extrapolation from x = eps and 2 eps; the
// Mellin-Barnes form is stated for x > 0 only.
Evaluation stable_density_origin(const StableParams& p) {
  const double eps = 1e-6;
  Evaluation a = stable_density_positive(p, eps);
  Evaluation b = stable_density_positive(p, 2.0 * eps);
  Evaluation out;
  out.value = 2.0 * a.value - b.value;
  out.abs_error_estimate =
      2.0 * a.abs_error_estimate + b.abs_error_estimate +
      std::abs(a.value - b.value);
  out.method = a.method;
  return out;
}

Evaluation stable_density_positive(const StableParams& p, double x) {
  Evaluation out;
  if (p.alpha == 2.0) {
    out.value = std::exp(-x * x / 4.0) / (2.0 * kSqrtPi);
    out.abs_error_estimate = 4e-16 * out.value;
    out.method = Method::closed_form;
    return out;
  }
  if (p.alpha == 1.0 && std::abs(p.theta) < 1.0) {
    out.value = cauchy_density(p.theta, x);
    out.abs_error_estimate = 4e-16 * out.value;
    out.method = Method::closed_form;
    return out;
  }
  if (p.alpha < 1.0 && std::abs(p.theta + p.alpha) <= kEps) {
    return extremal_from_mwright(p.alpha, 1.0, x);  // one-sided on x > 0
  }
  Evaluation mb = mellin_barnes_eval(stable_mb_spec(p), x);
  if (mb.value < 0.0 && mb.value > -mb.abs_error_estimate) mb.value = 0.0;
  return mb;
}

}  // namespace

Evaluation stable_density(const StableParams& p, double x) {
  if (p.alpha < 1.0 && std::abs(p.theta + p.alpha) <= kEps) {
    // One-sided with support on the positive axis. The density vanishes
    // at the support edge but the contour prefactor 1/(alpha x) does
    // not: the edge itself is a pole of the representation.
    if (x == 0.0) {
      throw domain_error("stable_density: x = 0 edge of a one-sided "
                         "density");
    }
    if (x < 0.0) return {0.0, 0.0, Method::closed_form};
    return extremal_from_mwright(p.alpha, 1.0, x);
  }
  if (p.alpha < 1.0 && std::abs(p.theta - p.alpha) <= kEps) {
    // Mirror of the one-sided case, supported on the negative axis.
    if (x == 0.0) {
      throw domain_error("stable_density: x = 0 edge of a one-sided "
                         "density");
    }
    if (x > 0.0) return {0.0, 0.0, Method::closed_form};
    return extremal_from_mwright(p.alpha, 1.0, -x);
  }
  if (x > 0.0) return stable_density_positive(p, x);
  if (x < 0.0) {
    StableParams mirror = p;
    mirror.theta = -p.theta;
    mirror.rho = 1.0 - p.rho;
    return stable_density_positive(mirror, -x);
  }
  if (p.alpha == 2.0 || (p.alpha == 1.0 && std::abs(p.theta) < 1.0)) {
    return stable_density_positive(p, 0.0);  // closed forms valid at 0
  }
  return stable_density_origin(p);
}

Evaluation stable_scaled(const StableParams& p, double x, double t) {
  if (!(t > 0.0)) throw domain_error("stable_scaled: t must be > 0");
  const double scale = std::pow(t, -1.0 / p.alpha);
  Evaluation out = stable_density(p, x * scale);
  out.value *= scale;
  out.abs_error_estimate *= scale;
  return out;
}

std::pair<double, double> laplace_check_extremal(double alpha, double s) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw domain_error("laplace_check_extremal: alpha must lie in (0, 1)");
  }
  if (!(s >= 0.0)) throw domain_error("laplace_check_extremal: s >= 0");
  QuadResult q = integrate_half_line(
      [alpha, s](double x) {
        return std::exp(-s * x) * extremal_from_mwright(alpha, 1.0, x).value;
      },
      1e-9);
  return {q.value, std::exp(-std::pow(s, alpha))};
}

std::pair<std::complex<double>, std::complex<double>> charfn_check(
    const StableParams& p, double kappa) {
  if (p.alpha <= 0.3) {
    throw domain_error("charfn_check: tail correction unreliable for "
                       "alpha <= 0.3");
  }
  auto density = [&p](double x) { return stable_density(p, x).value; };

  std::complex<double> lhs;
  if (p.alpha == 2.0) {
    // Gaussian: stretched tail is already below roundoff at |x| = 16.
    const double X = 16.0;
    QuadResult re = integrate(
        [&](double x) { return std::cos(kappa * x) * density(x); }, -X, X,
        1e-10);
    QuadResult im = integrate(
        [&](double x) { return std::sin(kappa * x) * density(x); }, -X, X,
        1e-10);
    lhs = {re.value, im.value};
  } else {
    // Truncate where the algebraic tail model c |x|^-(alpha+1) fitted at
    // +-X carries the remainder; two integration-by-parts terms per side.
    const double X = p.alpha >= 1.0 ? 200.0 : 400.0;
    QuadResult re = integrate(
        [&](double x) { return std::cos(kappa * x) * density(x); }, -X, X,
        1e-9, 1 << 18);
    QuadResult im = integrate(
        [&](double x) { return std::sin(kappa * x) * density(x); }, -X, X,
        1e-9, 1 << 18);
    lhs = {re.value, im.value};
    const double a1 = p.alpha + 1.0;
    const double c_plus = density(X) * std::pow(X, a1);
    const double c_minus = density(-X) * std::pow(X, a1);
    if (kappa == 0.0) {
      lhs += (c_plus + c_minus) * std::pow(X, -p.alpha) / p.alpha;
    } else {
      const std::complex<double> ik(0.0, kappa);
      auto tail = [&](double c, std::complex<double> iw) {
        const std::complex<double> phase = std::exp(iw * X);
        const double g = c * std::pow(X, -a1);
        const double gp = -a1 * c * std::pow(X, -a1 - 1.0);
        return -g * phase / iw + gp * phase / (iw * iw);
      };
      lhs += tail(c_plus, ik) + std::conj(tail(c_minus, ik));
    }
  }
  const std::complex<double> rhs = std::exp(-char_exponent(p, kappa));
  return {lhs, rhs};
}

}  // namespace fracdiff
