#include "fracdiff/subordination.hpp"

#include <cmath>

#include "fracdiff/mwright.hpp"
#include "fracdiff/quadrature.hpp"

namespace fracdiff {

namespace {

constexpr double kEps = 1e-12;

Evaluation quad_eval(const QuadResult& q) {
  return {q.value, q.abs_error, Method::quadrature};
}

}  // namespace

Evaluation subordination_integral(const SubordinationTriple& trip, double x,
                                  double t, double tol) {
  if (!(t > 0.0)) throw domain_error("subordination_integral: t must be > 0");
  if (!(tol > 0.0)) {
    throw domain_error("subordination_integral: tol must be > 0");
  }
  if (trip.directing_is_delta) {
    return {trip.parent(x, t), 0.0, Method::closed_form};
  }
  QuadResult q = integrate_half_line(
      [&trip, x, t](double tau) {
        return trip.parent(x, tau) * trip.directing(tau, t);
      },
      tol);
  return quad_eval(q);
}

VerificationResult verify_stable_subordination(double alpha_q,
                                               double theta_q, double beta,
                                               double x, double t,
                                               double tol) {
  StableParams parent = validate_stable_params(alpha_q, theta_q);
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw domain_error(
        "verify_stable_subordination: beta must lie in (0, 1]");
  }
  StableParams sub =
      validate_stable_params(beta * alpha_q, beta * theta_q);
  VerificationResult out;
  out.lhs = stable_scaled(sub, x, t).value;
  if (std::abs(beta - 1.0) <= kEps) {
    out.rhs = out.lhs;  // M_1 delta directing: identity subordination
  } else {
    SubordinationTriple trip;
    trip.parent = [parent](double xx, double tau) {
      return stable_scaled(parent, xx, tau).value;
    };
    trip.directing = [beta](double tau, double tt) {
      const double scale = std::pow(tt, -1.0 / beta);
      return scale * extremal_from_mwright(beta, 1.0, tau * scale).value;
    };
    trip.gamma_scale = 1.0 / alpha_q;
    out.rhs = subordination_integral(trip, x, t, tol).value;
  }
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

VerificationResult verify_mwright_subordination(double eta, double beta,
                                                double x, double t,
                                                double tol) {
  MWrightOrder parent_order(eta);
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw domain_error(
        "verify_mwright_subordination: beta must lie in (0, 1]");
  }
  VerificationResult out;
  if (std::abs(beta - 1.0) <= kEps) {
    out.lhs = mwright_scaled(parent_order, x, t).value;
    out.rhs = out.lhs;
  } else {
    out.lhs = mwright_scaled(MWrightOrder(eta * beta), x, t).value;
    SubordinationTriple trip;
    trip.parent = [parent_order](double xx, double tau) {
      return mwright_scaled(parent_order, xx, tau).value;
    };
    trip.directing = [beta](double tau, double tt) {
      return mwright_scaled(MWrightOrder(beta), tau, tt).value;
    };
    trip.gamma_scale = eta;
    out.rhs = subordination_integral(trip, x, t, tol).value;
  }
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

VerificationResult verify_spacetime_law_stable(const DiffusionOrder& d,
                                               double x, double t,
                                               double tol) {
  if (!(d.beta <= 1.0 + kEps)) {
    throw domain_error(
        "verify_spacetime_law_stable: requires 0 < beta <= 1");
  }
  StableParams parent = validate_stable_params(d.alpha, d.theta);
  VerificationResult out;
  out.lhs = green_function(d, x, t).value;
  if (std::abs(d.beta - 1.0) <= kEps) {
    out.rhs = stable_scaled(parent, x, t).value;
  } else {
    SubordinationTriple trip;
    trip.parent = [parent](double xx, double tau) {
      return stable_scaled(parent, xx, tau).value;
    };
    const double beta = d.beta;
    trip.directing = [beta](double tau, double tt) {
      return mwright_scaled(MWrightOrder(beta), tau, tt).value;
    };
    trip.gamma_scale = 1.0 / d.alpha;
    out.rhs = subordination_integral(trip, x, t, tol).value;
  }
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

VerificationResult verify_spacetime_law_neutral(const DiffusionOrder& d,
                                                double x, double t,
                                                double tol) {
  const double ratio = d.beta / d.alpha;
  if (!(ratio > 0.0 && ratio <= 1.0 + kEps)) {
    throw domain_error(
        "verify_spacetime_law_neutral: requires 0 < beta/alpha <= 1");
  }
  VerificationResult out;
  out.lhs = green_function(d, x, t).value;
  const double alpha = d.alpha, theta = d.theta;
  auto neutral_evolving = [alpha, theta](double xx, double tau) {
    if (xx == 0.0) return 0.0;  // not exercised away from x > 0
    return neutral_density(alpha, theta, xx / tau) / tau;
  };
  if (std::abs(ratio - 1.0) <= kEps) {
    out.rhs = neutral_evolving(x, t);
  } else {
    SubordinationTriple trip;
    trip.parent = neutral_evolving;
    trip.directing = [ratio](double tau, double tt) {
      return mwright_scaled(MWrightOrder(ratio), tau, tt).value;
    };
    trip.gamma_scale = 1.0;
    out.rhs = subordination_integral(trip, x, t, tol).value;
  }
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

std::vector<double> product_sampler(const DensityTable& p1,
                                    const DensityTable& p2,
                                    double gamma_scale, int n,
                                    std::uint64_t seed) {
  if (n < 1) throw domain_error("product_sampler: n must be >= 1");
  if (!p2.degenerate() && !p2.abscissae.empty() &&
      p2.abscissae.front() < 0.0) {
    throw domain_error("product_sampler: p2 must be one-sided");
  }
  SplitMix64 rng(seed);
  std::vector<double> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double x1 = p1.sample(rng.uniform());
    const double x2 = p2.sample(rng.uniform());
    out.push_back(x1 * std::pow(x2, gamma_scale));
  }
  return out;
}

}  // namespace fracdiff
