#ifndef FRACDIFF_SUBORDINATION_HPP
#define FRACDIFF_SUBORDINATION_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "fracdiff/evaluation.hpp"
#include "fracdiff/green.hpp"
#include "fracdiff/table.hpp"

namespace fracdiff {

/// Evolving density x, t -> p(x; t).
using EvolvingDensity = std::function<double(double, double)>;

/// Parent / directing pair of a subordination integral. The directing
/// density must be one-sided; directing_is_delta marks the degenerate
/// beta = 1 limit where the directing law collapses to delta(tau - t).
struct SubordinationTriple {
  EvolvingDensity parent;      // q_tau(x)
  EvolvingDensity directing;   // u_t(tau)
  double gamma_scale = 1.0;    // self-similarity exponent of the parent
  bool directing_is_delta = false;
};

/// p_t(x) = Int_0^inf q_tau(x) u_t(tau) dtau by adaptive quadrature after
/// the substitution tau = e^u. Short-circuits to q_t(x) for the delta
/// directing limit.
Evaluation subordination_integral(const SubordinationTriple& trip, double x,
                                  double t, double tol = 1e-8);

struct VerificationResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

/// Stable subordination: L_{beta alpha_q}^{beta theta_q}(x; t) =
/// Int L_{alpha_q}^{theta_q}(x; tau) L_beta^{-beta}(tau; t) dtau.
VerificationResult verify_stable_subordination(double alpha_q,
                                               double theta_q, double beta,
                                               double x, double t,
                                               double tol = 1e-8);

/// M-Wright subordination: M_{eta beta}(x; t) =
/// Int M_eta(x; tau) M_beta(tau; t) dtau.
VerificationResult verify_mwright_subordination(double eta, double beta,
                                                double x, double t,
                                                double tol = 1e-8);

/// Space-time law with a stable parent (0 < beta <= 1):
/// K(x; t) = Int L_alpha^theta(x; tau) M_beta(tau; t) dtau.
VerificationResult verify_spacetime_law_stable(const DiffusionOrder& d,
                                               double x, double t,
                                               double tol = 1e-8);

/// Space-time law with a neutral parent (0 < beta/alpha <= 1, covering
/// the wave range): K(x; t) = Int N_alpha^theta(x; tau)
/// M_{beta/alpha}(tau; t) dtau.
VerificationResult verify_spacetime_law_neutral(const DiffusionOrder& d,
                                                double x, double t,
                                                double tol = 1e-8);

/// Monte Carlo product sampler: draws x1 ~ p1, x2 ~ p2 by inverse CDF
/// and returns x1 * x2^gamma_scale. Deterministic for a fixed seed.
std::vector<double> product_sampler(const DensityTable& p1,
                                    const DensityTable& p2,
                                    double gamma_scale, int n,
                                    std::uint64_t seed);

}  // namespace fracdiff

#endif
