#ifndef FRACDIFF_GREEN_HPP
#define FRACDIFF_GREEN_HPP

#include "fracdiff/evaluation.hpp"
#include "fracdiff/mellin.hpp"
#include "fracdiff/stable.hpp"

namespace fracdiff {

enum class DiffusionCase {
  normal,           // alpha = 2, beta = 1
  space_fractional, // alpha < 2, beta = 1
  time_fractional,  // alpha = 2, beta != 1
  neutral,          // alpha = beta < 2
  wave_range,       // 1 < beta <= alpha <= 2
  general,
};

const char* diffusion_case_name(DiffusionCase c);

/// Orders of the space-time fractional diffusion equation together with
/// the similarity exponent gamma = beta / alpha.
struct DiffusionOrder {
  double alpha;
  double beta;
  double theta;
  double gamma_sim;
  DiffusionCase kind;
};

/// Validates (alpha, beta, theta): 0 < alpha <= 2, |theta| <= min(alpha,
/// 2 - alpha), and 0 < beta <= 1 or 1 < beta <= alpha <= 2. Classifies
/// the case. Throws domain_error naming the violated constraint.
DiffusionOrder validate_diffusion_params(double alpha, double beta,
                                         double theta);

/// Neutral-diffusion closed form N_alpha^theta(x), x > 0.
double neutral_density(double alpha, double theta, double x);

/// Mellin-Barnes spec of the general reduced Green function on x > 0.
GammaRatioSpec green_mb_spec(const DiffusionOrder& d);

/// Reduced Green function K_{alpha,beta}^theta(x). Dispatch: beta = 1 ->
/// stable density; alpha = 2 -> half M-Wright; alpha = beta -> neutral
/// closed form; otherwise the Mellin-Barnes engine. x < 0 through the
/// symmetry relation K(-x; theta) = K(x; -theta).
Evaluation reduced_green(const DiffusionOrder& d, double x);

/// Full Green function G(x, t) = t^-gamma K(x / t^gamma).
Evaluation green_function(const DiffusionOrder& d, double x, double t);

/// Even-order moment of the time-fractional (alpha = 2) Green function:
/// Gamma(2n+1) / Gamma(beta n + 1) * t^{beta n}. Moments diverge for
/// alpha < 2, hence the restriction.
double green_even_moment(int n, double beta, double t);

}  // namespace fracdiff

#endif
