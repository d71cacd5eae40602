#ifndef FRACDIFF_STABLE_HPP
#define FRACDIFF_STABLE_HPP

#include <complex>
#include <utility>

#include "fracdiff/evaluation.hpp"
#include "fracdiff/mellin.hpp"

namespace fracdiff {

/// Strictly stable density parameters in the Feller parameterization.
struct StableParams {
  double alpha;  // stability exponent, 0 < alpha <= 2
  double theta;  // skewness, |theta| <= min(alpha, 2 - alpha)
  double rho;    // (alpha - theta) / (2 alpha)
};

/// Validates (alpha, theta) against the admissible parameter region and
/// derives rho; throws domain_error naming the violated constraint.
StableParams validate_stable_params(double alpha, double theta);

/// Characteristic exponent psi(kappa) = |kappa|^alpha
/// exp(i sign(kappa) theta pi / 2); the log of the characteristic
/// function is -psi.
std::complex<double> char_exponent(const StableParams& p, double kappa);

/// Mellin-Barnes spec of the stable density on x > 0 (uncanceled
/// space-fractional quotient, beta = 1).
GammaRatioSpec stable_mb_spec(const StableParams& p);

/// Generalized Cauchy density of skewness theta, |theta| < 1.
double cauchy_density(double theta, double x);

/// Extremal stable density through the M-Wright function:
/// c^{-1/nu} L_nu^{-nu}(r c^{-1/nu}) = (c nu / r^{nu+1}) M_nu(c / r^nu).
Evaluation extremal_from_mwright(double nu, double c, double r);

/// Stable density L_alpha^theta(x). Closed forms for the Gaussian,
/// Cauchy and extremal (alpha < 1) corners; Mellin-Barnes otherwise.
/// x < 0 goes through the symmetry relation, x = 0 through a small-x
/// extrapolation.
Evaluation stable_density(const StableParams& p, double x);

/// Time-evolved form t^{-1/alpha} L(x / t^{1/alpha}).
Evaluation stable_scaled(const StableParams& p, double x, double t);

/// Both sides of the extremal Laplace identity
/// Int_0^inf e^{-sx} L_alpha^{-alpha}(x) dx = exp(-s^alpha).
std::pair<double, double> laplace_check_extremal(double alpha, double s);

/// Both sides of the characteristic-function identity
/// Int e^{i kappa x} L(x) dx = exp(-psi(kappa)), with an algebraic-tail
/// correction fitted at the truncation points.
std::pair<std::complex<double>, std::complex<double>> charfn_check(
    const StableParams& p, double kappa);

}  // namespace fracdiff

#endif
