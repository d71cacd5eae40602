#ifndef FRACDIFF_MWRIGHT_HPP
#define FRACDIFF_MWRIGHT_HPP

#include "fracdiff/evaluation.hpp"
#include "fracdiff/mellin.hpp"

namespace fracdiff {

/// Order of an M-Wright function, restricted to (0, 1). The limit nu = 1
/// is the delta distribution delta(r-1) and is rejected here; only the
/// subordination module honors it, symbolically.
struct MWrightOrder {
  double nu;
  explicit MWrightOrder(double nu_);
};

/// Alternating power series. Terms are accumulated until two successive
/// terms drop below tol times the partial sum; throws convergence_error
/// when cancellation exceeds the series-domain bound (largest term above
/// 1e6 times the sum) and the caller must switch method.
Evaluation mwright_series(MWrightOrder nu, double z, double tol = 1e-15);

/// Exponential asymptotic form A0 * Y^{nu-1/2} * exp(-Y); the error
/// estimate is value / Y, the magnitude of the first neglected
/// correction. Throws domain_error below the crossover radius (Y < 4).
Evaluation mwright_asymptotic(MWrightOrder nu, double r);

/// Decay variable Y(r) of the asymptotic form.
double mwright_decay_variable(double nu, double r);

/// Mellin-Barnes spec of M_nu on x > 0 (the time-fractional reduced
/// Green function with alpha = 2, beta = 2 nu, doubled).
GammaRatioSpec mwright_mb_spec(double nu);

/// Dispatcher: series where stable, contour quadrature in the
/// cancellation region, asymptotic far out where the contour value
/// drowns in roundoff.
Evaluation mwright(MWrightOrder nu, double r);

/// Time-scaled density form M_nu(x; t) = t^{-nu} M_nu(x / t^nu).
Evaluation mwright_scaled(MWrightOrder nu, double x, double t);

/// Moment of order delta > -1: Gamma(delta+1) / Gamma(nu delta + 1).
double mwright_moment(MWrightOrder nu, double delta);

/// Mittag-Leffler E_nu(x) on the nonpositive real axis, nu in (0, 1].
/// Series for small |x|; spectral integral over (0, inf) beyond.
Evaluation mittag_leffler(double nu, double x);

}  // namespace fracdiff

#endif
