#ifndef FRACDIFF_QUADRATURE_HPP
#define FRACDIFF_QUADRATURE_HPP

#include <functional>

namespace fracdiff {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  long evaluations = 0;
};

/// Adaptive Gauss-Kronrod (G7,K15) on a finite interval.
/// Bisects until the local K15-G7 difference meets the tolerance or the
/// evaluation budget runs out; throws convergence_error in the latter case.
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double abs_tol, long max_evals = 1 << 16);

/// Integral over (0, inf) via the substitution tau = e^u. The window in u
/// is grown outward until the transformed integrand at the edges falls
/// below edge_tol times its peak.
QuadResult integrate_half_line(const std::function<double(double)>& f,
                               double abs_tol, long max_evals = 1 << 16,
                               double edge_tol = 1e-14);

/// Integral over (-inf, inf) with window growth as above.
QuadResult integrate_real_line(const std::function<double(double)>& f,
                               double abs_tol, long max_evals = 1 << 17);

}  // namespace fracdiff

#endif
