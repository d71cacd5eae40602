#ifndef FRACDIFF_GAMMA_HPP
#define FRACDIFF_GAMMA_HPP

#include <complex>

namespace fracdiff {

/// Principal branch of log Gamma(z), real on the positive real axis.
/// Stirling's series after pushing |z| up with the recurrence
/// Gamma(z+1) = z Gamma(z); reflection for Re(z) < 0.5.
/// Throws domain_error at the poles z = 0, -1, -2, ...
std::complex<double> log_gamma_complex(std::complex<double> z);

/// log|sin(pi z)| + i arg, computed without overflow for large |Im z|.
std::complex<double> log_sin_pi(std::complex<double> z);

/// 1/Gamma(x) for real x; exact zero at the poles x = 0, -1, -2, ...
double rgamma(double x);

}  // namespace fracdiff

#endif
