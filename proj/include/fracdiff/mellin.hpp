#ifndef FRACDIFF_MELLIN_HPP
#define FRACDIFF_MELLIN_HPP

#include <complex>
#include <utility>
#include <vector>

#include "fracdiff/evaluation.hpp"

namespace fracdiff {

/// One factor Gamma(offset + slope * s) of a gamma quotient.
struct GammaFactor {
  std::complex<double> offset;
  double slope;
};

/// Symbolic description of a Mellin-Barnes integrand
///
///   prefactor_scale * x^prefactor_power
///     * (1 / 2 pi i) Int ratio(s) x^s ds
///
/// with ratio(s) the quotient of the numerator and denominator gamma
/// factors, taken along a vertical line inside the strip of analyticity.
struct GammaRatioSpec {
  std::vector<GammaFactor> numerator_factors;
  std::vector<GammaFactor> denominator_factors;
  double prefactor_power = 0.0;
  double prefactor_scale = 1.0;

  /// log of the gamma quotient at s (sum of log-gammas; never forms the
  /// individual Gamma values, so moderate |Im s| cannot overflow).
  std::complex<double> log_ratio(std::complex<double> s) const;
};

/// Vertical contour Re(s) = abscissa truncated at |Im(s)| = height.
struct ContourSpec {
  double abscissa = 0.0;
  double height = 30.0;
  int node_count = 512;
  bool adaptive = true;
};

/// Maximal open interval (g1, g2) of abscissae for which every numerator
/// gamma factor is pole-free on the vertical line. Throws domain_error if
/// the interval is empty.
std::pair<double, double> strip_of_analyticity(const GammaRatioSpec& spec);

/// Midpoint of the strip: the default contour abscissa.
double default_abscissa(const GammaRatioSpec& spec);

/// Numerical evaluation of the Mellin-Barnes integral at x > 0.
/// Truncation height doubles until the integrand magnitude at the
/// endpoints falls below 1e-12 of its peak; composite Gauss-Legendre
/// panels with a refinement difference as the error estimate.
Evaluation mellin_barnes_eval(const GammaRatioSpec& spec, double x,
                              const ContourSpec& contour);

/// Same with the default contour for the spec.
Evaluation mellin_barnes_eval(const GammaRatioSpec& spec, double x);

}  // namespace fracdiff

#endif
