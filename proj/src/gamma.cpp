#include "fracdiff/gamma.hpp"

#include <cmath>

#include "fracdiff/evaluation.hpp"

namespace fracdiff {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogTwoPi = 1.837877066409345483560659472811235279;

// Bernoulli coefficients B_{2n} / (2n (2n-1)) of the Stirling series.
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// Stirling's asymptotic series, valid for large |z|, Re(z) > 0.
std::complex<double> log_gamma_stirling(std::complex<double> z) {
  std::complex<double> result =
      (z - 0.5) * std::log(z) - z + 0.5 * kLogTwoPi;
  const std::complex<double> z2 = z * z;
  std::complex<double> zpow = z;
  for (double c : kStirling) {
    result += c / zpow;
    zpow *= z2;
  }
  return result;
}

}  // namespace

std::complex<double> log_sin_pi(std::complex<double> z) {
  // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / (2i); factor out the
  // dominant exponential so that nothing overflows for large |Im z|.
  const std::complex<double> ipz(-kPi * z.imag(), kPi * z.real());
  if (z.imag() > 0) {
    // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i)
    return -ipz + std::log((std::exp(2.0 * ipz) - 1.0) /
                           std::complex<double>(0.0, 2.0));
  }
  return ipz + std::log((1.0 - std::exp(-2.0 * ipz)) /
                        std::complex<double>(0.0, 2.0));
}

std::complex<double> log_gamma_complex(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 &&
      std::abs(z.real() - std::round(z.real())) < 1e-14) {
    throw domain_error("log_gamma_complex: pole at nonpositive integer");
  }
  if (z.imag() == 0.0 && z.real() > 0.0) {
    return {std::lgamma(z.real()), 0.0};
  }
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return std::log(kPi) - log_sin_pi(z) - log_gamma_complex(1.0 - z);
  }
  // Push the argument out to |z| >= 10 with the recurrence.
  std::complex<double> shift = 0.0;
  while (std::abs(z) < 10.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return log_gamma_stirling(z) - shift;
}

double rgamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) return 0.0;
  if (x > 0.5) {
    double lg = std::lgamma(x);
    if (lg > 700.0) return 0.0;
    return std::exp(-lg);
  }
  // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
  double lg = std::lgamma(1.0 - x);
  double s = std::sin(kPi * x);
  if (lg > 700.0) {
    // Gamma(1-x) overflows only when the product does too.
    return s / kPi * std::exp(lg);  // inf with the right sign
  }
  return s * std::exp(lg) / kPi;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::asymptotic: return "asymptotic";
    case Method::contour: return "contour";
    case Method::closed_form: return "closed_form";
    case Method::quadrature: return "quadrature";
  }
  return "unknown";
}

}  // namespace fracdiff
