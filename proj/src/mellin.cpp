#include "fracdiff/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracdiff/gamma.hpp"

namespace fracdiff {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEdgeTol = 1e-12;   // endpoint / peak cutoff for H
constexpr double kMaxHeight = 4096.0;

// 16-point Gauss-Legendre nodes and weights on [-1, 1] (positive half).
constexpr double kGlX[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
constexpr double kGlW[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};

}  // namespace

std::complex<double> GammaRatioSpec::log_ratio(std::complex<double> s) const {
  std::complex<double> acc = 0.0;
  for (const auto& f : numerator_factors) {
    acc += log_gamma_complex(f.offset + f.slope * s);
  }
  for (const auto& f : denominator_factors) {
    acc -= log_gamma_complex(f.offset + f.slope * s);
  }
  return acc;
}

std::pair<double, double> strip_of_analyticity(const GammaRatioSpec& spec) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const auto& f : spec.numerator_factors) {
    if (f.slope == 0.0) continue;
    if (f.slope > 0.0) {
      lo = std::max(lo, -f.offset.real() / f.slope);
    } else {
      hi = std::min(hi, f.offset.real() / -f.slope);
    }
  }
  if (!(lo < hi)) {
    throw domain_error("strip_of_analyticity: empty strip");
  }
  return {lo, hi};
}

double default_abscissa(const GammaRatioSpec& spec) {
  auto [lo, hi] = strip_of_analyticity(spec);
  if (std::isinf(lo) && std::isinf(hi)) return 0.0;
  if (std::isinf(lo)) return hi - 1.0;
  if (std::isinf(hi)) return lo + 1.0;
  return 0.5 * (lo + hi);
}

namespace {

struct Integrand {
  const GammaRatioSpec& spec;
  double abscissa;
  double log_x;

  std::complex<double> operator()(double t) const {
    const std::complex<double> s(abscissa, t);
    return std::exp(spec.log_ratio(s) + s * log_x);
  }
};

// Composite 16-point Gauss-Legendre over [a, b] with n panels.
std::complex<double> composite_gl(const Integrand& f, double a, double b,
                                  int panels) {
  std::complex<double> acc = 0.0;
  const double w = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * w;
    for (int j = 0; j < 8; ++j) {
      const double dx = 0.5 * w * kGlX[j];
      acc += kGlW[j] * (f(mid - dx) + f(mid + dx));
    }
  }
  return acc * (0.5 * w);
}

}  // namespace

Evaluation mellin_barnes_eval(const GammaRatioSpec& spec, double x,
                              const ContourSpec& contour) {
  if (!(x > 0.0)) {
    throw domain_error("mellin_barnes_eval: requires x > 0");
  }
  auto [lo, hi] = strip_of_analyticity(spec);
  const double c = contour.abscissa;
  if (!(c > lo && c < hi)) {
    throw domain_error("mellin_barnes_eval: contour abscissa outside strip");
  }
  const Integrand f{spec, c, std::log(x)};

  // All in-library specs have real offsets, so the integrand is
  // conjugate-symmetric about the real axis and the t < 0 half is the
  // conjugate of the t > 0 half.
  bool symmetric = true;
  for (const auto& g : spec.numerator_factors) {
    if (g.offset.imag() != 0.0) symmetric = false;
  }
  for (const auto& g : spec.denominator_factors) {
    if (g.offset.imag() != 0.0) symmetric = false;
  }

  // Grow the truncation height until the endpoint magnitude is edge-small
  // relative to the peak; a tail that stops decaying flags a parameter
  // set where the vertical line does not converge.
  double H = contour.height;
  double peak = 0.0, edge = 0.0;
  for (;;) {
    peak = 0.0;
    for (int i = 0; i <= 64; ++i) {
      peak = std::max(peak, std::abs(f(H * i / 64.0)));
    }
    edge = std::abs(f(H));
    if (std::abs(f(H)) > std::abs(f(0.5 * H)) && H >= 64.0) {
      throw convergence_error(
          "mellin_barnes_eval: integrand does not decay on the contour");
    }
    if (!contour.adaptive || edge <= kEdgeTol * peak) break;
    if (H >= kMaxHeight) {
      throw convergence_error(
          "mellin_barnes_eval: truncation height limit reached");
    }
    H *= 2.0;
  }

  // Truncation tail bound from the local decay rate at the endpoint.
  const double e_half = std::abs(f(0.95 * H));
  double tail = edge * H;  // fallback: no measurable decay
  if (e_half > 0.0 && edge > 0.0 && edge < e_half) {
    const double rate = std::log(e_half / edge) / (0.05 * H);
    tail = edge / rate;
  }

  int panels = std::max(8, contour.node_count / 16);
  panels = std::max(panels, static_cast<int>(H / 2.0));
  // Oscillatory cancellation leaves a roundoff floor proportional to the
  // un-cancelled mass of the integrand; refining past it is pointless.
  const double roundoff_floor = 4e-16 * peak * H;
  std::complex<double> coarse, fine;
  double quad_err;
  int refinements = 0;
  if (symmetric) {
    coarse = composite_gl(f, 0.0, H, panels);
    for (;;) {
      fine = composite_gl(f, 0.0, H, 2 * panels);
      quad_err = 2.0 * std::abs(fine - coarse);
      if (!contour.adaptive ||
          quad_err < std::max(1e-12 * std::abs(fine), roundoff_floor) +
                         1e-15 ||
          ++refinements >= 5) {
        break;
      }
      coarse = fine;
      panels *= 2;
    }
    fine = 2.0 * fine.real();  // conjugate half adds the mirror image
  } else {
    coarse = composite_gl(f, -H, H, 2 * panels);
    for (;;) {
      fine = composite_gl(f, -H, H, 4 * panels);
      quad_err = std::abs(fine - coarse);
      if (!contour.adaptive ||
          quad_err < std::max(1e-12 * std::abs(fine), roundoff_floor) +
                         1e-15 ||
          ++refinements >= 5) {
        break;
      }
      coarse = fine;
      panels *= 2;
    }
  }

  const double scale =
      spec.prefactor_scale * std::pow(x, spec.prefactor_power) / (2.0 * kPi);
  const double im_residual = std::abs(fine.imag()) * std::abs(scale);
  if (im_residual > 1e-10) {
    throw convergence_error(
        "mellin_barnes_eval: imaginary residual above 1e-10");
  }
  Evaluation out;
  out.value = fine.real() * scale;
  out.abs_error_estimate =
      (quad_err + tail + std::abs(fine.imag())) * std::abs(scale);
  out.method = Method::contour;
  return out;
}

Evaluation mellin_barnes_eval(const GammaRatioSpec& spec, double x) {
  ContourSpec contour;
  contour.abscissa = default_abscissa(spec);
  contour.height = 16.0;
  return mellin_barnes_eval(spec, x, contour);
}

}  // namespace fracdiff
