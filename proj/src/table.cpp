#include "fracdiff/table.hpp"

#include <algorithm>
#include <cmath>

#include "fracdiff/evaluation.hpp"

namespace fracdiff {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

DensityTable DensityTable::from_density(
    const std::function<double(double)>& pdf, double lo, double hi, int n,
    bool log_spacing, std::optional<double> tail_exp) {
  if (n < 2) throw domain_error("DensityTable: need at least 2 nodes");
  if (log_spacing && !(lo > 0.0)) {
    throw domain_error("DensityTable: log spacing requires lo > 0");
  }
  DensityTable t;
  t.abscissae.resize(n);
  t.pdf_values.resize(n);
  for (int i = 0; i < n; ++i) {
    const double frac = static_cast<double>(i) / (n - 1);
    const double x = log_spacing
                         ? lo * std::pow(hi / lo, frac)
                         : lo + (hi - lo) * frac;
    t.abscissae[i] = x;
    t.pdf_values[i] = std::max(pdf(x), 0.0);
  }
  t.cdf_values.resize(n);
  t.cdf_values[0] = 0.0;
  for (int i = 1; i < n; ++i) {
    t.cdf_values[i] = t.cdf_values[i - 1] +
                      0.5 * (t.pdf_values[i] + t.pdf_values[i - 1]) *
                          (t.abscissae[i] - t.abscissae[i - 1]);
  }
  t.tail_exponent = tail_exp;
  if (tail_exp) {
    // pdf ~ c x^-e fitted at the last node; mass beyond hi = f(hi) hi/(e-1)
    t.tail_mass = t.pdf_values.back() * hi / (*tail_exp - 1.0);
  }
  return t;
}

DensityTable DensityTable::point_mass(double at) {
  DensityTable t;
  t.abscissae = {at};
  t.pdf_values = {1.0};
  t.cdf_values = {1.0};
  return t;
}

double DensityTable::total_mass() const {
  if (degenerate()) return 1.0;
  return cdf_values.back() + tail_mass;
}

double DensityTable::sample(double u) const {
  if (degenerate()) return abscissae.front();
  const double total = total_mass();
  if (std::abs(total - 1.0) > 1e-4) {
    throw domain_error("DensityTable::sample: table is not normalized");
  }
  const double target = u * total;
  if (target >= cdf_values.back()) {
    if (!tail_exponent || tail_mass <= 0.0) return abscissae.back();
    // Invert the power-law survival S(x) = tail_mass (x/hi)^{1-e}.
    const double remaining = std::max(total - target, 1e-300);
    return abscissae.back() *
           std::pow(remaining / tail_mass, 1.0 / (1.0 - *tail_exponent));
  }
  auto it = std::upper_bound(cdf_values.begin(), cdf_values.end(), target);
  const std::size_t i = std::max<std::ptrdiff_t>(
      1, std::distance(cdf_values.begin(), it));
  const double c0 = cdf_values[i - 1], c1 = cdf_values[i];
  const double frac = c1 > c0 ? (target - c0) / (c1 - c0) : 0.5;
  return abscissae[i - 1] + frac * (abscissae[i] - abscissae[i - 1]);
}

double DensityTable::cdf(double x) const {
  if (degenerate()) return x >= abscissae.front() ? 1.0 : 0.0;
  if (x <= abscissae.front()) return 0.0;
  if (x >= abscissae.back()) {
    if (!tail_exponent) return cdf_values.back();
    return cdf_values.back() +
           tail_mass * (1.0 - std::pow(x / abscissae.back(),
                                       1.0 - *tail_exponent));
  }
  auto it = std::upper_bound(abscissae.begin(), abscissae.end(), x);
  const std::size_t i = std::distance(abscissae.begin(), it);
  const double x0 = abscissae[i - 1], x1 = abscissae[i];
  const double frac = (x - x0) / (x1 - x0);
  return cdf_values[i - 1] + frac * (cdf_values[i] - cdf_values[i - 1]);
}

double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf) {
  if (samples.empty()) throw domain_error("ks_distance: empty sample set");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    sup = std::max(sup, std::abs((i + 1) / n - f));
    sup = std::max(sup, std::abs(i / n - f));
  }
  return sup;
}

}  // namespace fracdiff
