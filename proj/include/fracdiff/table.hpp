#ifndef FRACDIFF_TABLE_HPP
#define FRACDIFF_TABLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace fracdiff {

/// Counter-based pseudo-random generator (splitmix64). The algorithm is
/// fixed so sampler output is bit-reproducible for a given seed:
///   state += 0x9E3779B97F4A7C15
///   z = state; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
///   z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31
/// uniform doubles are (z >> 11) * 2^-53.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform();  // in [0, 1)

private:
  std::uint64_t state_;
};

/// Discretized density: grid of abscissae, pdf values, cumulative values,
/// and an optional algebraic tail order for completion beyond the grid.
struct DensityTable {
  std::vector<double> abscissae;
  std::vector<double> pdf_values;
  std::vector<double> cdf_values;  // trapezoid cumulative, in [0, 1]
  std::optional<double> tail_exponent;  // pdf ~ c x^-e beyond the grid
  double tail_mass = 0.0;

  /// Builds a table from a pdf callable on [lo, hi] with n nodes,
  /// log-spaced when log_spacing (requires lo > 0). If tail_exp is given
  /// the right tail beyond hi is completed analytically with the fitted
  /// c x^-e model.
  static DensityTable from_density(const std::function<double(double)>& pdf,
                                   double lo, double hi, int n,
                                   bool log_spacing,
                                   std::optional<double> tail_exp = {});

  /// Degenerate point mass.
  static DensityTable point_mass(double at);

  bool degenerate() const { return abscissae.size() == 1; }
  double total_mass() const;

  /// Inverse-CDF draw at uniform u in [0, 1); the right tail is sampled
  /// through the power-law completion. Throws domain_error when the
  /// table mass is not within 1e-4 of one.
  double sample(double u) const;

  /// CDF by interpolation (with tail completion on the right).
  double cdf(double x) const;
};

/// Sup-norm distance between the empirical CDF of the samples and a
/// reference CDF.
double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf);

}  // namespace fracdiff

#endif
