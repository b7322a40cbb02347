#pragma once

#include <cstdint>
#include <vector>

#include "fewmode/core/rng.hpp"
#include "fewmode/experiments/measurement_record.hpp"

namespace fewmode::experiments {

enum class SlitsOpen { both, slit1, slit2 };

// Far-field two-slit geometry. Lengths in metres.
struct SlitConfig {
  double wavelength = 500e-9;
  double separation = 0.25e-3;
  double width = 0.05e-3;
  double screen_distance = 1.0;
  SlitsOpen slits = SlitsOpen::both;
  double screen_half_width = 12e-3;
  int bins = 240;

  // Throws InvalidArgumentError for non-positive lengths, width ≥ separation
  // or fewer than 16 bins.
  void validate() const;
};

/// Probability mass per screen bin. Bins split [−half_width, half_width]
/// evenly; `mass` sums to 1.
struct IntensityProfile {
  std::vector<double> edges;
  std::vector<double> mass;

  double bin_width() const { return edges[1] - edges[0]; }
  double center(std::size_t bin) const { return 0.5 * (edges[bin] + edges[bin + 1]); }
  std::size_t size() const { return mass.size(); }
};

/// Unnormalized screen intensity |ψ_1(x) + ψ_2(x)|² (or one term alone).
///
/// Each open slit contributes sinc(πwx/λL)·e^{±iπdx/λL}, so both slits give
/// 4·cos²(πdx/λL)·sinc²(πwx/λL).
double slit_intensity(const SlitConfig& config, double x);

IntensityProfile double_slit_intensity(const SlitConfig& config);

struct SlitSample {
  std::vector<double> impacts;
  // Outcome is the bin index of each impact.
  MeasurementRecord record;
};

// Inverse-CDF draws: pick a bin from the profile, then a uniform point in it.
SlitSample double_slit_sample(const SlitConfig& config, std::uint64_t n, Rng& rng);

}  // namespace fewmode::experiments
