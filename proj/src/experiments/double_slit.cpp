#include "fewmode/experiments/double_slit.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "fewmode/core/error.hpp"
#include "fewmode/core/measurement.hpp"

namespace fewmode::experiments {
namespace {

constexpr int kPanelsPerBin = 32;  // Simpson panels, even

double sinc(double u) { return u == 0.0 ? 1.0 : std::sin(u) / u; }

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void SlitConfig::validate() const {
  if (!positive_finite(wavelength)) throw InvalidArgumentError("wavelength must be positive");
  if (!positive_finite(separation)) throw InvalidArgumentError("slit separation must be positive");
  if (!positive_finite(width)) throw InvalidArgumentError("slit width must be positive");
  if (!positive_finite(screen_distance)) {
    throw InvalidArgumentError("screen distance must be positive");
  }
  if (!positive_finite(screen_half_width)) {
    throw InvalidArgumentError("screen half-width must be positive");
  }
  if (width >= separation) {
    throw InvalidArgumentError("slit width must be smaller than the separation");
  }
  if (bins < 16) throw InvalidArgumentError("need at least 16 bins");
}

double slit_intensity(const SlitConfig& config, double x) {
  const double scale = std::numbers::pi * x / (config.wavelength * config.screen_distance);
  const double envelope = sinc(scale * config.width);
  const double half_phase = scale * config.separation;
  std::complex<double> psi = 0.0;
  if (config.slits != SlitsOpen::slit2) {
    psi += envelope * std::polar(1.0, half_phase);
  }
  if (config.slits != SlitsOpen::slit1) {
    psi += envelope * std::polar(1.0, -half_phase);
  }
  return std::norm(psi);
}

IntensityProfile double_slit_intensity(const SlitConfig& config) {
  config.validate();
  const auto bins = static_cast<std::size_t>(config.bins);
  const double half = config.screen_half_width;
  const double width = 2.0 * half / static_cast<double>(bins);

  IntensityProfile profile;
  profile.edges.resize(bins + 1);
  for (std::size_t k = 0; k <= bins; ++k) {
    // Mirror-symmetric edges: compute from whichever end is nearer.
    profile.edges[k] = 2 * k <= bins ? -half + static_cast<double>(k) * width
                                     : half - static_cast<double>(bins - k) * width;
  }

  profile.mass.resize(bins);
  double total = 0.0;
  const double h = width / kPanelsPerBin;
  for (std::size_t k = 0; k < bins; ++k) {
    const double a = profile.edges[k];
    double sum = slit_intensity(config, a) + slit_intensity(config, profile.edges[k + 1]);
    for (int j = 1; j < kPanelsPerBin; ++j) {
      sum += (j % 2 == 1 ? 4.0 : 2.0) * slit_intensity(config, a + j * h);
    }
    profile.mass[k] = sum * h / 3.0;
    total += profile.mass[k];
  }
  if (!(total > 0.0)) {
    throw InvalidArgumentError("screen receives no intensity");
  }
  for (double& m : profile.mass) {
    m /= total;
  }
  return profile;
}

SlitSample double_slit_sample(const SlitConfig& config, std::uint64_t n, Rng& rng) {
  if (n == 0) {
    throw InvalidArgumentError("need at least one impact");
  }
  const IntensityProfile profile = double_slit_intensity(config);
  SlitSample sample;
  sample.impacts.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::size_t bin = draw_index(profile.mass, rng);
    const double x = profile.edges[bin] + rng.uniform() * (profile.edges[bin + 1] - profile.edges[bin]);
    sample.impacts.push_back(x);
    sample.record.append(std::to_string(bin), rng.seed());
  }
  return sample;
}

}  // namespace fewmode::experiments
