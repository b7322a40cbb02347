#include "fewmode/analysis/correlation.hpp"

#include <algorithm>

#include "fewmode/core/error.hpp"
#include "fewmode/optics/optics.hpp"

namespace fewmode::analysis {

double degree_of_correlation(const experiments::JointStats& joint) {
  return (joint.p_a1b1 + joint.p_a2b2) - (joint.p_a1b2 + joint.p_a2b1);
}

double visibility(const std::vector<std::pair<double, double>>& sweep, SweepQuantity quantity) {
  if (sweep.size() < 8) {
    throw InvalidArgumentError("visibility needs at least 8 sweep points");
  }
  auto [lo_phase, hi_phase] = std::minmax_element(
      sweep.begin(), sweep.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  const double n = static_cast<double>(sweep.size());
  const double span = (hi_phase->first - lo_phase->first) * n / (n - 1.0);
  if (span < optics::kTwoPi - 1e-9) {
    throw InvalidArgumentError("visibility sweep does not cover a full period");
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& [phase, value] : sweep) {
    const double v = quantity == SweepQuantity::correlation ? 0.5 * (1.0 + value) : value;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi + lo == 0.0) {
    throw InvalidArgumentError("visibility of an all-zero sweep is undefined");
  }
  return (hi - lo) / (hi + lo);
}

}  // namespace fewmode::analysis
