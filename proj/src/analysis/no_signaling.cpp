#include "fewmode/analysis/no_signaling.hpp"

#include <algorithm>
#include <cmath>

#include "fewmode/core/error.hpp"
#include "fewmode/core/rng.hpp"
#include "fewmode/core/types.hpp"
#include "fewmode/experiments/rto.hpp"

namespace fewmode::analysis {

PhaseGrid PhaseGrid::uniform(std::size_t n) {
  PhaseGrid grid;
  for (std::size_t i = 0; i < n; ++i) {
    const double phi = optics::kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    grid.phi_a.push_back(phi);
    grid.phi_b.push_back(phi);
  }
  return grid;
}

NoSignalingReport no_signaling_report(const PhaseGrid& grid, MarginalMode mode,
                                      std::uint64_t shots, std::uint64_t seed) {
  if (grid.phi_a.empty() || grid.phi_b.empty()) {
    throw InvalidArgumentError("no-signaling grid must not be empty");
  }
  if (mode == MarginalMode::sampled && shots == 0) {
    throw InvalidArgumentError("sampled mode needs at least one shot per point");
  }
  const std::size_t na = grid.phi_a.size();
  const std::size_t nb = grid.phi_b.size();

  // pa[i][j] = P(A1) and pb[i][j] = P(B1) at (phi_a[i], phi_b[j]).
  std::vector<std::vector<double>> pa(na, std::vector<double>(nb));
  std::vector<std::vector<double>> pb(na, std::vector<double>(nb));
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      const experiments::RTOConfig config{optics::PhaseSetting(grid.phi_a[i]),
                                          optics::PhaseSetting(grid.phi_b[j])};
      experiments::JointStats stats;
      if (mode == MarginalMode::analytic) {
        stats = experiments::rto_joint(config);
      } else {
        Rng rng(derive_seed(seed, i * nb + j));
        stats = experiments::rto_sample(config, shots, rng).empirical;
      }
      pa[i][j] = stats.p_a1;
      pb[i][j] = stats.p_b1;
    }
  }

  double deviation = 0.0;
  for (std::size_t i = 0; i < na; ++i) {
    auto [lo, hi] = std::minmax_element(pa[i].begin(), pa[i].end());
    deviation = std::max(deviation, *hi - *lo);
  }
  for (std::size_t j = 0; j < nb; ++j) {
    double lo = pb[0][j];
    double hi = pb[0][j];
    for (std::size_t i = 1; i < na; ++i) {
      lo = std::min(lo, pb[i][j]);
      hi = std::max(hi, pb[i][j]);
    }
    deviation = std::max(deviation, hi - lo);
  }

  NoSignalingReport report;
  report.mode = mode;
  report.points = na * nb;
  report.max_deviation = deviation;
  if (mode == MarginalMode::analytic) {
    report.bound = kInternalTolerance;
  } else {
    // Marginals are 1/2 at every point.
    report.bound = 5.0 * std::sqrt(2.0 * 0.25 / static_cast<double>(shots));
  }
  report.passed = deviation <= report.bound;
  return report;
}

}  // namespace fewmode::analysis
