#pragma once

#include <cstdint>
#include <vector>

namespace fewmode::analysis {

enum class MarginalMode { analytic, sampled };

struct PhaseGrid {
  std::vector<double> phi_a;
  std::vector<double> phi_b;

  // n evenly spaced phases on [0, 2π) for each side.
  static PhaseGrid uniform(std::size_t n);
};

struct NoSignalingReport {
  MarginalMode mode = MarginalMode::analytic;
  std::size_t points = 0;
  // Largest spread of a local marginal as the remote phase varies.
  double max_deviation = 0.0;
  // Allowed spread: kInternalTolerance (analytic) or 5σ for the difference of
  // two binomial frequencies (sampled).
  double bound = 0.0;
  bool passed = false;
};

/// Checks that P(A1) does not move with φ_B and P(B1) does not move with φ_A
/// over every grid point of the two-photon experiment. Sampled mode draws
/// `shots` coincidences per point with seed derive_seed(seed, point index).
NoSignalingReport no_signaling_report(const PhaseGrid& grid,
                                      MarginalMode mode = MarginalMode::analytic,
                                      std::uint64_t shots = 0, std::uint64_t seed = 0);

}  // namespace fewmode::analysis
