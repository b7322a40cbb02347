#pragma once

#include <utility>
#include <vector>

#include "fewmode/experiments/rto.hpp"

namespace fewmode::analysis {

// [p(A1,B1) + p(A2,B2)] − [p(A1,B2) + p(A2,B1)].
double degree_of_correlation(const experiments::JointStats& joint);

enum class SweepQuantity {
  probability,  // values in [0, 1]
  correlation,  // values in [−1, 1]; mapped to P(correlated) = (1 + E)/2
};

/// Fringe visibility (max − min)/(max + min) of a phase sweep.
///
/// Needs at least 8 points whose evenly stepped span covers a full 2π period.
/// Throws InvalidArgumentError for short, empty or all-zero sweeps.
double visibility(const std::vector<std::pair<double, double>>& sweep,
                  SweepQuantity quantity = SweepQuantity::probability);

}  // namespace fewmode::analysis
