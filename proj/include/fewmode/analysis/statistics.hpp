#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fewmode::analysis {

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t degrees_of_freedom = 0;
  double p_value = 0.0;
};

/// Pearson goodness of fit of `counts` against `probabilities`.
///
/// Adjacent bins are pooled left to right until each pooled bin expects at
/// least `min_expected` events; a short remainder joins the last pool.
ChiSquareResult chi_square_test(std::span<const std::uint64_t> counts,
                                std::span<const double> probabilities, double min_expected = 5.0);

// Histogram of `values` over bins given by ascending `edges`; values outside
// are dropped.
std::vector<std::uint64_t> histogram(std::span<const double> values, std::span<const double> edges);

/// Interior local maxima of a binned curve, each refined by fitting a
/// parabola through the peak bin and its neighbours. Returns positions in
/// ascending order.
std::vector<double> locate_maxima(std::span<const double> centers, std::span<const double> values);

}  // namespace fewmode::analysis
