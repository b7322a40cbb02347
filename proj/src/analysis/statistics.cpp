#include "fewmode/analysis/statistics.hpp"

#include <algorithm>

#include <boost/math/distributions/chi_squared.hpp>

#include "fewmode/core/error.hpp"

namespace fewmode::analysis {

ChiSquareResult chi_square_test(std::span<const std::uint64_t> counts,
                                std::span<const double> probabilities, double min_expected) {
  if (counts.size() != probabilities.size() || counts.empty()) {
    throw InvalidArgumentError("counts and probabilities must be non-empty and the same size");
  }
  double n = 0.0;
  for (auto c : counts) n += static_cast<double>(c);
  if (n == 0.0) {
    throw InvalidArgumentError("chi-square test needs at least one event");
  }

  std::vector<double> observed;
  std::vector<double> expected;
  double obs = 0.0;
  double exp = 0.0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    obs += static_cast<double>(counts[k]);
    exp += probabilities[k] * n;
    if (exp >= min_expected) {
      observed.push_back(obs);
      expected.push_back(exp);
      obs = 0.0;
      exp = 0.0;
    }
  }
  if (exp > 0.0 || obs > 0.0) {
    if (expected.empty()) {
      observed.push_back(obs);
      expected.push_back(exp);
    } else {
      observed.back() += obs;
      expected.back() += exp;
    }
  }
  if (expected.size() < 2) {
    throw InvalidArgumentError("too few pooled bins for a chi-square test");
  }

  ChiSquareResult result;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const double d = observed[k] - expected[k];
    result.statistic += d * d / expected[k];
  }
  result.degrees_of_freedom = expected.size() - 1;
  const boost::math::chi_squared dist(static_cast<double>(result.degrees_of_freedom));
  result.p_value = boost::math::cdf(boost::math::complement(dist, result.statistic));
  return result;
}

std::vector<std::uint64_t> histogram(std::span<const double> values, std::span<const double> edges) {
  if (edges.size() < 2) {
    throw InvalidArgumentError("histogram needs at least two edges");
  }
  std::vector<std::uint64_t> counts(edges.size() - 1, 0);
  for (double v : values) {
    if (v < edges.front() || v >= edges.back()) {
      continue;
    }
    auto it = std::upper_bound(edges.begin(), edges.end(), v);
    ++counts[static_cast<std::size_t>(it - edges.begin()) - 1];
  }
  return counts;
}

std::vector<double> locate_maxima(std::span<const double> centers, std::span<const double> values) {
  if (centers.size() != values.size()) {
    throw InvalidArgumentError("centers and values must be the same size");
  }
  std::vector<double> peaks;
  for (std::size_t k = 1; k + 1 < values.size(); ++k) {
    // ≥ on the left, > on the right: a flat two-bin top counts once.
    if (!(values[k] >= values[k - 1] && values[k] > values[k + 1])) {
      continue;
    }
    const double left = values[k - 1];
    const double mid = values[k];
    const double right = values[k + 1];
    const double curvature = left - 2.0 * mid + right;
    const double offset = curvature == 0.0 ? 0.0 : 0.5 * (left - right) / curvature;
    const double step = 0.5 * (centers[k + 1] - centers[k - 1]);
    peaks.push_back(centers[k] + offset * step);
  }
  return peaks;
}

}  // namespace fewmode::analysis
