#include "fewmode/core/measurement.hpp"

#include <cmath>

#include "fewmode/core/density.hpp"
#include "fewmode/core/error.hpp"

namespace fewmode {

Distribution born_probabilities(const StateVector& state, const ModeBasis& basis) {
  if (basis.dimension() != state.dimension()) {
    throw DimensionError("measurement basis has dimension " + std::to_string(basis.dimension()) +
                         ", state has " + std::to_string(state.dimension()));
  }
  if (!basis.same_label_set(state.basis())) {
    throw BasisError("measurement basis labels do not match the state basis");
  }
  std::vector<double> probabilities(basis.dimension());
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    probabilities[i] = std::norm(state.amplitude(state.basis().index_of(basis.label(i))));
  }
  return {basis, std::move(probabilities)};
}

Distribution born_probabilities(const StateVector& state) {
  return born_probabilities(state, state.basis());
}

Distribution marginal_probabilities(const StateVector& state, Factor which) {
  const ModeBasis& basis = state.basis();
  const ModeBasis& factor = basis.factor(which);
  const std::size_t dr = basis.right().dimension();
  std::vector<double> probabilities(factor.dimension(), 0.0);
  for (std::size_t index = 0; index < basis.dimension(); ++index) {
    const std::size_t part = which == Factor::left ? index / dr : index % dr;
    probabilities[part] += std::norm(state.amplitude(index));
  }
  return {factor, std::move(probabilities)};
}

std::size_t draw_index(std::span<const double> probabilities, Rng& rng) {
  if (probabilities.empty()) {
    throw InvalidArgumentError("cannot draw from an empty distribution");
  }
  const double u = rng.uniform();
  double cumulative = 0.0;
  std::size_t last_positive = probabilities.size();
  for (std::size_t k = 0; k < probabilities.size(); ++k) {
    if (probabilities[k] <= 0.0) {
      continue;
    }
    cumulative += probabilities[k];
    last_positive = k;
    if (u < cumulative) {
      return k;
    }
  }
  if (last_positive == probabilities.size()) {
    throw InvalidArgumentError("distribution has no positive probability");
  }
  // Rounding left the total just below u.
  return last_positive;
}

OutcomeSample sample_outcome(const StateVector& state, const ModeBasis& basis, Rng& rng) {
  const Distribution dist = born_probabilities(state, basis);
  const std::size_t k = draw_index(dist.probabilities, rng);
  const std::size_t index = state.basis().index_of(basis.label(k));

  CVector collapsed = CVector::Zero(static_cast<Eigen::Index>(state.dimension()));
  const Complex amplitude = state.amplitude(index);
  collapsed[static_cast<Eigen::Index>(index)] = amplitude / std::abs(amplitude);
  return {basis.label(k), StateVector(state.basis(), std::move(collapsed)), dist.probabilities[k]};
}

OutcomeSample sample_factor(const StateVector& state, Factor which, Rng& rng) {
  const Distribution dist = marginal_probabilities(state, which);
  const std::size_t k = draw_index(dist.probabilities, rng);

  const ModeBasis& basis = state.basis();
  const std::size_t dr = basis.right().dimension();
  CVector collapsed = CVector::Zero(static_cast<Eigen::Index>(state.dimension()));
  for (std::size_t index = 0; index < basis.dimension(); ++index) {
    const std::size_t part = which == Factor::left ? index / dr : index % dr;
    if (part == k) {
      collapsed[static_cast<Eigen::Index>(index)] = state.amplitude(index);
    }
  }
  collapsed /= collapsed.norm();
  return {dist.basis.label(k), StateVector(basis, std::move(collapsed)), dist.probabilities[k]};
}

bool is_entangled(const StateVector& state) {
  if (!state.basis().is_bipartite()) {
    throw BipartitionError("entanglement test needs a bipartite state");
  }
  return purity(partial_trace(density_of(state), Factor::left)) < 1.0 - kInputTolerance;
}

}  // namespace fewmode
