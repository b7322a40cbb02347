#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fewmode/core/mode_basis.hpp"
#include "fewmode/core/rng.hpp"
#include "fewmode/core/state_vector.hpp"

namespace fewmode {

// Outcome probabilities listed in the order of `basis`.
struct Distribution {
  ModeBasis basis;
  std::vector<double> probabilities;

  double at(std::string_view label) const { return probabilities.at(basis.index_of(label)); }
};

struct OutcomeSample {
  std::string outcome;
  StateVector collapsed;
  double probability;
};

/// p(label) = |⟨label|state⟩|².
///
/// `basis` must carry the same labels as the state's basis; it may list them
/// in another order, and the result follows that order.
Distribution born_probabilities(const StateVector& state, const ModeBasis& basis);
Distribution born_probabilities(const StateVector& state);

// Outcome distribution of measuring only one factor of a bipartite state.
Distribution marginal_probabilities(const StateVector& state, Factor which);

/// Cumulative-sum inversion: returns the first k with u < c_k, where c_k is
/// the running sum of `probabilities` and u is one uniform draw. Each outcome
/// owns the half-open interval [c_{k-1}, c_k). Zero-probability outcomes are
/// never returned.
std::size_t draw_index(std::span<const double> probabilities, Rng& rng);

/// Draws an outcome with the Born rule and collapses the state onto it.
///
/// The collapsed state has exactly zero amplitude on every other label and is
/// renormalized; its global phase follows the surviving amplitude.
OutcomeSample sample_outcome(const StateVector& state, const ModeBasis& basis, Rng& rng);

/// Measures one factor of a bipartite state. Amplitudes on composite labels
/// whose `which` part differs from the outcome are set to zero.
OutcomeSample sample_factor(const StateVector& state, Factor which, Rng& rng);

// Purity of the left reduced state below 1 − kInputTolerance.
bool is_entangled(const StateVector& state);

}  // namespace fewmode
