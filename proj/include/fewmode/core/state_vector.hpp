#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fewmode/core/mode_basis.hpp"
#include "fewmode/core/types.hpp"

namespace fewmode {

/// Normalized pure state over a mode basis.
///
/// Construction checks that the amplitudes have unit norm within
/// kInputTolerance. Global phase is kept as given.
class StateVector {
 public:
  StateVector(ModeBasis basis, CVector amplitudes);

  const ModeBasis& basis() const { return basis_; }
  const CVector& amplitudes() const { return amplitudes_; }
  std::size_t dimension() const { return basis_.dimension(); }

  Complex amplitude(std::string_view label) const { return amplitudes_[basis_.index_of(label)]; }
  Complex amplitude(std::size_t index) const { return amplitudes_[static_cast<Eigen::Index>(index)]; }

  double norm() const { return amplitudes_.norm(); }

  // True when make_state had to rescale its input.
  bool renormalized() const { return renormalized_; }

 private:
  friend StateVector make_state(const ModeBasis& basis, const std::vector<Complex>& amplitudes);

  ModeBasis basis_;
  CVector amplitudes_;
  bool renormalized_ = false;
};

// Builds a state from (label, amplitude) pairs in the given order. Inputs off
// unit norm by more than kInputTolerance are rescaled and flagged.
StateVector make_state(const std::vector<std::pair<std::string, Complex>>& pairs);

// Amplitudes given in basis order; same normalization rules as above.
StateVector make_state(const ModeBasis& basis, const std::vector<Complex>& amplitudes);

StateVector basis_state(const ModeBasis& basis, std::string_view label);

// Product state on ModeBasis::product(a.basis(), b.basis()).
StateVector tensor(const StateVector& a, const StateVector& b);

// |⟨a|b⟩| ≈ 1, i.e. equality up to a global phase.
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tolerance = kInternalTolerance);

}  // namespace fewmode
