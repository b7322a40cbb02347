#pragma once

#include <span>
#include <string>
#include <vector>

#include "fewmode/core/mode_basis.hpp"
#include "fewmode/core/state_vector.hpp"
#include "fewmode/core/types.hpp"

namespace fewmode {

/// Unitary matrix acting on a named set of modes.
///
/// Construction rejects matrices with ‖U†U − I‖∞ > kUnitarityRejection.
class UnitaryElement {
 public:
  UnitaryElement(ModeBasis basis, CMatrix matrix);

  static UnitaryElement identity(const ModeBasis& basis);

  const ModeBasis& basis() const { return basis_; }
  const CMatrix& matrix() const { return matrix_; }
  std::size_t dimension() const { return basis_.dimension(); }

  UnitaryElement adjoint() const;
  // Same matrix on differently named modes. Dimensions must agree.
  UnitaryElement relabeled(const ModeBasis& basis) const;

 private:
  ModeBasis basis_;
  CMatrix matrix_;
};

// Max row sum of |U†U − I|.
double unitarity_deviation(const CMatrix& matrix);

// Dimension-`dimension` matrix acting as `block` on the rows/columns listed in
// `positions` and as the identity everywhere else.
CMatrix embed_on_modes(const CMatrix& block, std::span<const std::size_t> positions,
                       std::size_t dimension);

/// Applies `u` to the modes named in `targets`, identity elsewhere.
///
/// targets[k] is the mode acted on by row/column k of u; only the count has to
/// match u's basis. Targets may name modes of the state's own basis, or, for a
/// bipartite state, modes of one factor (the element then acts locally on that
/// factor).
StateVector apply_unitary(const StateVector& state, const UnitaryElement& u,
                          std::span<const std::string> targets);

// Targets are u's own labels.
StateVector apply_unitary(const StateVector& state, const UnitaryElement& u);

}  // namespace fewmode
