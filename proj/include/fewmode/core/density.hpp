#pragma once

#include "fewmode/core/mode_basis.hpp"
#include "fewmode/core/state_vector.hpp"
#include "fewmode/core/types.hpp"

namespace fewmode {

/// Hermitian, positive, unit-trace operator on a mode basis.
///
/// Construction checks Hermiticity and trace within kInternalTolerance and
/// eigenvalues ≥ −kInternalTolerance.
class DensityOperator {
 public:
  DensityOperator(ModeBasis basis, CMatrix matrix);

  const ModeBasis& basis() const { return basis_; }
  const CMatrix& matrix() const { return matrix_; }
  std::size_t dimension() const { return basis_.dimension(); }

  Complex element(std::string_view row, std::string_view col) const {
    return matrix_(static_cast<Eigen::Index>(basis_.index_of(row)),
                   static_cast<Eigen::Index>(basis_.index_of(col)));
  }

 private:
  ModeBasis basis_;
  CMatrix matrix_;
};

// |ψ⟩⟨ψ|.
DensityOperator density_of(const StateVector& state);

// Traces out the factor not named by `keep`. Needs a bipartite basis.
DensityOperator partial_trace(const DensityOperator& rho, Factor keep);

// Tr(ρ²).
double purity(const DensityOperator& rho);

// U ρ U† with U acting on the whole basis of rho.
DensityOperator conjugate(const DensityOperator& rho, const CMatrix& unitary);

}  // namespace fewmode
