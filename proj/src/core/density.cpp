#include "fewmode/core/density.hpp"

#include <Eigen/Eigenvalues>

#include "fewmode/core/error.hpp"

namespace fewmode {

DensityOperator::DensityOperator(ModeBasis basis, CMatrix matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  const auto dim = static_cast<Eigen::Index>(basis_.dimension());
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw DimensionError("density matrix does not match basis dimension");
  }
  if (!matrix_.allFinite()) {
    throw InvalidDensityError("density matrix has non-finite entries");
  }
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kInternalTolerance) {
    throw InvalidDensityError("density matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex(1.0)) > kInternalTolerance) {
    throw InvalidDensityError("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kInternalTolerance) {
    throw InvalidDensityError("density matrix has a negative eigenvalue");
  }
}

DensityOperator density_of(const StateVector& state) {
  const CVector& psi = state.amplitudes();
  return DensityOperator(state.basis(), psi * psi.adjoint());
}

DensityOperator partial_trace(const DensityOperator& rho, Factor keep) {
  const ModeBasis& basis = rho.basis();
  if (!basis.is_bipartite()) {
    throw BipartitionError("partial trace needs a bipartite basis");
  }
  const auto dl = static_cast<Eigen::Index>(basis.left().dimension());
  const auto dr = static_cast<Eigen::Index>(basis.right().dimension());
  const CMatrix& m = rho.matrix();

  if (keep == Factor::left) {
    CMatrix reduced = CMatrix::Zero(dl, dl);
    for (Eigen::Index k = 0; k < dr; ++k) {
      // Rows/columns i*dr + k for i in [0, dl).
      reduced += m(Eigen::seqN(k, dl, dr), Eigen::seqN(k, dl, dr));
    }
    return DensityOperator(basis.left(), std::move(reduced));
  }
  CMatrix reduced = CMatrix::Zero(dr, dr);
  for (Eigen::Index k = 0; k < dl; ++k) {
    reduced += m.block(k * dr, k * dr, dr, dr);
  }
  return DensityOperator(basis.right(), std::move(reduced));
}

double purity(const DensityOperator& rho) {
  // Tr(ρ²) = Σ |ρ_ij|² for Hermitian ρ.
  return rho.matrix().cwiseAbs2().sum();
}

DensityOperator conjugate(const DensityOperator& rho, const CMatrix& unitary) {
  return DensityOperator(rho.basis(), unitary * rho.matrix() * unitary.adjoint());
}

}  // namespace fewmode
