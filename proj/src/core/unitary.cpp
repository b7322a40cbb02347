#include "fewmode/core/unitary.hpp"

#include <algorithm>
#include <set>

#include <unsupported/Eigen/KroneckerProduct>

#include "fewmode/core/error.hpp"

namespace fewmode {
namespace {

std::vector<std::size_t> positions_in(const ModeBasis& basis, std::span<const std::string> targets) {
  std::vector<std::size_t> positions;
  positions.reserve(targets.size());
  for (const auto& target : targets) {
    auto index = basis.find(target);
    if (!index) {
      return {};
    }
    positions.push_back(*index);
  }
  return positions;
}

}  // namespace

double unitarity_deviation(const CMatrix& matrix) {
  if (matrix.rows() != matrix.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  const CMatrix residual = matrix.adjoint() * matrix - CMatrix::Identity(matrix.rows(), matrix.cols());
  return residual.cwiseAbs().rowwise().sum().maxCoeff();
}

UnitaryElement::UnitaryElement(ModeBasis basis, CMatrix matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  const auto dim = static_cast<Eigen::Index>(basis_.dimension());
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw DimensionError("unitary matrix is " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + " for a basis of dimension " +
                         std::to_string(dim));
  }
  if (!matrix_.allFinite()) {
    throw NonUnitaryError("matrix has non-finite entries");
  }
  const double deviation = unitarity_deviation(matrix_);
  if (!(deviation <= kUnitarityRejection)) {
    throw NonUnitaryError("matrix is not unitary: deviation " + std::to_string(deviation));
  }
}

UnitaryElement UnitaryElement::identity(const ModeBasis& basis) {
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  return UnitaryElement(basis, CMatrix::Identity(dim, dim));
}

UnitaryElement UnitaryElement::adjoint() const { return UnitaryElement(basis_, matrix_.adjoint()); }

UnitaryElement UnitaryElement::relabeled(const ModeBasis& basis) const {
  return UnitaryElement(basis, matrix_);
}

CMatrix embed_on_modes(const CMatrix& block, std::span<const std::size_t> positions,
                       std::size_t dimension) {
  if (static_cast<std::size_t>(block.rows()) != positions.size() ||
      static_cast<std::size_t>(block.cols()) != positions.size()) {
    throw DimensionError("block size does not match the number of target modes");
  }
  if (std::set<std::size_t>(positions.begin(), positions.end()).size() != positions.size()) {
    throw BasisError("target modes must be distinct");
  }
  const auto dim = static_cast<Eigen::Index>(dimension);
  CMatrix full = CMatrix::Identity(dim, dim);
  for (std::size_t r = 0; r < positions.size(); ++r) {
    if (positions[r] >= dimension) {
      throw DimensionError("target position out of range");
    }
    for (std::size_t c = 0; c < positions.size(); ++c) {
      full(static_cast<Eigen::Index>(positions[r]), static_cast<Eigen::Index>(positions[c])) =
          block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return full;
}

StateVector apply_unitary(const StateVector& state, const UnitaryElement& u,
                          std::span<const std::string> targets) {
  if (targets.size() != u.dimension()) {
    throw DimensionError("element of dimension " + std::to_string(u.dimension()) + " given " +
                         std::to_string(targets.size()) + " target modes");
  }
  const ModeBasis& basis = state.basis();

  if (auto positions = positions_in(basis, targets); !positions.empty()) {
    const CMatrix full = embed_on_modes(u.matrix(), positions, basis.dimension());
    return StateVector(basis, full * state.amplitudes());
  }

  if (basis.is_bipartite()) {
    const ModeBasis& left = basis.left();
    const ModeBasis& right = basis.right();
    if (auto positions = positions_in(left, targets); !positions.empty()) {
      const CMatrix local = embed_on_modes(u.matrix(), positions, left.dimension());
      const auto dr = static_cast<Eigen::Index>(right.dimension());
      const CMatrix full = Eigen::kroneckerProduct(local, CMatrix::Identity(dr, dr)).eval();
      return StateVector(basis, full * state.amplitudes());
    }
    if (auto positions = positions_in(right, targets); !positions.empty()) {
      const CMatrix local = embed_on_modes(u.matrix(), positions, right.dimension());
      const auto dl = static_cast<Eigen::Index>(left.dimension());
      const CMatrix full = Eigen::kroneckerProduct(CMatrix::Identity(dl, dl), local).eval();
      return StateVector(basis, full * state.amplitudes());
    }
  }
  throw BasisError("target modes are not all within the state basis or one of its factors");
}

StateVector apply_unitary(const StateVector& state, const UnitaryElement& u) {
  return apply_unitary(state, u, u.basis().labels());
}

}  // namespace fewmode
