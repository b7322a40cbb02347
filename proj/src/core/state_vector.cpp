#include "fewmode/core/state_vector.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "fewmode/core/error.hpp"

namespace fewmode {

StateVector::StateVector(ModeBasis basis, CVector amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != basis_.dimension()) {
    throw DimensionError("state has " + std::to_string(amplitudes_.size()) +
                         " amplitudes for a basis of dimension " +
                         std::to_string(basis_.dimension()));
  }
  if (!amplitudes_.allFinite()) {
    throw InvalidArgumentError("state amplitudes must be finite");
  }
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > kInputTolerance) {
    throw InvalidArgumentError("state is not normalized: squared norm " +
                               std::to_string(amplitudes_.squaredNorm()));
  }
}

StateVector make_state(const std::vector<std::pair<std::string, Complex>>& pairs) {
  std::vector<std::string> labels;
  std::vector<Complex> amplitudes;
  labels.reserve(pairs.size());
  amplitudes.reserve(pairs.size());
  for (const auto& [label, amplitude] : pairs) {
    labels.push_back(label);
    amplitudes.push_back(amplitude);
  }
  return make_state(ModeBasis(std::move(labels)), amplitudes);
}

StateVector make_state(const ModeBasis& basis, const std::vector<Complex>& amplitudes) {
  if (amplitudes.size() != basis.dimension()) {
    throw DimensionError("amplitude count does not match basis dimension");
  }
  CVector values = Eigen::Map<const CVector>(amplitudes.data(), static_cast<Eigen::Index>(amplitudes.size()));
  if (!values.allFinite()) {
    throw InvalidArgumentError("state amplitudes must be finite");
  }
  const double squared = values.squaredNorm();
  if (squared == 0.0) {
    throw DegenerateStateError("all amplitudes are zero");
  }
  bool rescaled = false;
  if (std::abs(squared - 1.0) > kInputTolerance) {
    values /= std::sqrt(squared);
    rescaled = true;
  }
  StateVector state(basis, std::move(values));
  state.renormalized_ = rescaled;
  return state;
}

StateVector basis_state(const ModeBasis& basis, std::string_view label) {
  CVector amplitudes = CVector::Zero(static_cast<Eigen::Index>(basis.dimension()));
  amplitudes[static_cast<Eigen::Index>(basis.index_of(label))] = 1.0;
  return StateVector(basis, std::move(amplitudes));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  ModeBasis basis = ModeBasis::product(a.basis(), b.basis());
  CVector amplitudes = Eigen::kroneckerProduct(a.amplitudes(), b.amplitudes()).eval();
  return StateVector(std::move(basis), std::move(amplitudes));
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tolerance) {
  if (!(a.basis() == b.basis())) {
    return false;
  }
  return std::abs(std::abs(a.amplitudes().dot(b.amplitudes())) - 1.0) <= tolerance;
}

}  // namespace fewmode
