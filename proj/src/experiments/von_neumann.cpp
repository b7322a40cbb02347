#include "fewmode/experiments/von_neumann.hpp"

#include <algorithm>

#include <unsupported/Eigen/KroneckerProduct>

#include "fewmode/core/error.hpp"
#include "fewmode/core/measurement.hpp"

namespace fewmode::experiments {
namespace {

ModeBasis make_pointer_basis(const std::vector<std::string>& pointer_labels) {
  std::vector<std::string> labels;
  labels.reserve(pointer_labels.size() + 1);
  labels.emplace_back(kReady);
  labels.insert(labels.end(), pointer_labels.begin(), pointer_labels.end());
  return ModeBasis(std::move(labels));
}

std::size_t row_index(const std::vector<std::string>& labels, std::string_view label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw BasisError("label '" + std::string(label) + "' is not in the table");
  }
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

DetectorModel::DetectorModel(ModeBasis eigenbasis, std::vector<std::string> pointer_labels,
                             std::vector<StateVector> disturbance)
    : eigenbasis_(std::move(eigenbasis)),
      pointer_basis_(make_pointer_basis(pointer_labels)),
      disturbance_(std::move(disturbance)) {
  if (pointer_labels.size() != eigenbasis_.dimension()) {
    throw DimensionError("detector needs one pointer state per eigenstate");
  }
  if (!disturbance_.empty()) {
    if (disturbance_.size() != eigenbasis_.dimension()) {
      throw DimensionError("disturbance map needs one state per eigenstate");
    }
    for (const auto& alpha : disturbance_) {
      if (!(alpha.basis() == eigenbasis_)) {
        throw BasisError("disturbed states must live on the detector eigenbasis");
      }
    }
  }
}

StateVector DetectorModel::disturbed(std::size_t eigen_index) const {
  if (disturbance_.empty()) {
    return basis_state(eigenbasis_, eigenbasis_.label(eigen_index));
  }
  return disturbance_.at(eigen_index);
}

StateVector von_neumann_measure(const StateVector& system, const DetectorModel& detector) {
  const ModeBasis& eigen = detector.eigenbasis();
  if (system.dimension() != eigen.dimension()) {
    throw DimensionError("system dimension " + std::to_string(system.dimension()) +
                         " does not match detector dimension " +
                         std::to_string(eigen.dimension()));
  }
  if (!system.basis().same_label_set(eigen)) {
    throw BasisError("system is not written on the detector eigenbasis");
  }
  const ModeBasis joint = ModeBasis::product(eigen, detector.pointer_basis());
  const auto pointer_dim = static_cast<Eigen::Index>(detector.pointer_basis().dimension());

  CVector out = CVector::Zero(static_cast<Eigen::Index>(joint.dimension()));
  for (std::size_t i = 0; i < eigen.dimension(); ++i) {
    const Complex a = system.amplitude(eigen.label(i));
    if (a == Complex(0.0)) {
      continue;
    }
    CVector pointer = CVector::Zero(pointer_dim);
    pointer[static_cast<Eigen::Index>(i + 1)] = 1.0;
    out += a * Eigen::kroneckerProduct(detector.disturbed(i).amplitudes(), pointer).eval();
  }
  return StateVector(joint, std::move(out));
}

UnitaryElement measurement_unitary(const DetectorModel& detector) {
  if (!detector.undisturbing()) {
    throw InvalidArgumentError("measurement unitary is only built for undisturbing detectors");
  }
  const ModeBasis joint = ModeBasis::product(detector.eigenbasis(), detector.pointer_basis());
  const std::size_t pointer_dim = detector.pointer_basis().dimension();
  const auto dim = static_cast<Eigen::Index>(joint.dimension());
  CMatrix u = CMatrix::Identity(dim, dim);
  for (std::size_t i = 0; i < detector.eigenbasis().dimension(); ++i) {
    const auto ready = static_cast<Eigen::Index>(i * pointer_dim);
    const auto click = static_cast<Eigen::Index>(i * pointer_dim + i + 1);
    u(ready, ready) = 0.0;
    u(click, click) = 0.0;
    u(ready, click) = 1.0;
    u(click, ready) = 1.0;
  }
  return UnitaryElement(joint, std::move(u));
}

double CorrelationTable::joint_at(std::string_view row, std::string_view column) const {
  return joint.at(row_index(rows, row)).at(row_index(columns, column));
}

std::optional<double> CorrelationTable::conditional_at(std::string_view row,
                                                       std::string_view column) const {
  return conditional.at(row_index(rows, row)).at(row_index(columns, column));
}

std::vector<std::pair<std::string, std::string>> CorrelationTable::perfect_correlations(
    double tolerance) const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const auto& c = conditional[i][j];
      if (c && std::abs(*c - 1.0) <= tolerance) {
        out.emplace_back(rows[i], columns[j]);
      }
    }
  }
  return out;
}

CorrelationTable correlation_table(const StateVector& joint, const std::vector<std::string>& rows,
                                   const std::vector<std::string>& columns) {
  const ModeBasis& basis = joint.basis();
  const ModeBasis& left = basis.left();
  const ModeBasis& right = basis.right();
  const Distribution left_marginal = marginal_probabilities(joint, Factor::left);

  CorrelationTable table;
  table.rows = rows;
  table.columns = columns;
  for (const auto& row : rows) {
    const std::size_t i = left.index_of(row);
    const double p_row = left_marginal.probabilities[i];
    std::vector<double> joint_row;
    std::vector<std::optional<double>> conditional_row;
    for (const auto& column : columns) {
      const std::size_t j = right.index_of(column);
      const double p = std::norm(joint.amplitude(i * right.dimension() + j));
      joint_row.push_back(p);
      conditional_row.push_back(p_row > 0.0 ? std::optional<double>(p / p_row) : std::nullopt);
    }
    table.joint.push_back(std::move(joint_row));
    table.conditional.push_back(std::move(conditional_row));
    table.row_marginal.push_back(p_row);
  }
  return table;
}

}  // namespace fewmode::experiments
