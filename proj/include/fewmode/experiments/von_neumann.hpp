#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fewmode/core/mode_basis.hpp"
#include "fewmode/core/state_vector.hpp"
#include "fewmode/core/unitary.hpp"

namespace fewmode::experiments {

inline constexpr const char* kReady = "ready";

/// Detector coupled to a measured system.
///
/// `eigenbasis` is the system basis the detector resolves; pointer state
/// D_i answers eigenstate A_i. The pointer space is {ready, D_1..D_n}.
/// `disturbance[i]` is the system state |α_i⟩ left behind by A_i; when empty
/// the detector leaves eigenstates undisturbed.
class DetectorModel {
 public:
  DetectorModel(ModeBasis eigenbasis, std::vector<std::string> pointer_labels,
                std::vector<StateVector> disturbance = {});

  const ModeBasis& eigenbasis() const { return eigenbasis_; }
  // {ready, D_1, ..., D_n}.
  const ModeBasis& pointer_basis() const { return pointer_basis_; }
  const std::string& pointer_for(std::size_t eigen_index) const {
    return pointer_basis_.label(eigen_index + 1);
  }
  bool undisturbing() const { return disturbance_.empty(); }
  // |α_i⟩.
  StateVector disturbed(std::size_t eigen_index) const;

 private:
  ModeBasis eigenbasis_;
  ModeBasis pointer_basis_;
  std::vector<StateVector> disturbance_;
};

/// |ψ⟩|ready⟩ → Σ_i a_i |α_i⟩|D_i⟩ on eigenbasis ⊗ pointer basis.
///
/// `system` must be written on the detector's eigenbasis (any label order).
StateVector von_neumann_measure(const StateVector& system, const DetectorModel& detector);

/// Unitary on eigenbasis ⊗ pointer basis that swaps ready ↔ D_i when the
/// system is in A_i. Applied to |ψ⟩|ready⟩ it gives von_neumann_measure's
/// result. Only defined for an undisturbing detector.
UnitaryElement measurement_unitary(const DetectorModel& detector);

/// Joint and conditional outcome probabilities of a bipartite state.
struct CorrelationTable {
  std::vector<std::string> rows;     // labels of the left factor
  std::vector<std::string> columns;  // labels of the right factor
  std::vector<std::vector<double>> joint;
  std::vector<double> row_marginal;
  // P(column | row); empty when P(row) = 0.
  std::vector<std::vector<std::optional<double>>> conditional;

  double joint_at(std::string_view row, std::string_view column) const;
  std::optional<double> conditional_at(std::string_view row, std::string_view column) const;

  // (row, column) pairs with P(column | row) = 1 within `tolerance`: the
  // correlations the state superposes.
  std::vector<std::pair<std::string, std::string>> perfect_correlations(
      double tolerance = 1e-12) const;
};

/// Rows and columns are taken from `rows` / `columns`, which must be labels of
/// the state's left and right factors (a subset is allowed). Marginals are
/// always over the full factor.
CorrelationTable correlation_table(const StateVector& joint, const std::vector<std::string>& rows,
                                   const std::vector<std::string>& columns);

}  // namespace fewmode::experiments
