#pragma once

#include <string>
#include <vector>

namespace fewmode::cli {

/// One phase of the single-photon vs two-photon comparison.
struct TableOneRow {
  double phase;
  std::string phase_label;
  double p_port1;       // single photon, closed interferometer: detector 1
  double p_port2;
  double p_a1;          // two-photon: one side's marginal
  double p_correlated;  // two-photon: P(correlated)
  double p_anticorrelated;
};

// Phases 0, π/4, π/2, 3π/4, π, computed by the simulators.
std::vector<TableOneRow> table_one();

// Percentages rounded to two decimals with trailing zeros dropped: 100,
// 85.36, 0.
std::string format_percent(double probability);

// Text table plus a footnote on the π/4 and 3π/4 rows.
std::string render_table_one(const std::vector<TableOneRow>& rows);

}  // namespace fewmode::cli
