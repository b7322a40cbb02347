#include "fewmode/cli/table_one.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "fewmode/experiments/mach_zehnder.hpp"
#include "fewmode/experiments/rto.hpp"

namespace fewmode::cli {

std::vector<TableOneRow> table_one() {
  constexpr double pi = std::numbers::pi;
  const std::vector<std::pair<double, std::string>> phases{
      {0.0, "0"}, {pi / 4, "pi/4"}, {pi / 2, "pi/2"}, {3 * pi / 4, "3pi/4"}, {pi, "pi"}};

  std::vector<TableOneRow> rows;
  for (const auto& [phase, label] : phases) {
    experiments::MZConfig mz;
    mz.phi1 = optics::PhaseSetting(phase);
    mz.layout = experiments::MZLayout::closed;
    const auto single = experiments::mz_run(mz);
    const auto pair = experiments::rto_joint({optics::PhaseSetting(0.0), optics::PhaseSetting(phase)});
    rows.push_back({phase, label, single.p_d1, single.p_d2, pair.p_a1, pair.p_correlated(),
                    pair.p_anticorrelated()});
  }
  return rows;
}

std::string format_percent(double probability) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", probability * 100.0);
  std::string text(buffer);
  while (text.back() == '0') text.pop_back();
  if (text.back() == '.') text.pop_back();
  if (text == "-0") text = "0";
  return text + "%";
}

std::string render_table_one(const std::vector<TableOneRow>& rows) {
  std::ostringstream out;
  out << "phase | single photon      | each photon of a pair | correlation between photons\n";
  bool off_grid = false;
  for (const auto& row : rows) {
    std::string each = std::abs(row.p_a1 - 0.5) < 1e-12 ? "50-50 1 or 2"
                                                       : format_percent(row.p_a1) + " 1";
    char line[256];
    std::snprintf(line, sizeof line, "%-5s | %-18s | %-21s | %s\n", row.phase_label.c_str(),
                  (format_percent(row.p_port1) + " 1, " + format_percent(row.p_port2) + " 2").c_str(),
                  each.c_str(),
                  (format_percent(row.p_correlated) + " corr, " +
                   format_percent(row.p_anticorrelated) + " anti")
                      .c_str());
    out << line;
    const double quarter = row.phase / (std::numbers::pi / 4);
    if (std::abs(quarter - 1.0) < 1e-9 || std::abs(quarter - 3.0) < 1e-9) off_grid = true;
  }
  if (off_grid) {
    out << "\nNote: at pi/4 and 3pi/4 the Born-rule values are cos^2(phi/2) = 85.36%/14.64%\n"
           "and (1 +/- cos phi)/2 = 85.36%/14.64%. The often-quoted 71%/29% is the amplitude\n"
           "cos(pi/4) ~ 0.71 read as a probability; it does not follow from these formulas.\n";
  }
  return out.str();
}

}  // namespace fewmode::cli
