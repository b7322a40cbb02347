#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "fewmode/cli/run_config.hpp"
#include "fewmode/experiments/measurement_record.hpp"

namespace fewmode::cli {

// Environment variable naming the directory for outputs without -o.
inline constexpr const char* kOutputDirEnv = "FEWMODE_OUTPUT_DIR";

// A numerical invariant failed while producing output.
class InvariantError : public Error {
 public:
  using Error::Error;
};

struct RunOutput {
  std::string table;  // CSV, or the rendered table for table-one
  std::optional<experiments::MeasurementRecord> record;
  std::optional<std::string> impacts;  // double-slit impacts CSV
};

// Fixed-point with 12 decimals; negative zero prints as zero.
std::string format_number(double value);

/// Runs the configured experiment in memory.
///
/// Every probability row is checked to sum to 1 within 1e-9 before it is
/// emitted; a breach throws InvariantError.
RunOutput execute(const RunConfig& config);

// Where the main output goes when no -o is given.
std::filesystem::path default_output_path(Experiment experiment);

/// execute() plus writing files. Returns the process exit code: 0 on
/// success, 2 for invariant breaches, 3 for I/O failures. Messages go to
/// `diagnostics`; stdout output goes to `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& diagnostics);

}  // namespace fewmode::cli
