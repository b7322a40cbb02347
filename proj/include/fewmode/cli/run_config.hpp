#pragma once

#include <cstdint>
#include <filesystem>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fewmode/core/error.hpp"
#include "fewmode/experiments/double_slit.hpp"
#include "fewmode/experiments/mach_zehnder.hpp"

namespace fewmode::cli {

enum class Experiment { mz, rto, double_slit, cat, bell, table_one };

std::string_view experiment_name(Experiment experiment);

/// Validation failure tied to one configuration field.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// --help or --version; carries the text to print.
class HelpRequested : public std::exception {
 public:
  explicit HelpRequested(std::string text) : text_(std::move(text)) {}
  const char* what() const noexcept override { return text_.c_str(); }

 private:
  std::string text_;
};

/// `steps` points from `start`, evenly spaced, stop excluded.
struct Sweep {
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;

  std::vector<double> points() const;
};

// Largest accepted |phase| in a config, radians.
inline constexpr double kMaxConfigPhase = 4.0 * std::numbers::pi;

struct RunConfig {
  Experiment experiment = Experiment::mz;

  // mz
  experiments::MZLayout layout = experiments::MZLayout::closed;
  double front_fraction = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;

  // rto
  double phi_a = 0.0;
  double phi_b = 0.0;

  // bell: explicit analyzer phases, otherwise the canonical settings
  std::optional<std::vector<double>> bell_settings;  // a, a′, b, b′

  // double-slit
  experiments::SlitConfig slit;
  std::optional<std::filesystem::path> impacts_path;

  // cat: probability that the nucleus has decayed
  double p_decay = 0.5;

  std::optional<Sweep> sweep;
  std::uint64_t shots = 0;  // 0 = analytic
  std::uint64_t seed = 0;
  // "-" is stdout. Unset: <output dir>/<experiment>.csv.
  std::optional<std::filesystem::path> output;
  std::optional<std::filesystem::path> record_path;
};

/// One `key = value` entry of a config file.
struct ConfigEntry {
  std::string key;
  std::string value;
  std::size_t line;
};

/// Flat key-value text: one `key = value` per line, `#` starts a comment,
/// blank lines ignored. Duplicate keys are rejected.
std::vector<ConfigEntry> parse_config_text(std::string_view text);

/// Parses the arguments after the program name.
///
/// `fewmode <experiment> [options]`. `--config FILE` supplies defaults;
/// command-line options override file values. Throws ConfigError naming the
/// offending field, or HelpRequested.
RunConfig parse_and_validate(const std::vector<std::string>& args);

}  // namespace fewmode::cli
