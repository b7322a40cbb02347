#include "fewmode/cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

namespace fewmode::cli {
namespace {

struct OptionSpec {
  std::string key;
  bool flag;
  std::string help;
};

struct ExperimentSpec {
  Experiment experiment;
  std::string name;
  std::string description;
  std::vector<OptionSpec> options;
};

const std::vector<OptionSpec>& common_sampling_options() {
  static const std::vector<OptionSpec> options{
      {"shots", false, "Monte Carlo shots per point (0 = analytic)"},
      {"seed", false, "64-bit generator seed"},
      {"record", false, "write the measurement record to this file (needs --shots)"},
  };
  return options;
}

const OptionSpec kSweep{"sweep", false, "phase-difference sweep START:STOP:STEPS (stop excluded)"};
const OptionSpec kOutput{"output", false, "output file, '-' for stdout"};

std::vector<ExperimentSpec> build_specs() {
  auto with_common = [](std::vector<OptionSpec> own, bool sweep) {
    if (sweep) own.push_back(kSweep);
    const auto& common = common_sampling_options();
    own.insert(own.end(), common.begin(), common.end());
    own.push_back(kOutput);
    return own;
  };
  return {
      {Experiment::mz, "mz", "Mach-Zehnder interferometer",
       with_common({{"open", true, "no second beam splitter"},
                    {"closed", true, "second beam splitter in place (default)"},
                    {"delayed", false, "insert the second splitter with this front fraction in [0,1]"},
                    {"phi1", false, "phase on arm 1 (radians)"},
                    {"phi2", false, "phase on arm 2 (radians)"}},
                   true)},
      {Experiment::rto, "rto", "two-photon momentum-entangled interferometer",
       with_common({{"phi-a", false, "phase on photon A (radians)"},
                    {"phi-b", false, "phase on photon B (radians)"}},
                   true)},
      {Experiment::double_slit, "double-slit", "far-field double-slit screen profile",
       with_common({{"wavelength", false, "wavelength (m)"},
                    {"separation", false, "slit separation (m)"},
                    {"width", false, "slit width (m)"},
                    {"distance", false, "slit-to-screen distance (m)"},
                    {"slits", false, "open slits: both, 1 or 2"},
                    {"half-width", false, "screen half-width (m)"},
                    {"bins", false, "number of screen bins (>= 16)"},
                    {"impacts", false, "write sampled impact positions to this file"}},
                   false)},
      {Experiment::cat, "cat", "system-detector correlation table after a measurement",
       with_common({{"p-decay", false, "probability of the decayed branch"}}, false)},
      {Experiment::bell, "bell", "CHSH test on the two-photon experiment",
       with_common({{"canonical", true, "a=0, a'=pi/2, b=pi/4, b'=3pi/4 (default)"},
                    {"a", false, "analyzer phase a"},
                    {"a-prime", false, "analyzer phase a'"},
                    {"b", false, "analyzer phase b"},
                    {"b-prime", false, "analyzer phase b'"}},
                   true)},
      {Experiment::table_one, "table-one", "single-photon vs two-photon comparison table",
       {kOutput}},
  };
}

const std::vector<ExperimentSpec>& specs() {
  static const std::vector<ExperimentSpec> all = build_specs();
  return all;
}

const ExperimentSpec* find_spec(std::string_view name) {
  for (const auto& spec : specs()) {
    if (spec.name == name) return &spec;
  }
  return nullptr;
}

const OptionSpec* find_option(const ExperimentSpec& spec, std::string_view key) {
  for (const auto& option : spec.options) {
    if (option.key == key) return &option;
  }
  return nullptr;
}

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

double parse_double(const std::string& field, const std::string& text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError(field, "malformed number '" + text + "'");
  }
  return value;
}

std::uint64_t parse_u64(const std::string& field, const std::string& text) {
  std::uint64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(field, "expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

double parse_phase(const std::string& field, const std::string& text) {
  const double value = parse_double(field, text);
  if (std::abs(value) > kMaxConfigPhase) {
    throw ConfigError(field, "phase " + text + " is outside [-4pi, 4pi]");
  }
  return value;
}

bool parse_bool(const std::string& field, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError(field, "expected true or false, got '" + text + "'");
}

Sweep parse_sweep(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw ConfigError("sweep", "expected START:STOP:STEPS, got '" + text + "'");
  }
  Sweep sweep;
  sweep.start = parse_phase("sweep", text.substr(0, first));
  sweep.stop = parse_phase("sweep", text.substr(first + 1, second - first - 1));
  const std::string steps = text.substr(second + 1);
  const std::uint64_t n = parse_u64("sweep", steps);
  if (n < 1 || n > 1'000'000) {
    throw ConfigError("sweep", "steps must be between 1 and 1000000");
  }
  sweep.steps = static_cast<int>(n);
  if (sweep.stop < sweep.start) {
    throw ConfigError("sweep", "stop must not be below start");
  }
  return sweep;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("config", "cannot read config file '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

using Settings = std::map<std::string, std::string>;

RunConfig build_config(const ExperimentSpec& spec, const Settings& settings) {
  RunConfig config;
  config.experiment = spec.experiment;
  auto get = [&](const std::string& key) -> const std::string* {
    auto it = settings.find(key);
    return it == settings.end() ? nullptr : &it->second;
  };
  auto flag = [&](const std::string& key) {
    const std::string* v = get(key);
    return v != nullptr && parse_bool(key, *v);
  };

  if (auto v = get("sweep")) config.sweep = parse_sweep(*v);
  if (auto v = get("shots")) config.shots = parse_u64("shots", *v);
  if (auto v = get("seed")) config.seed = parse_u64("seed", *v);
  if (auto v = get("output")) {
    if (v->empty()) throw ConfigError("output", "path must not be empty");
    config.output = *v;
  }
  if (auto v = get("record")) {
    if (config.shots == 0) throw ConfigError("record", "a measurement record needs --shots > 0");
    config.record_path = *v;
  }

  switch (spec.experiment) {
    case Experiment::mz: {
      const int chosen = (flag("open") ? 1 : 0) + (flag("closed") ? 1 : 0) +
                         (get("delayed") != nullptr ? 1 : 0);
      if (chosen > 1) {
        throw ConfigError("layout", "--open, --closed and --delayed are mutually exclusive");
      }
      if (flag("open")) config.layout = experiments::MZLayout::open;
      if (auto v = get("delayed")) {
        config.layout = experiments::MZLayout::delayed;
        config.front_fraction = parse_double("delayed", *v);
        if (config.front_fraction < 0.0 || config.front_fraction > 1.0) {
          throw ConfigError("delayed", "front fraction must lie in [0, 1]");
        }
      }
      if (auto v = get("phi1")) config.phi1 = parse_phase("phi1", *v);
      if (auto v = get("phi2")) config.phi2 = parse_phase("phi2", *v);
      break;
    }
    case Experiment::rto:
      if (auto v = get("phi-a")) config.phi_a = parse_phase("phi-a", *v);
      if (auto v = get("phi-b")) config.phi_b = parse_phase("phi-b", *v);
      break;
    case Experiment::bell: {
      const std::vector<std::string> keys{"a", "a-prime", "b", "b-prime"};
      const auto given = std::count_if(keys.begin(), keys.end(),
                                       [&](const std::string& k) { return get(k) != nullptr; });
      if (given > 0 && flag("canonical")) {
        throw ConfigError("canonical", "--canonical excludes explicit analyzer phases");
      }
      if (given > 0 && config.sweep) {
        throw ConfigError("sweep", "a bell sweep derives its settings; drop explicit phases");
      }
      if (given > 0 && given < 4) {
        throw ConfigError("a", "give all four of --a, --a-prime, --b, --b-prime");
      }
      if (given == 4) {
        std::vector<double> phases;
        for (const auto& k : keys) phases.push_back(parse_phase(k, *get(k)));
        config.bell_settings = std::move(phases);
      }
      break;
    }
    case Experiment::double_slit: {
      auto& slit = config.slit;
      if (auto v = get("wavelength")) slit.wavelength = parse_double("wavelength", *v);
      if (auto v = get("separation")) slit.separation = parse_double("separation", *v);
      if (auto v = get("width")) slit.width = parse_double("width", *v);
      if (auto v = get("distance")) slit.screen_distance = parse_double("distance", *v);
      if (auto v = get("half-width")) slit.screen_half_width = parse_double("half-width", *v);
      if (auto v = get("bins")) {
        const std::uint64_t bins = parse_u64("bins", *v);
        if (bins > 1'000'000) throw ConfigError("bins", "too many bins");
        slit.bins = static_cast<int>(bins);
      }
      if (auto v = get("slits")) {
        if (*v == "both") {
          slit.slits = experiments::SlitsOpen::both;
        } else if (*v == "1") {
          slit.slits = experiments::SlitsOpen::slit1;
        } else if (*v == "2") {
          slit.slits = experiments::SlitsOpen::slit2;
        } else {
          throw ConfigError("slits", "expected both, 1 or 2, got '" + *v + "'");
        }
      }
      if (auto v = get("impacts")) {
        if (config.shots == 0) throw ConfigError("impacts", "impacts need --shots > 0");
        config.impacts_path = *v;
      }
      try {
        slit.validate();
      } catch (const Error& e) {
        throw ConfigError("geometry", e.what());
      }
      break;
    }
    case Experiment::cat:
      if (auto v = get("p-decay")) {
        config.p_decay = parse_double("p-decay", *v);
        if (config.p_decay < 0.0 || config.p_decay > 1.0) {
          throw ConfigError("p-decay", "probability must lie in [0, 1]");
        }
      }
      break;
    case Experiment::table_one:
      break;
  }
  return config;
}

}  // namespace

std::string_view experiment_name(Experiment experiment) {
  for (const auto& spec : specs()) {
    if (spec.experiment == experiment) return spec.name;
  }
  return "unknown";
}

std::vector<double> Sweep::points() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  const double step = (stop - start) / steps;
  for (int i = 0; i < steps; ++i) {
    out.push_back(start + step * i);
  }
  return out;
}

std::vector<ConfigEntry> parse_config_text(std::string_view text) {
  std::vector<ConfigEntry> entries;
  std::set<std::string> seen;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    ++line_number;
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::string content = trim(line);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    const std::string where = "line " + std::to_string(line_number);
    if (eq == std::string::npos) {
      throw ConfigError("config", where + ": expected 'key = value'");
    }
    std::string key = trim(std::string_view(content).substr(0, eq));
    std::string value = trim(std::string_view(content).substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config", where + ": missing key");
    }
    if (!seen.insert(key).second) {
      throw ConfigError(key, where + ": duplicate key");
    }
    entries.push_back({std::move(key), std::move(value), line_number});
  }
  return entries;
}

RunConfig parse_and_validate(const std::vector<std::string>& args) {
  CLI::App app{"Few-mode quantum interference and entanglement experiments", "fewmode"};
  app.require_subcommand(0, 1);

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, bool>> flags;
  std::map<std::string, std::string> config_paths;
  std::map<std::string, CLI::App*> subcommands;

  for (const auto& spec : specs()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.description);
    subcommands[spec.name] = sub;
    sub->add_option("--config", config_paths[spec.name], "flat key = value defaults file");
    for (const auto& option : spec.options) {
      std::string names = "--" + option.key;
      if (option.key == "output") names = "-o,--output";
      if (option.flag) {
        sub->add_flag(names, flags[spec.name][option.key], option.help);
      } else {
        sub->add_option(names, values[spec.name][option.key], option.help);
      }
    }
  }

  if (args.empty()) {
    throw HelpRequested(app.help());
  }
  if (args.front().rfind("-", 0) != 0 && find_spec(args.front()) == nullptr) {
    throw ConfigError("experiment", "unknown experiment '" + args.front() + "'");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    for (const auto& [name, sub] : subcommands) {
      if (sub->parsed()) throw HelpRequested(sub->help());
    }
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw ConfigError("arguments", e.what());
  }

  const ExperimentSpec* spec = nullptr;
  for (const auto& candidate : specs()) {
    if (subcommands[candidate.name]->parsed()) spec = &candidate;
  }
  if (spec == nullptr) {
    throw ConfigError("experiment", "no experiment given");
  }
  CLI::App* sub = subcommands[spec->name];

  Settings settings;
  if (sub->count("--config") > 0) {
    for (auto& entry : parse_config_text(read_file(config_paths[spec->name]))) {
      if (entry.key == "experiment") {
        if (entry.value != spec->name) {
          throw ConfigError("experiment", "config file is for '" + entry.value + "', not '" +
                                              spec->name + "'");
        }
        continue;
      }
      if (find_option(*spec, entry.key) == nullptr) {
        throw ConfigError(entry.key, "unknown option for " + spec->name);
      }
      settings[entry.key] = entry.value;
    }
  }

  // Any layout flag on the command line replaces the file's layout.
  if (spec->experiment == Experiment::mz &&
      (sub->count("--open") + sub->count("--closed") + sub->count("--delayed")) > 0) {
    settings.erase("open");
    settings.erase("closed");
    settings.erase("delayed");
  }
  for (const auto& option : spec->options) {
    if (sub->count("--" + option.key) == 0) continue;
    settings[option.key] =
        option.flag ? (flags[spec->name][option.key] ? "true" : "false") : values[spec->name][option.key];
  }

  return build_config(*spec, settings);
}

}  // namespace fewmode::cli
