#include "fewmode/cli/runner.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fewmode/analysis/bell.hpp"
#include "fewmode/analysis/statistics.hpp"
#include "fewmode/cli/table_one.hpp"
#include "fewmode/core/measurement.hpp"
#include "fewmode/experiments/double_slit.hpp"
#include "fewmode/experiments/mach_zehnder.hpp"
#include "fewmode/experiments/rto.hpp"
#include "fewmode/experiments/von_neumann.hpp"

namespace fewmode::cli {
namespace {

using experiments::MeasurementRecord;
using optics::PhaseSetting;

constexpr double kRowSumTolerance = 1e-9;

void check_row_sum(double sum, std::string_view what) {
  if (!(std::abs(sum - 1.0) <= kRowSumTolerance)) {
    throw InvariantError(std::string(what) + " probabilities sum to " + format_number(sum));
  }
}

// Copies entries into `into`, keeping each entry's seed.
void append_all(MeasurementRecord& into, const MeasurementRecord& from) {
  for (const auto& entry : from.entries()) {
    into.append(entry.outcome, entry.seed);
  }
}

std::vector<double> sweep_points(const RunConfig& config, double fallback) {
  return config.sweep ? config.sweep->points() : std::vector<double>{fallback};
}

RunOutput run_mz(const RunConfig& config) {
  std::ostringstream csv;
  csv << "phase_diff,p_d1,p_d2\n";
  RunOutput output;
  if (config.shots > 0) output.record.emplace();

  const auto points = sweep_points(config, config.phi1 - config.phi2);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double diff = points[i];
    experiments::MZConfig mz;
    mz.phi2 = PhaseSetting(config.phi2);
    mz.phi1 = config.sweep ? PhaseSetting(config.phi2 + diff) : PhaseSetting(config.phi1);
    mz.layout = config.layout;
    mz.front_fraction = config.front_fraction;

    experiments::DetectionStats stats;
    if (config.shots == 0) {
      stats = experiments::mz_run(mz);
    } else {
      Rng rng(derive_seed(config.seed, i));
      auto sample = experiments::mz_sample(mz, config.shots, rng);
      stats = sample.empirical;
      append_all(*output.record, sample.record);
    }
    check_row_sum(stats.p_d1 + stats.p_d2, "mz detector");
    csv << format_number(diff) << ',' << format_number(stats.p_d1) << ','
        << format_number(stats.p_d2) << '\n';
  }
  output.table = csv.str();
  return output;
}

RunOutput run_rto(const RunConfig& config) {
  std::ostringstream csv;
  csv << "phase_diff,p_corr,p_anti,E,pA1,pB1\n";
  RunOutput output;
  if (config.shots > 0) output.record.emplace();

  const auto points = sweep_points(config, config.phi_b - config.phi_a);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double diff = points[i];
    const experiments::RTOConfig rto{
        PhaseSetting(config.phi_a),
        config.sweep ? PhaseSetting(config.phi_a + diff) : PhaseSetting(config.phi_b)};
    experiments::JointStats stats;
    if (config.shots == 0) {
      stats = experiments::rto_joint(rto);
    } else {
      Rng rng(derive_seed(config.seed, i));
      auto sample = experiments::rto_sample(rto, config.shots, rng);
      stats = sample.empirical;
      append_all(*output.record, sample.record);
    }
    check_row_sum(stats.p_correlated() + stats.p_anticorrelated(), "rto coincidence");
    csv << format_number(diff) << ',' << format_number(stats.p_correlated()) << ','
        << format_number(stats.p_anticorrelated()) << ',' << format_number(stats.correlation)
        << ',' << format_number(stats.p_a1) << ',' << format_number(stats.p_b1) << '\n';
  }
  output.table = csv.str();
  return output;
}

RunOutput run_bell(const RunConfig& config) {
  std::ostringstream csv;
  csv << "a,a_prime,b,b_prime,S,lhv_max,violation\n";
  RunOutput output;
  if (config.shots > 0) output.record.emplace();

  std::vector<analysis::CHSHSettings> all;
  if (config.sweep) {
    for (double delta : config.sweep->points()) {
      all.push_back(analysis::CHSHSettings::from_difference(delta));
    }
  } else if (config.bell_settings) {
    const auto& p = *config.bell_settings;
    all.push_back({PhaseSetting(p[0]), PhaseSetting(p[1]), PhaseSetting(p[2]), PhaseSetting(p[3])});
  } else {
    all.push_back(analysis::CHSHSettings::canonical());
  }

  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& settings = all[i];
    analysis::BellStats stats;
    if (config.shots == 0) {
      stats = analysis::chsh(settings, analysis::quantum_correlator());
    } else {
      auto sample = analysis::chsh_sampled(settings, config.shots, derive_seed(config.seed, i));
      stats = sample.stats;
      append_all(*output.record, sample.record);
    }
    csv << format_number(settings.a.radians()) << ',' << format_number(settings.a_prime.radians())
        << ',' << format_number(settings.b.radians()) << ','
        << format_number(settings.b_prime.radians()) << ',' << format_number(stats.s) << ','
        << format_number(analysis::lhv_max(settings)) << ','
        << (stats.violation ? "true" : "false") << '\n';
  }
  output.table = csv.str();
  return output;
}

RunOutput run_double_slit(const RunConfig& config) {
  const auto profile = experiments::double_slit_intensity(config.slit);
  std::vector<double> values = profile.mass;
  RunOutput output;

  if (config.shots > 0) {
    Rng rng(config.seed);
    auto sample = experiments::double_slit_sample(config.slit, config.shots, rng);
    const auto counts = analysis::histogram(sample.impacts, profile.edges);
    for (std::size_t k = 0; k < counts.size(); ++k) {
      values[k] = static_cast<double>(counts[k]) / static_cast<double>(config.shots);
    }
    std::ostringstream impacts;
    impacts << "trial,x\n";
    for (std::size_t i = 0; i < sample.impacts.size(); ++i) {
      impacts << i << ',' << format_number(sample.impacts[i]) << '\n';
    }
    output.impacts = impacts.str();
    output.record = std::move(sample.record);
  }

  double total = 0.0;
  for (double v : values) total += v;
  check_row_sum(total, "screen");

  std::ostringstream csv;
  csv << "x,intensity\n";
  for (std::size_t k = 0; k < values.size(); ++k) {
    csv << format_number(profile.center(k)) << ',' << format_number(values[k]) << '\n';
  }
  output.table = csv.str();
  return output;
}

RunOutput run_cat(const RunConfig& config) {
  const ModeBasis nucleus({"undecayed", "decayed"});
  const experiments::DetectorModel cat(nucleus, {"alive", "dead"});
  const StateVector system =
      make_state(nucleus, {std::sqrt(1.0 - config.p_decay), std::sqrt(config.p_decay)});
  const StateVector joint = experiments::von_neumann_measure(system, cat);

  const std::vector<std::string> rows{"undecayed", "decayed"};
  const std::vector<std::string> columns{"alive", "dead"};
  const auto table = experiments::correlation_table(joint, rows, columns);
  RunOutput output;

  // p_joint[i][j] over rows x columns, analytic or registered frequencies.
  std::vector<std::vector<double>> p_joint = table.joint;
  if (config.shots > 0) {
    Rng rng(config.seed);
    const Distribution dist = born_probabilities(joint);
    output.record.emplace();
    for (auto& row : p_joint) std::fill(row.begin(), row.end(), 0.0);
    const double weight = 1.0 / static_cast<double>(config.shots);
    for (std::uint64_t n = 0; n < config.shots; ++n) {
      const std::size_t k = draw_index(dist.probabilities, rng);
      output.record->append(dist.basis.label(k), config.seed);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < columns.size(); ++j) {
          if (dist.basis.label(k) == composite_label(rows[i], columns[j])) p_joint[i][j] += weight;
        }
      }
    }
  }

  double total = 0.0;
  std::ostringstream csv;
  csv << "system,pointer,p_joint,p_conditional\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double row_total = 0.0;
    for (double p : p_joint[i]) row_total += p;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const double p = p_joint[i][j];
      total += p;
      csv << rows[i] << ',' << columns[j] << ',' << format_number(p) << ','
          << (row_total > 0.0 ? format_number(p / row_total) : std::string()) << '\n';
    }
  }
  check_row_sum(total, "cat joint");
  output.table = csv.str();
  return output;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::ios_base::failure("cannot open '" + path.string() + "' for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw std::ios_base::failure("failed writing '" + path.string() + "'");
  }
}

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12f", value);
  std::string text(buffer);
  if (text.rfind("-0.", 0) == 0 && text.find_first_not_of("-0.") == std::string::npos) {
    text.erase(0, 1);
  }
  return text;
}

RunOutput execute(const RunConfig& config) {
  switch (config.experiment) {
    case Experiment::mz:
      return run_mz(config);
    case Experiment::rto:
      return run_rto(config);
    case Experiment::bell:
      return run_bell(config);
    case Experiment::double_slit:
      return run_double_slit(config);
    case Experiment::cat:
      return run_cat(config);
    case Experiment::table_one:
      return {render_table_one(table_one()), std::nullopt, std::nullopt};
  }
  throw InvalidArgumentError("unhandled experiment");
}

std::filesystem::path default_output_path(Experiment experiment) {
  std::filesystem::path dir = ".";
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
    dir = env;
  }
  std::string name(experiment_name(experiment));
  for (char& c : name) {
    if (c == '-') c = '_';
  }
  return dir / (name + (experiment == Experiment::table_one ? ".txt" : ".csv"));
}

int run(const RunConfig& config, std::ostream& out, std::ostream& diagnostics) {
  RunOutput output;
  try {
    output = execute(config);
  } catch (const InvariantError& e) {
    diagnostics << "fewmode: invariant violated: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    diagnostics << "fewmode: " << e.what() << '\n';
    return 2;
  }

  try {
    const auto target = config.output.value_or(default_output_path(config.experiment));
    if (target == "-") {
      out << output.table;
    } else {
      write_text(target, output.table);
    }
    if (config.record_path && output.record) {
      output.record->save(*config.record_path);
    }
    if (config.impacts_path && output.impacts) {
      write_text(*config.impacts_path, *output.impacts);
    }
  } catch (const std::exception& e) {
    diagnostics << "fewmode: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace fewmode::cli
