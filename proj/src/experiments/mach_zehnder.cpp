#include "fewmode/experiments/mach_zehnder.hpp"

#include <array>

#include "fewmode/core/error.hpp"
#include "fewmode/core/measurement.hpp"

namespace fewmode::experiments {
namespace {

const ModeBasis& arms() {
  static const ModeBasis basis({kArm1, kArm2});
  return basis;
}

void check_front_fraction(double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw InvalidArgumentError("front fraction must lie in [0, 1]");
  }
}

}  // namespace

optics::Circuit mz_circuit(optics::PhaseSetting phi1, optics::PhaseSetting phi2, bool closed) {
  optics::Circuit circuit(arms());
  circuit.add(optics::beam_splitter(kArm1, kArm2))
      .add(optics::mirror(arms()))
      .add(optics::phase_shifter(phi1, kArm1, arms()))
      .add(optics::phase_shifter(phi2, kArm2, arms()));
  if (closed) {
    circuit.add(optics::beam_splitter(kArm1, kArm2));
  }
  return circuit;
}

StateVector mz_output_state(const MZConfig& config) {
  if (config.layout == MZLayout::delayed) {
    throw InvalidArgumentError("the delayed layout has no single output state");
  }
  const auto circuit = mz_circuit(config.phi1, config.phi2, config.layout == MZLayout::closed);
  return apply_unitary(basis_state(arms(), kArm1), optics::compose(circuit));
}

DetectionStats mz_run(const MZConfig& config) {
  if (config.layout == MZLayout::delayed) {
    return mz_delayed(config);
  }
  const Distribution dist = born_probabilities(mz_output_state(config));
  return {dist.at(kDetector1Port), dist.at(kDetector2Port)};
}

DetectionStats mz_delayed(const MZConfig& config) {
  if (config.layout != MZLayout::delayed) {
    throw InvalidArgumentError("mz_delayed needs the delayed layout");
  }
  const double r = config.front_fraction;
  check_front_fraction(r);
  MZConfig front = config;
  front.layout = MZLayout::open;
  MZConfig rear = config;
  rear.layout = MZLayout::closed;
  const DetectionStats open = mz_run(front);
  const DetectionStats closed = mz_run(rear);
  return {r * open.p_d1 + (1.0 - r) * closed.p_d1, r * open.p_d2 + (1.0 - r) * closed.p_d2};
}

DetectionSample mz_sample(const MZConfig& config, std::uint64_t shots, Rng& rng) {
  if (shots == 0) {
    throw InvalidArgumentError("shots must be at least 1");
  }
  const DetectionStats stats = mz_run(config);
  const std::array<double, 2> probabilities{stats.p_d1, stats.p_d2};
  static constexpr std::array<const char*, 2> kNames{"D1", "D2"};

  DetectionSample sample;
  std::uint64_t d1 = 0;
  for (std::uint64_t i = 0; i < shots; ++i) {
    const std::size_t k = draw_index(probabilities, rng);
    d1 += k == 0 ? 1 : 0;
    sample.record.append(kNames[k], rng.seed());
  }
  const double n = static_cast<double>(shots);
  sample.empirical = {static_cast<double>(d1) / n, static_cast<double>(shots - d1) / n};
  return sample;
}

}  // namespace fewmode::experiments
