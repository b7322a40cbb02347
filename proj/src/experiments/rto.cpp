#include "fewmode/experiments/rto.hpp"

#include <cmath>
#include <string>

#include "fewmode/core/error.hpp"
#include "fewmode/core/measurement.hpp"
#include "fewmode/core/unitary.hpp"

namespace fewmode::experiments {
namespace {

const ModeBasis& side_a() {
  static const ModeBasis basis({"A1", "A2"});
  return basis;
}

const ModeBasis& side_b() {
  static const ModeBasis basis({"B1", "B2"});
  return basis;
}

}  // namespace

JointStats JointStats::from_joint(double a1b1, double a1b2, double a2b1, double a2b2) {
  JointStats s;
  s.p_a1b1 = a1b1;
  s.p_a1b2 = a1b2;
  s.p_a2b1 = a2b1;
  s.p_a2b2 = a2b2;
  s.p_a1 = a1b1 + a1b2;
  s.p_a2 = a2b1 + a2b2;
  s.p_b1 = a1b1 + a2b1;
  s.p_b2 = a1b2 + a2b2;
  s.correlation = (a1b1 + a2b2) - (a1b2 + a2b1);
  return s;
}

StateVector rto_source_state() {
  const ModeBasis pair = ModeBasis::product(side_a(), side_b());
  const double s = 1.0 / std::sqrt(2.0);
  return make_state(pair, {s, 0.0, 0.0, s});
}

StateVector rto_output_state(const RTOConfig& config, const RTOCalibration& calibration) {
  const optics::PhaseSetting phase_a(config.phi_a.radians() + calibration.offset_a);
  const optics::PhaseSetting phase_b(config.phi_b.radians() + calibration.offset_b);

  StateVector state = rto_source_state();
  state = apply_unitary(state, optics::phase_shifter(phase_a, "A1", side_a()));
  state = apply_unitary(state, optics::phase_shifter(phase_b, "B2", side_b()));
  state = apply_unitary(state, optics::beam_splitter("A1", "A2"));
  state = apply_unitary(state, optics::beam_splitter("B1", "B2"));
  return state;
}

JointStats rto_joint(const RTOConfig& config, const RTOCalibration& calibration) {
  const Distribution dist = born_probabilities(rto_output_state(config, calibration));
  return JointStats::from_joint(dist.at("A1⊗B1"), dist.at("A1⊗B2"), dist.at("A2⊗B1"),
                                dist.at("A2⊗B2"));
}

RTOSample rto_sample(const RTOConfig& config, std::uint64_t shots, Rng& rng) {
  if (shots == 0) {
    throw InvalidArgumentError("shots must be at least 1");
  }
  const Distribution dist = born_probabilities(rto_output_state(config));
  std::array<std::uint64_t, 4> counts{};
  RTOSample sample;
  for (std::uint64_t i = 0; i < shots; ++i) {
    const std::size_t k = draw_index(dist.probabilities, rng);
    ++counts[k];
    sample.record.append(dist.basis.label(k), rng.seed());
  }
  const double n = static_cast<double>(shots);
  // Basis order is A1⊗B1, A1⊗B2, A2⊗B1, A2⊗B2.
  sample.empirical = JointStats::from_joint(static_cast<double>(counts[0]) / n,
                                            static_cast<double>(counts[1]) / n,
                                            static_cast<double>(counts[2]) / n,
                                            static_cast<double>(counts[3]) / n);
  return sample;
}

}  // namespace fewmode::experiments
