#pragma once

#include <array>
#include <cstdint>
#include <numbers>

#include "fewmode/core/rng.hpp"
#include "fewmode/core/state_vector.hpp"
#include "fewmode/experiments/measurement_record.hpp"
#include "fewmode/optics/optics.hpp"

namespace fewmode::experiments {

// Two-photon momentum-entangled interferometer: photon A on paths A1/A2,
// photon B on paths B1/B2, a phase shifter and a splitter on each side.
struct RTOConfig {
  optics::PhaseSetting phi_a;
  optics::PhaseSetting phi_b;
};

/// Fixed phases added next to each variable shifter (on A1 and B2).
///
/// Only their difference is observable. A difference of π makes zero
/// settings perfectly correlated: (A1,B1) or (A2,B2), never mixed. Phases
/// placed after the splitters would be invisible to the detectors, so the
/// compensation sits on the paths.
struct RTOCalibration {
  double offset_a = std::numbers::pi;
  double offset_b = 0.0;
};

inline constexpr RTOCalibration kRTOCalibration{};

/// Probabilities of the four two-detector outcomes.
struct JointStats {
  double p_a1b1 = 0.0;
  double p_a1b2 = 0.0;
  double p_a2b1 = 0.0;
  double p_a2b2 = 0.0;
  double p_a1 = 0.0;
  double p_a2 = 0.0;
  double p_b1 = 0.0;
  double p_b2 = 0.0;
  // P(correlated) − P(anticorrelated).
  double correlation = 0.0;

  // Fills marginals and correlation from the four joint probabilities.
  static JointStats from_joint(double a1b1, double a1b2, double a2b1, double a2b2);

  double p_correlated() const { return p_a1b1 + p_a2b2; }
  double p_anticorrelated() const { return p_a1b2 + p_a2b1; }
};

// (|A1⟩|B1⟩ + |A2⟩|B2⟩)/√2 on {A1,A2} ⊗ {B1,B2}.
StateVector rto_source_state();

// State at the four detectors after shifters and splitters.
StateVector rto_output_state(const RTOConfig& config,
                             const RTOCalibration& calibration = kRTOCalibration);

JointStats rto_joint(const RTOConfig& config, const RTOCalibration& calibration = kRTOCalibration);

struct RTOSample {
  MeasurementRecord record;
  JointStats empirical;
};

// One coincidence per shot. Outcomes are composite labels such as "A1⊗B2".
RTOSample rto_sample(const RTOConfig& config, std::uint64_t shots, Rng& rng);

}  // namespace fewmode::experiments
