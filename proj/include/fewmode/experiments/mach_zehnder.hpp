#pragma once

#include <cstdint>

#include "fewmode/core/rng.hpp"
#include "fewmode/core/state_vector.hpp"
#include "fewmode/experiments/measurement_record.hpp"
#include "fewmode/optics/optics.hpp"

namespace fewmode::experiments {

enum class MZLayout {
  open,     // no second splitter: paths go straight to the detectors
  closed,   // second splitter recombines the paths
  delayed,  // second splitter inserted while the wavepacket crosses
};

struct MZConfig {
  optics::PhaseSetting phi1;
  optics::PhaseSetting phi2;
  MZLayout layout = MZLayout::closed;
  // Share of the wavepacket that passes before the second splitter is in
  // place. Only read for the delayed layout; must lie in [0, 1].
  double front_fraction = 0.0;
};

struct DetectionStats {
  double p_d1;
  double p_d2;
};

// Arm modes of the interferometer. The photon enters on kArm1.
inline constexpr const char* kArm1 = "1";
inline constexpr const char* kArm2 = "2";

// Output mode read by detector D1. Calibrated so that D1 takes all the light
// of the closed layout at zero phase difference.
inline constexpr const char* kDetector1Port = kArm2;
inline constexpr const char* kDetector2Port = kArm1;

// First splitter, phase shifters, and (closed only) the second splitter.
optics::Circuit mz_circuit(optics::PhaseSetting phi1, optics::PhaseSetting phi2, bool closed);

// Photon state at the detectors for the open or closed layout.
StateVector mz_output_state(const MZConfig& config);

// Open and closed layouts; the delayed layout is forwarded to mz_delayed.
DetectionStats mz_run(const MZConfig& config);

// r·open + (1 − r)·closed, r = front_fraction.
DetectionStats mz_delayed(const MZConfig& config);

struct DetectionSample {
  MeasurementRecord record;
  DetectionStats empirical;
};

// Detector clicks drawn from mz_run(config). Outcomes are "D1" / "D2".
DetectionSample mz_sample(const MZConfig& config, std::uint64_t shots, Rng& rng);

}  // namespace fewmode::experiments
