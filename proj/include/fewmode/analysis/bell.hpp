#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "fewmode/experiments/measurement_record.hpp"
#include "fewmode/optics/optics.hpp"

namespace fewmode::analysis {

// Analyzer phases: a, a′ on side A and b, b′ on side B.
struct CHSHSettings {
  optics::PhaseSetting a;
  optics::PhaseSetting a_prime;
  optics::PhaseSetting b;
  optics::PhaseSetting b_prime;

  // a = 0, a′ = π/2, b = π/4, b′ = 3π/4.
  static CHSHSettings canonical();
  // a = 0, b = Δ, a′ = 2Δ, b′ = 3Δ: every pair differs by Δ except (a, b′),
  // which differs by 3Δ. Δ = π/4 gives the canonical settings.
  static CHSHSettings from_difference(double delta);
};

struct BellStats {
  double s = 0.0;
  double e_ab = 0.0;
  double e_ab_prime = 0.0;
  double e_a_prime_b = 0.0;
  double e_a_prime_b_prime = 0.0;
  bool violation = false;  // s > 2
};

// Correlation E(φ_A, φ_B) in [−1, 1].
using Correlator = std::function<double(optics::PhaseSetting, optics::PhaseSetting)>;

/// S = |E(a,b) − E(a,b′) + E(a′,b) + E(a′,b′)|.
BellStats chsh(const CHSHSettings& settings, const Correlator& correlator);

// E from the simulated two-photon experiment, cos(φ_B − φ_A).
Correlator quantum_correlator();

/// Deterministic local strategy: a fixed ±1 answer per side per setting.
struct LocalStrategy {
  int a = 1;
  int a_prime = 1;
  int b = 1;
  int b_prime = 1;
};

// All 16 strategies.
std::vector<LocalStrategy> local_strategies();

// E(x, y) = A(x)·B(y) with x, y matched against `settings`. When two
// settings share a phase the unprimed answer is used.
Correlator strategy_correlator(const LocalStrategy& strategy, const CHSHSettings& settings);

/// Largest |S| over every deterministic local strategy. Always 2.
double lhv_max(const CHSHSettings& settings);

struct BellSample {
  BellStats stats;
  // Coincidences of all four setting pairs in order ab, ab′, a′b, a′b′.
  experiments::MeasurementRecord record;
};

/// CHSH from simulated coincidence counts, `shots` per setting pair. Pair k
/// (order ab, ab′, a′b, a′b′) uses seed derive_seed(seed, k).
BellSample chsh_sampled(const CHSHSettings& settings, std::uint64_t shots, std::uint64_t seed);

}  // namespace fewmode::analysis
