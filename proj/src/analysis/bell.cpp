#include "fewmode/analysis/bell.hpp"

#include <cmath>
#include <numbers>

#include "fewmode/analysis/correlation.hpp"
#include "fewmode/core/error.hpp"
#include "fewmode/experiments/rto.hpp"

namespace fewmode::analysis {

using optics::PhaseSetting;

CHSHSettings CHSHSettings::canonical() { return from_difference(std::numbers::pi / 4.0); }

CHSHSettings CHSHSettings::from_difference(double delta) {
  return {PhaseSetting(0.0), PhaseSetting(2.0 * delta), PhaseSetting(delta),
          PhaseSetting(3.0 * delta)};
}

BellStats chsh(const CHSHSettings& settings, const Correlator& correlator) {
  BellStats stats;
  stats.e_ab = correlator(settings.a, settings.b);
  stats.e_ab_prime = correlator(settings.a, settings.b_prime);
  stats.e_a_prime_b = correlator(settings.a_prime, settings.b);
  stats.e_a_prime_b_prime = correlator(settings.a_prime, settings.b_prime);
  stats.s = std::abs(stats.e_ab - stats.e_ab_prime + stats.e_a_prime_b + stats.e_a_prime_b_prime);
  stats.violation = stats.s > 2.0;
  return stats;
}

Correlator quantum_correlator() {
  return [](PhaseSetting phi_a, PhaseSetting phi_b) {
    return degree_of_correlation(experiments::rto_joint({phi_a, phi_b}));
  };
}

std::vector<LocalStrategy> local_strategies() {
  std::vector<LocalStrategy> out;
  out.reserve(16);
  for (int bits = 0; bits < 16; ++bits) {
    auto sign = [bits](int bit) { return (bits >> bit) & 1 ? -1 : 1; };
    out.push_back({sign(0), sign(1), sign(2), sign(3)});
  }
  return out;
}

Correlator strategy_correlator(const LocalStrategy& strategy, const CHSHSettings& settings) {
  return [strategy, settings](PhaseSetting x, PhaseSetting y) -> double {
    int answer_a = 0;
    if (x == settings.a) {
      answer_a = strategy.a;
    } else if (x == settings.a_prime) {
      answer_a = strategy.a_prime;
    } else {
      throw InvalidArgumentError("local strategy queried at an unknown A setting");
    }
    int answer_b = 0;
    if (y == settings.b) {
      answer_b = strategy.b;
    } else if (y == settings.b_prime) {
      answer_b = strategy.b_prime;
    } else {
      throw InvalidArgumentError("local strategy queried at an unknown B setting");
    }
    return answer_a * answer_b;
  };
}

double lhv_max(const CHSHSettings& settings) {
  double best = 0.0;
  for (const auto& strategy : local_strategies()) {
    best = std::max(best, chsh(settings, strategy_correlator(strategy, settings)).s);
  }
  return best;
}

BellSample chsh_sampled(const CHSHSettings& settings, std::uint64_t shots, std::uint64_t seed) {
  const std::array<std::pair<PhaseSetting, PhaseSetting>, 4> pairs{{
      {settings.a, settings.b},
      {settings.a, settings.b_prime},
      {settings.a_prime, settings.b},
      {settings.a_prime, settings.b_prime},
  }};
  std::array<double, 4> e{};
  BellSample sample;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    Rng rng(derive_seed(seed, k));
    auto run = experiments::rto_sample({pairs[k].first, pairs[k].second}, shots, rng);
    e[k] = run.empirical.correlation;
    for (const auto& entry : run.record.entries()) {
      sample.record.append(entry.outcome, entry.seed);
    }
  }
  BellStats& stats = sample.stats;
  stats.e_ab = e[0];
  stats.e_ab_prime = e[1];
  stats.e_a_prime_b = e[2];
  stats.e_a_prime_b_prime = e[3];
  stats.s = std::abs(e[0] - e[1] + e[2] + e[3]);
  stats.violation = stats.s > 2.0;
  return sample;
}

}  // namespace fewmode::analysis
