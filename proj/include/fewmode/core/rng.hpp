#pragma once

#include <cstdint>
#include <random>

namespace fewmode {

/// Seeded 64-bit generator used by every Monte Carlo path.
///
/// The integer stream is std::mt19937_64, which the standard pins bit for bit.
/// Uniform doubles are built from the top 53 bits directly rather than through
/// std::uniform_real_distribution, whose algorithm is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Seed for point `index` of a sweep; independent of execution order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return seed ^ index; }

}  // namespace fewmode
