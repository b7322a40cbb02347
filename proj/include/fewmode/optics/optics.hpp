#pragma once

#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "fewmode/core/mode_basis.hpp"
#include "fewmode/core/unitary.hpp"

namespace fewmode::optics {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Phase in radians, reduced to [0, 2π) on construction.
class PhaseSetting {
 public:
  constexpr PhaseSetting() = default;
  explicit PhaseSetting(double radians);

  double radians() const { return radians_; }

  friend bool operator==(PhaseSetting, PhaseSetting) = default;

 private:
  double radians_ = 0.0;
};

/// Symmetric 50-50 splitter, (1/√2)·[[1, i], [i, 1]].
///
/// Transmission keeps the amplitude, reflection multiplies it by i. Two
/// splitters back to back give i·[[0, 1], [1, 0]]: a port swap.
UnitaryElement beam_splitter(std::string port1 = "1", std::string port2 = "2");

// e^{iφ} on `mode`, 1 on the other modes of `modes`.
UnitaryElement phase_shifter(PhaseSetting phase, std::string_view mode, const ModeBasis& modes);

// Mirrors only add a common phase; modeled as the identity.
UnitaryElement mirror(const ModeBasis& modes);

/// Ordered optical elements on a fixed set of modes.
class Circuit {
 public:
  struct Step {
    UnitaryElement element;
    std::vector<std::string> targets;
  };

  explicit Circuit(ModeBasis basis) : basis_(std::move(basis)) {}

  // Throws BasisError / DimensionError if targets do not fit the element or
  // are not modes of this circuit.
  Circuit& add(UnitaryElement element, std::vector<std::string> targets);
  // Targets are the element's own labels.
  Circuit& add(UnitaryElement element);

  const ModeBasis& basis() const { return basis_; }
  const std::vector<Step>& steps() const { return steps_; }

 private:
  ModeBasis basis_;
  std::vector<Step> steps_;
};

// Product of the steps, first step applied first. Empty circuit: identity.
UnitaryElement compose(const Circuit& circuit);

}  // namespace fewmode::optics
