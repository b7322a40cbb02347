#include "fewmode/optics/optics.hpp"

#include <cmath>

#include "fewmode/core/error.hpp"

namespace fewmode::optics {

PhaseSetting::PhaseSetting(double radians) {
  if (!std::isfinite(radians)) {
    throw InvalidArgumentError("phase must be finite");
  }
  double reduced = std::fmod(radians, kTwoPi);
  if (reduced < 0.0) {
    reduced += kTwoPi;
  }
  // A tiny negative input can round up to exactly 2π.
  radians_ = reduced >= kTwoPi ? 0.0 : reduced;
}

UnitaryElement beam_splitter(std::string port1, std::string port2) {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  CMatrix m(2, 2);
  m << s, i * s,
       i * s, s;
  return UnitaryElement(ModeBasis({std::move(port1), std::move(port2)}), std::move(m));
}

UnitaryElement phase_shifter(PhaseSetting phase, std::string_view mode, const ModeBasis& modes) {
  const auto index = static_cast<Eigen::Index>(modes.index_of(mode));
  const auto dim = static_cast<Eigen::Index>(modes.dimension());
  CMatrix m = CMatrix::Identity(dim, dim);
  m(index, index) = std::polar(1.0, phase.radians());
  return UnitaryElement(modes, std::move(m));
}

UnitaryElement mirror(const ModeBasis& modes) { return UnitaryElement::identity(modes); }

Circuit& Circuit::add(UnitaryElement element, std::vector<std::string> targets) {
  if (targets.size() != element.dimension()) {
    throw DimensionError("element of dimension " + std::to_string(element.dimension()) +
                         " given " + std::to_string(targets.size()) + " targets");
  }
  for (const auto& target : targets) {
    if (!basis_.contains(target)) {
      throw BasisError("circuit has no mode '" + target + "'");
    }
  }
  steps_.push_back({std::move(element), std::move(targets)});
  return *this;
}

Circuit& Circuit::add(UnitaryElement element) {
  std::vector<std::string> targets = element.basis().labels();
  return add(std::move(element), std::move(targets));
}

UnitaryElement compose(const Circuit& circuit) {
  const ModeBasis& basis = circuit.basis();
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  CMatrix total = CMatrix::Identity(dim, dim);
  for (const auto& step : circuit.steps()) {
    std::vector<std::size_t> positions;
    positions.reserve(step.targets.size());
    for (const auto& target : step.targets) {
      positions.push_back(basis.index_of(target));
    }
    total = embed_on_modes(step.element.matrix(), positions, basis.dimension()) * total;
  }
  return UnitaryElement(basis, std::move(total));
}

}  // namespace fewmode::optics
