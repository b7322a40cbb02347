#pragma once

#include <complex>

#include <Eigen/Dense>

namespace fewmode {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Tolerance for hand-written inputs (configs, literal amplitudes).
inline constexpr double kInputTolerance = 1e-9;
// Tolerance for quantities produced by internal linear algebra.
inline constexpr double kInternalTolerance = 1e-12;
// Rejection threshold for ‖U†U − I‖∞.
inline constexpr double kUnitarityRejection = 1e-10;

}  // namespace fewmode
