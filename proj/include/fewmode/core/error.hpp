#pragma once

#include <stdexcept>
#include <string>

namespace fewmode {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Duplicate, unknown or malformed mode labels.
class BasisError : public Error {
 public:
  using Error::Error;
};

// All amplitudes zero.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class NonUnitaryError : public Error {
 public:
  using Error::Error;
};

// Operation needs a composite basis with a recorded left/right split.
class BipartitionError : public Error {
 public:
  using Error::Error;
};

// Matrix fails the Hermitian / unit-trace / positivity checks.
class InvalidDensityError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace fewmode
