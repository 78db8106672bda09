#pragma once

#include <stdexcept>
#include <string>

namespace inls {

// Error taxonomy maps onto CLI exit codes: config 2, runtime 3, io 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Numerical preconditions violated at runtime (non-finite fields, windows,
// bisection brackets, unresolved potentials, short fit windows).
struct RuntimeError : Error {
  using Error::Error;
};

struct ResolutionError : RuntimeError {
  using RuntimeError::RuntimeError;
};

struct WindowError : RuntimeError {
  using RuntimeError::RuntimeError;
};

struct BracketError : RuntimeError {
  using RuntimeError::RuntimeError;
};

struct FitError : RuntimeError {
  using RuntimeError::RuntimeError;
};

struct IoError : Error {
  using Error::Error;
};

struct CorruptionError : IoError {
  using IoError::IoError;
};

struct UnsupportedVersionError : IoError {
  using IoError::IoError;
};

}  // namespace inls
