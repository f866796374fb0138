#pragma once

#include <stdexcept>
#include <string>

namespace homodyn {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition or configuration problems. The CLI maps these to exit status 1.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class CapacityError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class StepResolutionError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class SectorError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Numerical failures. The CLI maps these to exit status 2.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NonConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DivergentOrbitError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class RootNotFoundError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class EmptyLevelError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class QuadratureError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace homodyn
