#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace robustmo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension mismatch or out-of-range argument.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Invalid cone or problem configuration detected at construction.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Unknown problem name.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or grid exceeded its configured size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Numerical breakdown: singular systems, non-convergence, broken invariants.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Objective produced a non-finite value.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, std::size_t scenario)
      : Error(what + " (scenario " + std::to_string(scenario) + ")"), scenario_(scenario) {}

  std::size_t scenario() const { return scenario_; }

 private:
  std::size_t scenario_;
};

}  // namespace robustmo
