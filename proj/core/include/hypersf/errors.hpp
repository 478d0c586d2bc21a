#pragma once

#include <stdexcept>
#include <string>

namespace hypersf {

// Root of every error raised by the library. Callers that only care about
// "something failed" catch this; the CLI maps the subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A Gamma function (or a product of them) is evaluated at an uncancelled pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Parameter combination excluded by the formula (integer differences etc.).
class ParameterError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A series or integral is known to diverge for the given input.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Geometry parameters outside the region where the closed form converges.
class RegionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The input is mathematically fine but needs a code path that is not built
// (e.g. a Mellin-Barnes integral that only converges on a loop contour).
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A numerical procedure ran out of budget before meeting its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypersf
