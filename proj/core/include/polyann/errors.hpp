#pragma once

#include <stdexcept>
#include <string>

namespace polyann {

// Base class for every error the library raises on purpose. Callers that
// want to distinguish "bad arguments" from "numerics gave up" catch the
// concrete subclasses below.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Arguments violate a documented contract (empty input, index out of range,
// point outside the annulus in log coordinates, ...).
class InvalidInputError : public Error {
public:
  using Error::Error;
};

// A tunable (contour radius, node count, file path) is unusable.
class ConfigurationError : public Error {
public:
  using Error::Error;
};

// A series or quadrature did not reach the requested tolerance within its
// budget. Carries the bound that was actually achieved.
class TruncationError : public Error {
public:
  TruncationError(const std::string& what, double achieved)
      : Error(what), achieved_bound(achieved) {}
  double achieved_bound;
};

// A function handle cannot supply a required derivative order.
class CapabilityError : public Error {
public:
  using Error::Error;
};

// Evaluation point lies outside the admissible domain. `constraint` names
// the violated condition ("L-", "L+", "cut", "origin").
class DomainError : public Error {
public:
  DomainError(const std::string& what, std::string which)
      : Error(what), constraint(std::move(which)) {}
  std::string constraint;
};

// A caller-provided setup fails a mathematical precondition (e.g. weighted
// boundary values that must match before a Rolle-type search makes sense).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// The dimension parity routed the call to the wrong variant.
class WrongBranchError : public Error {
public:
  using Error::Error;
};

// A structural invariant the code relies on was violated; always a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace polyann
