#pragma once

#include <stdexcept>
#include <string>

namespace lowmach {

/// Caller violated an operation's precondition (arity, grid mismatch, bad argument).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Poisson right-hand side with nonzero mean on the torus.
class IncompatibleRhsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Density law with R <= 0 or dR/dp <= 0 at an evaluation site.
class InvalidGasLaw : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Explicit step requested beyond its advective stability bound.
class StabilityError : public std::runtime_error {
 public:
  StabilityError(const std::string& what, double dt, double bound)
      : std::runtime_error(what), dt_(dt), bound_(bound) {}
  double dt() const { return dt_; }
  double bound() const { return bound_; }

 private:
  double dt_;
  double bound_;
};

/// State left the admissible region (1 + eps q <= 0, 1 + eps phi <= 0, or non-finite values).
class StateSpaceExit : public std::runtime_error {
 public:
  StateSpaceExit(const std::string& field, double extremum)
      : std::runtime_error("state-space exit in field '" + field +
                           "' (extremum " + std::to_string(extremum) + ")"),
        field_(field),
        extremum_(extremum) {}
  const std::string& field() const { return field_; }
  double extremum() const { return extremum_; }

 private:
  std::string field_;
  double extremum_;
};

}  // namespace lowmach
