#pragma once

#include <stdexcept>
#include <string>

namespace gridroll {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Case data violates an invariant (bad reference, inconsistent bounds, ...).
struct DataError : Error {
  using Error::Error;
};

/// A line-status state disconnects buses that carry generation or load.
struct IslandingError : Error {
  using Error::Error;
};

/// Scenario sampling could not produce a valid trajectory.
struct GenerationError : Error {
  using Error::Error;
};

/// Inconsistent dimensions or indices while assembling an LP.
struct BuildError : Error {
  using Error::Error;
};

/// The LP solver failed numerically or hit its iteration limit.
struct SolverError : Error {
  using Error::Error;
};

/// The LP has an unbounded improving ray (corrupt cost data upstream).
struct UnboundedError : SolverError {
  using SolverError::SolverError;
};

/// A price formula asked for a dual the tag map does not carry.
struct MissingDualError : Error {
  using Error::Error;
};

/// Malformed input file.
struct ParseError : Error {
  using Error::Error;
};

/// A check was requested on data that does not meet its precondition.
struct ConditionNotMet : Error {
  using Error::Error;
};

}  // namespace gridroll
