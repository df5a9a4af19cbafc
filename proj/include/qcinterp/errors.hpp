#pragma once

#include <stdexcept>
#include <string>

namespace qcinterp {

// Base class for all library errors. Subclasses map 1:1 onto the failure
// modes named in the operation contracts; the CLI translates them into
// process exit codes (config/parse -> 2, solver -> 3).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfRange : Error {
  using Error::Error;
};

struct BadQuantumNumber : Error {
  using Error::Error;
};

struct GridMismatch : Error {
  using Error::Error;
};

struct ConvergenceFailure : Error {
  using Error::Error;
};

struct PicardDivergence : Error {
  PicardDivergence(const std::string& msg, long step) : Error(msg), step_index(step) {}
  long step_index;
};

struct ClassicalSingularity : Error {
  using Error::Error;
};

struct TrajectoryEscaped : Error {
  using Error::Error;
};

struct NoRootInBracket : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, long row) : Error(msg), row_index(row) {}
  long row_index;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace qcinterp
