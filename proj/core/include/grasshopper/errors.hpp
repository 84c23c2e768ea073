#pragma once

#include <stdexcept>
#include <string>

namespace grasshopper {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad parity, non-coprime
/// pair, out-of-range length, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Retention is undefined because the starting lawn has zero mass.
class UndefinedRetention : public Error {
 public:
  using Error::Error;
};

/// A geometric quantity is infeasible for the given configuration.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// A cogged lawn violates one of its validity constraints (overlap or
/// cap-to-cup reachability).
class ValidityError : public Error {
 public:
  using Error::Error;
};

/// Root finding, refinement or sampling failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A search came back empty under the given bounds.
class NotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace grasshopper
