#pragma once

#include <stdexcept>
#include <string>

namespace saacg {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violation on a public operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Linear or optimization solver failed to meet its contract.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// A model admissibility condition was violated (e.g. nonpositive
/// diffusion coefficient, negative bilinear control).
class ModelError : public Error {
 public:
  using Error::Error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidArgument(msg);
}

}  // namespace saacg
