#pragma once

#include <stdexcept>
#include <string>

namespace goldie {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatches, unparsable literals, rank-deficient bases.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The instance violates a standing assumption (rationality, fiber membership, direct-sum condition).
class AssumptionViolation : public Error {
 public:
  using Error::Error;
};

/// No rational a0 with sum(apex_j eta_j) = a0 * chi_J exists.
class NoDilationAxis : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug or an inconsistent arrangement.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace goldie
