#pragma once

#include <stdexcept>
#include <string>

namespace shiftclass {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated by the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed: a constructed object did not satisfy
/// the property it was built to have.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A division that must be exact left a remainder. Always a bug
/// upstream (wrong tau, wrong composition convention, ...).
class InexactDivision : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

/// sigma * xi = xi * sigma^l has no solution (gcd(l, n) > 1).
class NoSolution : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration requested above the configured degree bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

}  // namespace shiftclass
