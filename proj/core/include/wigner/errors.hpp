#pragma once

#include <stdexcept>
#include <string>

namespace wigner {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation requested outside a formula's mathematical domain
/// (beyond a support boundary, past a density cutoff, radicand <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exponent argument exceeded the safe range. Saturating instead would
/// silently corrupt downstream quadrature, so this is always an error.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An iterative scheme (adaptive quadrature, root bracketing) failed to
/// converge within its budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameters or configuration, including unsupported parameter
/// classes (e.g. the B == 0 ansatz family).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace wigner
