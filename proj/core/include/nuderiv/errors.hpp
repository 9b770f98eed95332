#pragma once

#include <stdexcept>

namespace nuderiv {

/// Raised when a series exhausts its term or coefficient budget before the
/// stopping rule fires.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an argument lands on a pole of a reciprocal Pochhammer symbol.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace nuderiv
