#pragma once

#include <stdexcept>
#include <string>

namespace tn {

/// Invalid input, cap violation or unsupported request. The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap (variables, degree, DNF size) was exceeded.
class CapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// McCallum projection met a nullified factor where its lifting is not valid.
class NotWellOriented : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An internal invariant was violated. Always a bug; the CLI maps it to exit code 2.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tn
