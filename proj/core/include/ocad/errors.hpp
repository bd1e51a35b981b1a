#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ocad {

/// Bad input from the caller: unknown variable, constant where a nonconstant
/// polynomial is required, malformed ordering, and so on.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A polynomial expression that does not match the grammar.
class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InvalidArgument(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A broken internal invariant (inexact division where exactness is
/// guaranteed, a zero resultant between coprime factors, ...).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A projection polynomial vanished identically at a lifting sample point.
/// Open-cell samples avoid every projection root, so this means a kernel bug.
class NongenericSample : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace ocad
