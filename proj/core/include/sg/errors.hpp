#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sg {

/// Rejected user input: malformed files, invalid parameters, structural
/// preconditions the caller asked for but the object does not satisfy.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is a 0-based byte offset for graph6 and a
/// 1-based line number for DIMACS; `what()` names which one.
class ParseError : public InputError {
public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A computation that should not fail did: failed certificate checks,
/// iteration caps, internal inconsistencies.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace sg
