#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyflow {

/// Argument outside the documented domain of an operation.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operand shapes (vertex count, dimension) do not agree.
class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact integer result does not fit the 64-bit budget.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Floating evaluation would leave the representable range (e.g. ancient
/// solutions far back in time).
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// The request has no meaningful answer for this input (e.g. the limit shape
/// of a constant polygon).
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed polygon input. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace polyflow
