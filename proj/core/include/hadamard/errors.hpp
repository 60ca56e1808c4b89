#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hadamard {

/// Mismatched vector/matrix orders.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input violates a documented precondition (e.g. non-orthogonal matrix
/// passed to seminormalize).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or search would exceed its configured budget.
/// `required` carries the count that would have been needed.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}

  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

/// Matrix text format parse failure, with 1-based line/column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int col)
      : std::runtime_error(what + " (line " + std::to_string(line) +
                           ", col " + std::to_string(col) + ")"),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

}  // namespace hadamard
