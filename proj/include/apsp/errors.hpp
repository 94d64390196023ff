#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apsp {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based, 0 when the error is not
/// tied to a line (e.g. empty input).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A graph or matrix violates a structural invariant.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The exponential encoding would exceed the exponent range of the float
/// width in use.
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

/// A product entry cannot be mapped back to a distance.
class DecodeError : public Error {
 public:
  enum class Kind { kNegativeEntry, kNonFinite, kOutOfRange };
  DecodeError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace apsp
