#pragma once

#include <stdexcept>
#include <string>

namespace ainf {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Structurally invalid mathematical input (d^2 != 0, non-closed ideal,
/// non-direct decomposition, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A computation needs degrees beyond the truncation of the algebra.
class CapError : public Error {
 public:
  CapError(const std::string& message, int required_cap)
      : Error(message + " (minimal sufficient degree cap: " + std::to_string(required_cap) + ")"),
        required_cap_(required_cap) {}

  int required_cap() const { return required_cap_; }

 private:
  int required_cap_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ainf
