#pragma once

#include <stdexcept>
#include <string>

namespace g2kit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::string field = {})
      : Error(line ? "line " + std::to_string(line) + (field.empty() ? "" : " (" + field + ")") +
                         ": " + what
                   : what),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// A construction produced something its own postconditions rule out
/// (e.g. an imaginary residue in a tensor that must be real).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Invalid request from a caller, such as an unknown suite or quantity id.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace g2kit
