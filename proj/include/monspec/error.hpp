#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monspec {

/// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed tables, law violations, caps, parse errors.
class InputError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An internal consistency check failed. Never caused by valid input.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace monspec
