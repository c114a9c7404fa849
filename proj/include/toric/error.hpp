#pragma once

#include <stdexcept>
#include <string>

namespace toric {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax or structural problem in fan-file text. Line and column are 1-based;
// zero means "not tied to a position".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

// A precondition on the fan or divisor was violated (not smooth, not a face, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An exact computation produced a value that a theorem says is impossible.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

class RecursionBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ScanRegionError : public Error {
 public:
  using Error::Error;
};

}  // namespace toric
