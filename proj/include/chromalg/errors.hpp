#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromalg {

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// An input exceeds a configured size limit (exponential state sums).
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace chromalg
