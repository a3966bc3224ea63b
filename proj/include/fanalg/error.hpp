#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fanalg {

// Precondition violations on mathematical inputs: field mismatch, unknown
// variable, missing assignment, malformed index sets.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed text input. line/column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(format(message, line, column)), message_(message), line_(line), column_(column) {}

  // The message without the position suffix.
  const std::string& message() const { return message_; }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fanalg
