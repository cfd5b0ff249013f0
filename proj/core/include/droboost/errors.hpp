#pragma once

#include <stdexcept>
#include <string>

namespace droboost {

// Error categories double as machine-readable identifiers for CLI exit codes
// and stderr tags.
enum class ErrorCategory {
  validation,  // value outside its documented domain
  ordering,    // frames (or stream items) arrived out of order
  parse,       // malformed input file
  io,          // filesystem failure
};

inline const char* to_string(ErrorCategory cat) {
  switch (cat) {
    case ErrorCategory::validation: return "validation";
    case ErrorCategory::ordering: return "ordering";
    case ErrorCategory::parse: return "parse";
    case ErrorCategory::io: return "io";
  }
  return "unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const { return category_; }

private:
  ErrorCategory category_;
};

class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& message)
      : Error(ErrorCategory::validation, message) {}
};

class OrderingError : public Error {
public:
  explicit OrderingError(const std::string& message)
      : Error(ErrorCategory::ordering, message) {}
};

// Carries the 1-based line number of the offending record.
class ParseError : public Error {
public:
  ParseError(int line, const std::string& message)
      : Error(ErrorCategory::parse, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

private:
  int line_ = 0;
};

class IoError : public Error {
public:
  explicit IoError(const std::string& message)
      : Error(ErrorCategory::io, message) {}
};

}  // namespace droboost
