#pragma once

#include <stdexcept>
#include <string>

namespace polypart {

/// Geometric input that violates a structural invariant (self-intersection,
/// zero area, bad rotation pair, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  explicit ParseError(const std::string& message)
      : std::runtime_error(message), line_(0) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace polypart
