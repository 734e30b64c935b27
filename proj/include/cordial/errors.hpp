#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cordial {

/// A search or canonicalization was asked to exceed its size cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed text input; line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A constructor produced data that does not re-check as cordial.
class ValidationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cordial
