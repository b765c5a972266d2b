#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loopforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or problem file. `position` is a byte offset
/// into the parsed text (or a 1-based line number for problem files).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ContextMismatch : public Error {
 public:
  ContextMismatch() : Error("polynomials live in different variable contexts") {}
};

class TimeLimitExceeded : public Error {
 public:
  TimeLimitExceeded() : Error("time limit exceeded") {}
};

}  // namespace loopforge
