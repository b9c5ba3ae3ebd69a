#pragma once

#include <stdexcept>
#include <string>

namespace tourney {

/// Malformed or out-of-range input supplied by the caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input text that failed to parse, with its 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A computed result contradicts a proven identity. Always a bug or a
/// tolerance that is too tight, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tourney
