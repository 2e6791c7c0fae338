#pragma once

#include <stdexcept>
#include <string>

namespace reachsat {

// A caller passed arguments outside an operation's documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph description handed to an encoder (unknown endpoint,
// duplicate edge, ...).
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A model does not decode into the structure the encoding promises.
// Always an encoder bug, never a user error.
class EncodingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Input text could not be parsed. Line and column are 1-based; 0 means
// "not applicable".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  int line_;
  int column_;
};

}  // namespace reachsat
