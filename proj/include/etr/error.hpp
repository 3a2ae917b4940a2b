// Exception hierarchy shared by every etr module.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace etr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed DSL input. Line and column are 1-based; 0 means unknown.
struct SyntaxError : Error {
  SyntaxError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(Format(msg, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string Format(const std::string& msg, std::size_t line, std::size_t column) {
    if (line == 0) return msg;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
  }

  std::size_t line_;
  std::size_t column_;
};

// A premise shape the engine does not interpret (e.g. a conjunctive antecedent).
struct UnsupportedPremise : Error {
  using Error::Error;
};

// Every alternative was eliminated: the premises contradict each other.
struct AbsurdityError : Error {
  using Error::Error;
};

// Exponential search refused because the input exceeds a configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// The external responder could not be started at all.
struct ResponderError : Error {
  using Error::Error;
};

}  // namespace etr
