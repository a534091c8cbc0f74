#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jrainbow {

/// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument or value violates a documented range or structural invariant.
struct ValidationError : Error {
  using Error::Error;
};

/// Malformed input text. `line()` is 1-based; 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Solver entry points reject disconnected inputs with this.
struct ConnectivityError : Error {
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured assignment budget.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace jrainbow
