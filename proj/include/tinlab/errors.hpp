#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tinlab {

// Malformed or out-of-range arguments to a library operation.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The decomposition's independence number exceeds the caller's state budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant (or a property algebra's contract) was broken.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An oracle or exact search was asked to run beyond its size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File format error; `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tinlab
