#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqsched {

// Base for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search would exceed its configured work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed instance or rule text; line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A caller-supplied component broke its contract (e.g. a tie rule picked a
// machine that was not tied).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace seqsched
