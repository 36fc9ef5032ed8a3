#pragma once

#include <stdexcept>
#include <string>

namespace tumax {

// Base of every error raised by the library. The CLI maps subclasses to exit
// codes, so new error kinds should derive from the closest existing one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed-width integer arithmetic would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Caller passed arguments of the wrong shape (mismatched sizes, bad indices).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed text input; carries a 1-based line/column position.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : UsageError(what + " (line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ")"),
        detail_(what),
        line_(line),
        column_(column) {}

  const std::string& detail() const noexcept { return detail_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

// Input is well-formed but violates an operation's precondition
// (rank deficiency, non-TU factor, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exhaustive method would exceed its configured work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Graph input is not of the required shape (not a tree, not bipartite, ...).
class StructureError : public Error {
 public:
  using Error::Error;
};

// A supplied witness does not reproduce the object it claims to realize.
class WitnessMismatch : public Error {
 public:
  using Error::Error;
};

// A composition spec violates the block-sum definitions.
class SpecError : public Error {
 public:
  using Error::Error;
};

// A lemma hypothesis required by a transport rule is not met.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// Argument outside a function's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace tumax
