#pragma once

#include <stdexcept>
#include <string>

namespace qsim {

// Argument outside an operation's domain (index out of range, bad size, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds what the dense/state-vector representation can hold.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A matrix failed its unitarity / stochasticity check.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Norm drift or probability mass loss. Never silently repaired.
class StateCorruptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Period finding / factoring exhausted its attempt budget.
class RecoveryFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Circuit text could not be parsed. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qsim
