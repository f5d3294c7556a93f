#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vincular {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position()` is the 0-based offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that violates a type invariant (e.g. a non-reduced pattern).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A counting cell would exceed the configured k^n cap.
class GuardrailError : public Error {
 public:
  GuardrailError(const std::string& message, unsigned long long bound)
      : Error(message), bound_(bound) {}

  unsigned long long bound() const noexcept { return bound_; }

 private:
  unsigned long long bound_;
};

/// Input outside the domain of a map or formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Internal inconsistency detected while evaluating a formula
/// (non-removable zero denominator, disagreeing routes, non-integral count).
class FormulaError : public Error {
 public:
  using Error::Error;
};

}  // namespace vincular
