#pragma once

#include <stdexcept>
#include <string>

namespace padicvol {

/// Raised when an argument lies outside the domain of an operation
/// (β > n in a q-binomial, a root of the denominator passed to evaluate, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A germ fit whose held-out verification failed. Carries the first
/// sample point where the fitted expansion disagreed with the sequence.
class FitError : public std::runtime_error {
 public:
  FitError(const std::string& what, long first_mismatch)
      : std::runtime_error(what), first_mismatch_(first_mismatch) {}
  long first_mismatch() const noexcept { return first_mismatch_; }

 private:
  long first_mismatch_;
};

/// A determinant that must be nonzero vanished (the input pair was not
/// strongly regular).
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad verification config: unknown suite, or a guardrail violation.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace padicvol
