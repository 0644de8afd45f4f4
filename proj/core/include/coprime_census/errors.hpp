#pragma once

#include <stdexcept>
#include <string>

namespace coprime_census {

// Bad input or a violated precondition. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested computation exceeds a configured enumeration budget.
// The CLI maps this to exit code 3 when the backend was forced.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An Euler factor came out nonpositive during density evaluation; carries the
// offending degree so callers can report it.
class EulerFactorError : public std::runtime_error {
 public:
  EulerFactorError(const std::string& msg, int degree)
      : std::runtime_error(msg), degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

// A request needs tighter arithmetic than the working precision can certify.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coprime_census
