#pragma once

#include <stdexcept>
#include <string>

namespace hlc {

// Argument outside an operation's documented domain (n = 0, limit < 2, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Query outside the range covered by a PrimeTable or another bounded resource.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Request would exceed a configured memory or exhaustive-scan budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A strongly multiplicative function has no value at a requested prime.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Dirichlet inverse requested for a function with f(1) != 1.
class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The unit-sum closed form produced a non-integral value for this modulus.
class FormulaDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hlc
