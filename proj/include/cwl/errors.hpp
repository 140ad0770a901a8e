#pragma once

#include <stdexcept>
#include <string>

namespace cwl {

// Bad input from the caller: out-of-range parameters, mixed moduli,
// malformed words, exceeded budgets.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A condition that the mathematics guarantees was violated. Seeing one of
// these means there is a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A computed result disagrees with a known closed-form classification.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cwl
