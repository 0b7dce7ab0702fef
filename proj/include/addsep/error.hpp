#pragma once

#include <stdexcept>
#include <string>

namespace addsep {

// Input that violates a mathematical hypothesis (even characteristic,
// f'(0) = 0, reducible modulus, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arithmetic on values that do not live in the same field.
class FieldMismatchError : public std::invalid_argument {
 public:
  FieldMismatchError() : std::invalid_argument("operands belong to different fields") {}
};

class DivisionByZeroError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force routine refused to run because the input exceeds its
// configured size limits.
class GuardrailError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace addsep
