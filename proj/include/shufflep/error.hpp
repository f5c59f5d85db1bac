#pragma once

#include <stdexcept>
#include <string>

namespace shufflep {

// Base class for every error raised by the library. The what() text is the
// message the CLI prints verbatim.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two elements/series from different field contexts were mixed.
class FieldMismatchError : public Error {
public:
  FieldMismatchError() : Error("field mismatch") {}
};

class DivisionByZeroError : public Error {
public:
  DivisionByZeroError() : Error("division by zero") {}
};

// exact_div_p saw a coordinate not divisible by p. Signals an implementation
// bug, not a user error.
class InexactDivisionError : public Error {
public:
  InexactDivisionError() : Error("inexact division") {}
};

// A truncated series ran out of known coefficients (tau of an order-1 series,
// kernel closure falling below the dependence-detection floor, ...).
class OrderExhaustedError : public Error {
public:
  OrderExhaustedError() : Error("order exhausted") {}
  explicit OrderExhaustedError(const std::string& detail)
      : Error("order exhausted: " + detail) {}
};

// An operation needs more coefficients than the input carries.
class InsufficientOrderError : public Error {
public:
  explicit InsufficientOrderError(const std::string& detail)
      : Error("insufficient order: " + detail) {}
};

// Argument outside the operation's domain (wrong constant term, zero
// generator, k out of range, ...).
class DomainError : public Error {
public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A search bound was hit (kernel dimension, exp budget).
class BudgetError : public Error {
public:
  explicit BudgetError(const std::string& msg) : Error(msg) {}
};

// Malformed textual input.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& detail)
      : Error("parse error: " + detail) {}
};

}  // namespace shufflep
