#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nullkit {

enum class ErrorKind {
  MixedFields,
  DivisionByZero,
  NotMonic,
  ReducibleMinPoly,
  TowerTooLarge,
  BadField,
  MixedRings,
  ZeroPolynomial,
  BadVariableIndex,
  ArityMismatch,
  BadVariableCount,
  ImproperIdeal,
  InfiniteDimension,
  NotSquare,
  NotMonicInVariable,
  BothConstant,
  HypothesisViolation,
  ConstantPolynomial,
  UnivariateRing,
  BaseTooSmall,
  UnsupportedField,
  ZeroDivisor,
  ZeroClass,
  BudgetExceeded,
  ParseError,
  UnknownVariable,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library is an Error tagged with its kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

// Broken internal invariant; always a bug, never bad input.
[[noreturn]] inline void internal_error(const std::string& what) {
  throw Error(ErrorKind::Internal, what);
}

}  // namespace nullkit
