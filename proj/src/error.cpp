#include "nullkit/error.hpp"

namespace nullkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::ReducibleMinPoly: return "ReducibleMinPoly";
    case ErrorKind::TowerTooLarge: return "TowerTooLarge";
    case ErrorKind::BadField: return "BadField";
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::BadVariableIndex: return "BadVariableIndex";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::BadVariableCount: return "BadVariableCount";
    case ErrorKind::ImproperIdeal: return "ImproperIdeal";
    case ErrorKind::InfiniteDimension: return "InfiniteDimension";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotMonicInVariable: return "NotMonicInVariable";
    case ErrorKind::BothConstant: return "BothConstant";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::UnivariateRing: return "UnivariateRing";
    case ErrorKind::BaseTooSmall: return "BaseTooSmall";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::ZeroClass: return "ZeroClass";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace nullkit
