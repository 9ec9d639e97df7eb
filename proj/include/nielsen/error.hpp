#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nielsen {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  Singular,
  InfiniteIndex,
  NotEquivariant,
  Ambiguous,
  NotCommuting,
  Collision,
  RowsNotCongruent,
  NotInStabilizer,
  InfiniteClasses,
  SingularLinearPart,
  NonIntegralResult,
  UndefinedIndex,
  IndexNotUniform,
  BudgetExceeded,
  NoEssentialVertex,
  CollisionDetected,
  IllegalMove,
  ParseError,
};

std::string_view error_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch on the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::InfiniteIndex: return "InfiniteIndex";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::Ambiguous: return "Ambiguous";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::Collision: return "Collision";
    case ErrorCode::RowsNotCongruent: return "RowsNotCongruent";
    case ErrorCode::NotInStabilizer: return "NotInStabilizer";
    case ErrorCode::InfiniteClasses: return "InfiniteClasses";
    case ErrorCode::SingularLinearPart: return "SingularLinearPart";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::UndefinedIndex: return "UndefinedIndex";
    case ErrorCode::IndexNotUniform: return "IndexNotUniform";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NoEssentialVertex: return "NoEssentialVertex";
    case ErrorCode::CollisionDetected: return "CollisionDetected";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace nielsen
