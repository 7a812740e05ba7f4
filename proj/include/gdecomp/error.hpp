#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gdecomp {

enum class ErrorCode {
  InvalidIndexSet,
  OrderMismatch,
  InvalidPartition,
  NotMember,
  NotExtreme,
  IsExtreme,
  InternalInvariantViolation,
  AsymmetricInput,
  NegativeEntry,
  ParseError,
  CapExceeded,
  NotOnGrid,
  DiagonalOverflow,
  LengthMismatch,
  NotStochastic,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidIndexSet: return "InvalidIndexSet";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::NotExtreme: return "NotExtreme";
    case ErrorCode::IsExtreme: return "IsExtreme";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::AsymmetricInput: return "AsymmetricInput";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotOnGrid: return "NotOnGrid";
    case ErrorCode::DiagonalOverflow: return "DiagonalOverflow";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotStochastic: return "NotStochastic";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception type;
/// callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gdecomp
