#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arborslope {

enum class ErrorCode {
  Overflow,
  ZeroDenominator,
  EmptyInput,
  UnbalancedParens,
  UnexpectedToken,
  InvalidLeaf,
  FamilyRange,
  DegeneratePoint,
  FractionalEndpoint,
  MismatchedWeights,
  UndefinedCase,
  CasePreconditionViolated,
  SeifertUndefined,
  UnsupportedShape,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::UnbalancedParens: return "UnbalancedParens";
    case ErrorCode::UnexpectedToken: return "UnexpectedToken";
    case ErrorCode::InvalidLeaf: return "InvalidLeaf";
    case ErrorCode::FamilyRange: return "FamilyRange";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::FractionalEndpoint: return "FractionalEndpoint";
    case ErrorCode::MismatchedWeights: return "MismatchedWeights";
    case ErrorCode::UndefinedCase: return "UndefinedCase";
    case ErrorCode::CasePreconditionViolated: return "CasePreconditionViolated";
    case ErrorCode::SeifertUndefined: return "SeifertUndefined";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the expression parser; `position()` is the 0-based offset of
/// the offending token in the input text.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& what)
      : Error(code, what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace arborslope
