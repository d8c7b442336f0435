#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace evokit {

enum class ErrorCode {
  NonPrimeModulus,
  EvenCharacteristic,
  UnsupportedModulus,
  DivisionByZero,
  FieldMismatch,
  DimensionMismatch,
  SingularMatrix,
  NotNilpotent,
  ZeroGramEntry,
  ZeroVectorU,
  ZeroC,
  BadShape,
  PatternViolation,
  IncompatibleChains,
  NonCoordinateChain,
  BudgetExceeded,
  InfiniteFieldUnsupported,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::UnsupportedModulus: return "UnsupportedModulus";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::ZeroGramEntry: return "ZeroGramEntry";
    case ErrorCode::ZeroVectorU: return "ZeroVectorU";
    case ErrorCode::ZeroC: return "ZeroC";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::PatternViolation: return "PatternViolation";
    case ErrorCode::IncompatibleChains: return "IncompatibleChains";
    case ErrorCode::NonCoordinateChain: return "NonCoordinateChain";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InfiniteFieldUnsupported: return "InfiniteFieldUnsupported";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace evokit
