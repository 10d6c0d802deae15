#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heartproof {

enum class ErrorCode {
  ZeroInverse,
  InvalidField,
  UnsupportedDegree,
  TooLarge,
  NotSubgroup,
  InvalidPermutation,
  RandomnessExhausted,
  GroupMismatch,
  BadCongruence,
  HypothesisViolated,
  NotApplicable,
  NotDivisible,
  BadReduction,
  InvalidScenario,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (notably the CLI) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::RandomnessExhausted: return "RandomnessExhausted";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::BadCongruence: return "BadCongruence";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::InvalidScenario: return "InvalidScenario";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace heartproof
