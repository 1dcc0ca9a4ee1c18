#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace planedp {

enum class ErrorCode {
  MalformedInput,
  NonPlanarRotation,
  DisconnectedInput,
  LoopOrParallelEdge,
  UnknownId,
  LimitExceeded,
  NotAMatching,
  ColorOutsideList,
  UnknownEdge,
  PreconditionViolated,
  LoopCreated,
  MatchingConflict,
  BadS,
  BadPrecoloring,
  TooLarge,
  EulerSumNonzero,
  RuleAmbiguity,
  GenerationFailed,
};

inline std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NonPlanarRotation: return "NonPlanarRotation";
    case ErrorCode::DisconnectedInput: return "DisconnectedInput";
    case ErrorCode::LoopOrParallelEdge: return "LoopOrParallelEdge";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::NotAMatching: return "NotAMatching";
    case ErrorCode::ColorOutsideList: return "ColorOutsideList";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::LoopCreated: return "LoopCreated";
    case ErrorCode::MatchingConflict: return "MatchingConflict";
    case ErrorCode::BadS: return "BadS";
    case ErrorCode::BadPrecoloring: return "BadPrecoloring";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EulerSumNonzero: return "EulerSumNonzero";
    case ErrorCode::RuleAmbiguity: return "RuleAmbiguity";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this type; `code()`
/// identifies the failure class and `what()` carries the details.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace planedp
