#pragma once

#include <stdexcept>
#include <string>

namespace rir {

enum class ErrorCode {
  PriorNotFullSupport,
  PriorNotNormalized,
  MissingUtilityEntry,
  DimensionMismatch,
  InvalidOutcome,
  GameNotSymmetric,
  TooManyPlayers,
  UnknownAction,
  DimensionCapExceeded,
  ZeroProbabilityRecommendation,
  NotABce,
  NotSeparatedBce,
  RetriesExhausted,
  NotCoherent,
  NotBinaryAction,
  InvalidParams,
  NotSymmetricOutcome,
  InvalidArgument,
  FileNotFound,
  SchemaViolation,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rir
