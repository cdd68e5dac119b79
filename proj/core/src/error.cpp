#include "rirobust/error.hpp"

namespace rir {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::PriorNotFullSupport: return "PriorNotFullSupport";
    case ErrorCode::PriorNotNormalized: return "PriorNotNormalized";
    case ErrorCode::MissingUtilityEntry: return "MissingUtilityEntry";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidOutcome: return "InvalidOutcome";
    case ErrorCode::GameNotSymmetric: return "GameNotSymmetric";
    case ErrorCode::TooManyPlayers: return "TooManyPlayers";
    case ErrorCode::UnknownAction: return "UnknownAction";
    case ErrorCode::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorCode::ZeroProbabilityRecommendation: return "ZeroProbabilityRecommendation";
    case ErrorCode::NotABce: return "NotABce";
    case ErrorCode::NotSeparatedBce: return "NotSeparatedBce";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::NotCoherent: return "NotCoherent";
    case ErrorCode::NotBinaryAction: return "NotBinaryAction";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotSymmetricOutcome: return "NotSymmetricOutcome";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
  }
  return "Unknown";
}

}  // namespace rir
