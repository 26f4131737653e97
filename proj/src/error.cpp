#include "logmink/error.hpp"

namespace logmink {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kSingularMap: return "SingularMap";
    case ErrorCode::kUnboundedShape: return "UnboundedShape";
    case ErrorCode::kDegenerateShape: return "DegenerateShape";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kAsymmetricInput: return "AsymmetricInput";
    case ErrorCode::kInvalidP: return "InvalidP";
    case ErrorCode::kNonpositiveSupport: return "NonpositiveSupport";
    case ErrorCode::kSubspaceNotComplementary: return "SubspaceNotComplementary";
    case ErrorCode::kNoDescent: return "NoDescent";
  }
  return "Unknown";
}

}  // namespace logmink
