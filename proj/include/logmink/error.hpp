#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logmink {

enum class ErrorCode {
  kInvalidInput,
  kSingularMap,
  kUnboundedShape,
  kDegenerateShape,
  kDimensionMismatch,
  kAsymmetricInput,
  kInvalidP,
  kNonpositiveSupport,
  kSubspaceNotComplementary,
  kNoDescent,
};

/// Stable machine-readable name, e.g. "UnboundedShape".
std::string_view error_name(ErrorCode code);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace logmink
