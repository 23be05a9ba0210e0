#include "horo/error.hpp"

namespace horo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidCone: return "InvalidCone";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kNotInFiber: return "NotInFiber";
    case ErrorCode::kZeroScale: return "ZeroScale";
    case ErrorCode::kUnsupportedDim: return "UnsupportedDim";
    case ErrorCode::kNotInXiPlus: return "NotInXiPlus";
    case ErrorCode::kNotOnBoundary: return "NotOnBoundary";
    case ErrorCode::kAbelDivergence: return "AbelDivergence";
    case ErrorCode::kAliasingSuspected: return "AliasingSuspected";
    case ErrorCode::kNegativeModeEnergy: return "NegativeModeEnergy";
    case ErrorCode::kImaginaryResidual: return "ImaginaryResidual";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace horo
