#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace irreality {

enum class ErrorCode {
  InvalidDims,
  DimensionOverflow,
  DimensionMismatch,
  InvalidSubsystemIndex,
  NotHermitian,
  TraceNotOne,
  NotPositive,
  NotNormalized,
  NotOrthonormal,
  NotADistribution,
  InvalidRank,
  InvalidIntensity,
  InvalidOutcome,
  ZeroProbabilityOutcome,
  InvalidBipartition,
  InvalidTolerance,
  NotARealityState,
  NotUnbiased,
  DegenerateGram,
  PacketTooWide,
  InvalidParameter,
  UnknownScenario,
  ConfigParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDims: return "InvalidDims";
    case ErrorCode::DimensionOverflow: return "DimensionOverflow";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidSubsystemIndex: return "InvalidSubsystemIndex";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::NotADistribution: return "NotADistribution";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::InvalidIntensity: return "InvalidIntensity";
    case ErrorCode::InvalidOutcome: return "InvalidOutcome";
    case ErrorCode::ZeroProbabilityOutcome: return "ZeroProbabilityOutcome";
    case ErrorCode::InvalidBipartition: return "InvalidBipartition";
    case ErrorCode::InvalidTolerance: return "InvalidTolerance";
    case ErrorCode::NotARealityState: return "NotARealityState";
    case ErrorCode::NotUnbiased: return "NotUnbiased";
    case ErrorCode::DegenerateGram: return "DegenerateGram";
    case ErrorCode::PacketTooWide: return "PacketTooWide";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
    case ErrorCode::ConfigParseError: return "ConfigParseError";
  }
  return "Unknown";
}

/// Library failure. Carries a machine-checkable code and, for tolerance
/// violations, the measured deviation that tripped the check.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, double deviation = 0.0)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        deviation_(deviation) {}

  ErrorCode code() const noexcept { return code_; }
  double deviation() const noexcept { return deviation_; }

 private:
  ErrorCode code_;
  double deviation_;
};

}  // namespace irreality
