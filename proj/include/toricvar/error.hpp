#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricvar {

// Stable error codes. The names are part of the CLI contract (docs/report.md).
enum class ErrorCode {
  InvalidInput,
  LengthMismatch,
  NonPrimitiveGenerator,
  RankDeficientFan,
  NoLift,
  NotInterior,
  NotOnWall,
  NotGeneric,
  NotAdjacent,
  SameChamber,
  NonAdjacentChambers,
  NotSimple,
  SingularAlpha,
  TooManyHyperplanes,
  DimensionTooLarge,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonPrimitiveGenerator: return "NonPrimitiveGenerator";
    case ErrorCode::RankDeficientFan: return "RankDeficientFan";
    case ErrorCode::NoLift: return "NoLift";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::NotOnWall: return "NotOnWall";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::SameChamber: return "SameChamber";
    case ErrorCode::NonAdjacentChambers: return "NonAdjacentChambers";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::SingularAlpha: return "SingularAlpha";
    case ErrorCode::TooManyHyperplanes: return "TooManyHyperplanes";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
  }
  return "Unknown";
}

// Input validation problems map to CLI exit code 2, everything else to 3.
constexpr bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput:
    case ErrorCode::LengthMismatch:
    case ErrorCode::NonPrimitiveGenerator:
    case ErrorCode::RankDeficientFan:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toricvar
