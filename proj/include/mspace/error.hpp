#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mspace {

// Every precondition or validation failure in the library maps to one of
// these codes. The CLI turns any mspace::Error into exit status 1.
enum class Errc {
  // space construction
  EmptySpace,
  NonSquare,
  NonFiniteEntry,
  NegativeEntry,
  NonZeroDiagonal,
  ZeroOffDiagonal,
  AsymmetryBeyondTolerance,
  LabelCountMismatch,
  DuplicatePoints,
  NonFiniteCoordinate,
  DimensionMismatch,
  // transforms and analysis
  NonPositiveExponent,
  InputNotMetric,
  NonPositiveEpsilon,
  PartitionSpaceMismatch,
  IndexOutOfRange,
  ConstantTooSmall,
  ConstantBelowAudit,
  InvalidEta,
  MapRangeError,
  EmptySequence,
  RepeatedConsecutivePoint,
  NonIncreasingParams,
  CountMismatch,
  TooFewLevels,
  InvalidGrid,
  // corpus
  LevelOutOfRange,
  DisconnectedGraph,
  LabelMismatch,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mspace
