#include "mspace/error.hpp"

namespace mspace {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptySpace: return "EmptySpace";
    case Errc::NonSquare: return "NonSquare";
    case Errc::NonFiniteEntry: return "NonFiniteEntry";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::NonZeroDiagonal: return "NonZeroDiagonal";
    case Errc::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case Errc::AsymmetryBeyondTolerance: return "AsymmetryBeyondTolerance";
    case Errc::LabelCountMismatch: return "LabelCountMismatch";
    case Errc::DuplicatePoints: return "DuplicatePoints";
    case Errc::NonFiniteCoordinate: return "NonFiniteCoordinate";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NonPositiveExponent: return "NonPositiveExponent";
    case Errc::InputNotMetric: return "InputNotMetric";
    case Errc::NonPositiveEpsilon: return "NonPositiveEpsilon";
    case Errc::PartitionSpaceMismatch: return "PartitionSpaceMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ConstantTooSmall: return "ConstantTooSmall";
    case Errc::ConstantBelowAudit: return "ConstantBelowAudit";
    case Errc::InvalidEta: return "InvalidEta";
    case Errc::MapRangeError: return "MapRangeError";
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::RepeatedConsecutivePoint: return "RepeatedConsecutivePoint";
    case Errc::NonIncreasingParams: return "NonIncreasingParams";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::TooFewLevels: return "TooFewLevels";
    case Errc::InvalidGrid: return "InvalidGrid";
    case Errc::LevelOutOfRange: return "LevelOutOfRange";
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::LabelMismatch: return "LabelMismatch";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace mspace
