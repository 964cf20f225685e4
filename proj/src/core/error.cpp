#include "core/error.hpp"

namespace bdk {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownLabelInPair: return "UnknownLabelInPair";
    case ErrorCode::OverlappingPairs: return "OverlappingPairs";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::MixedIndexSets: return "MixedIndexSets";
    case ErrorCode::ShapeViolation: return "ShapeViolation";
    case ErrorCode::InvolutionDimViolation: return "InvolutionDimViolation";
    case ErrorCode::SquareNotZero: return "SquareNotZero";
    case ErrorCode::IntertwiningViolation: return "IntertwiningViolation";
    case ErrorCode::TriangularityViolation: return "TriangularityViolation";
    case ErrorCode::SigmaDiagonalViolation: return "SigmaDiagonalViolation";
    case ErrorCode::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::SquareFails: return "SquareFails";
    case ErrorCode::NotIso: return "NotIso";
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::Validation: return "Validation";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

Error::Error(ErrorCode code, const std::string& message, std::string row_label,
             std::optional<std::string> col_label)
    : std::runtime_error(message),
      code_(code),
      row_(std::move(row_label)),
      col_(std::move(col_label)) {}

}  // namespace bdk
