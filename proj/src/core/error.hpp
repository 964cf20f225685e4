#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bdk {

enum class ErrorCode {
  InvalidArgument,
  MixedFields,
  DivisionByZero,
  DimensionMismatch,
  NotSquare,
  InvalidLabel,
  DuplicateLabel,
  UnknownLabelInPair,
  OverlappingPairs,
  UnknownLabel,
  MixedIndexSets,
  ShapeViolation,
  InvolutionDimViolation,
  SquareNotZero,
  IntertwiningViolation,
  TriangularityViolation,
  SigmaDiagonalViolation,
  SourceTargetMismatch,
  InvalidWitness,
  Degenerate,
  SquareFails,
  NotIso,
  Syntax,
  Validation,
  NotFound,
  Io,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library. Violations of the defining
/// conditions of objects and morphisms carry the offending block position
/// as index labels; triangle certificates carry the failing cell number.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  Error(ErrorCode code, const std::string& message, std::string row_label,
        std::optional<std::string> col_label = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<std::string>& row_label() const noexcept { return row_; }
  const std::optional<std::string>& col_label() const noexcept { return col_; }

  int cell() const noexcept { return cell_; }
  Error& with_cell(int cell) {
    cell_ = cell;
    return *this;
  }

 private:
  ErrorCode code_;
  std::optional<std::string> row_;
  std::optional<std::string> col_;
  int cell_ = 0;
};

}  // namespace bdk
