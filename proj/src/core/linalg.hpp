#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "core/exactfield.hpp"

namespace bdk {

/// Dense row-major matrix over a FieldSpec. Either dimension may be zero.
class DenseMatrix {
 public:
  explicit DenseMatrix(FieldSpec field = {}, std::size_t rows = 0, std::size_t cols = 0);

  static DenseMatrix identity(FieldSpec field, std::size_t n);
  /// Convenience constructor from integer literals (reduced into the field).
  static DenseMatrix from_rows(FieldSpec field,
                               std::initializer_list<std::initializer_list<long long>> rows);
  /// Stacks equal-length column vectors side by side.
  static DenseMatrix from_columns(FieldSpec field, std::size_t length,
                                  std::span<const DenseMatrix> columns);

  FieldSpec field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);

  bool is_zero() const;
  bool is_identity() const;

  DenseMatrix transposed() const;
  DenseMatrix negated() const;
  DenseMatrix scaled(const Scalar& factor) const;
  DenseMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const DenseMatrix& src);
  DenseMatrix column(std::size_t c) const;

  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

  // Typed storage for the elimination kernels; Ops is a detail:: policy.
  template <class Ops>
  std::vector<typename Ops::value_type>& raw() {
    return std::get<std::vector<typename Ops::value_type>>(data_);
  }
  template <class Ops>
  const std::vector<typename Ops::value_type>& raw() const {
    return std::get<std::vector<typename Ops::value_type>>(data_);
  }

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::variant<std::vector<std::uint32_t>, std::vector<mpq_class>> data_;
};

/// Throws DimensionMismatch or MixedFields.
DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);

struct RrefResult {
  DenseMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Reduced row echelon form; the pivot is the first nonzero entry found
/// scanning down the column.
RrefResult rref(DenseMatrix a);

struct AffineSolution {
  DenseMatrix particular;             // free variables set to zero
  std::vector<DenseMatrix> kernel;    // basis of {x : A x = 0}
};

/// Solves A x = b for a column b. Absent when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const DenseMatrix& a, const DenseMatrix& b);

/// Same particular solution as solve_affine, without building the kernel.
std::optional<DenseMatrix> solve_particular(const DenseMatrix& a, const DenseMatrix& b);

std::vector<DenseMatrix> nullspace(const DenseMatrix& a);

/// Throws NotSquare. Absent iff the matrix is singular.
std::optional<DenseMatrix> mat_inverse(const DenseMatrix& a);

/// Basis (RREF rows, as columns) of the span of the given columns.
std::vector<DenseMatrix> column_space(FieldSpec field, std::size_t length,
                                      std::span<const DenseMatrix> columns);

/// Basis of span(u) ∩ span(v) via the kernel of [U | V].
std::vector<DenseMatrix> subspace_intersect(std::span<const DenseMatrix> u,
                                            std::span<const DenseMatrix> v);

}  // namespace bdk
