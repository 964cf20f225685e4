#pragma once

// Flattening of block-matrix unknowns into one dense linear system.
//
// Unknown matrices (morphisms, kappa-matrices) share one structural shape:
// blocks strictly below the diagonal are zero and the diagonal block at i
// is the same variable set as the one at sigma(i). Variables are numbered
// in row-major order of the flattened matrix; a sigma-tied diagonal block
// reuses the numbering of its earlier partner. Equations for a product
// term M = L X or M = X R are numbered row-major over M.

#include <cstddef>
#include <vector>

#include "core/blockrep.hpp"

namespace bdk {

class UnknownLayout {
 public:
  UnknownLayout(const DimVector& rows, const DimVector& cols);

  std::size_t size() const noexcept { return count_; }
  std::size_t rows() const noexcept { return rows_.total(); }
  std::size_t cols() const noexcept { return cols_.total(); }
  const DimVector& row_dims() const noexcept { return rows_; }
  const DimVector& col_dims() const noexcept { return cols_; }

  /// Variable at flat position (r, c), or -1 when structurally zero.
  std::ptrdiff_t var(std::size_t r, std::size_t c) const { return var_[r * cols() + c]; }

  /// Rebuilds the block matrix from solution entries [offset, offset+size()).
  BlockMatrix assemble(const DenseMatrix& solution, std::size_t offset) const;

 private:
  DimVector rows_;
  DimVector cols_;
  std::vector<std::ptrdiff_t> var_;
  std::size_t count_ = 0;
};

class SystemBuilder {
 public:
  SystemBuilder(FieldSpec field, std::size_t equations, std::size_t unknowns);

  /// Adds sign * (L X) to the equations starting at eq_offset.
  void left_product(std::size_t eq_offset, const DenseMatrix& left, const UnknownLayout& x,
                    std::size_t var_offset, int sign);
  /// Adds sign * (X R) to the equations starting at eq_offset.
  void right_product(std::size_t eq_offset, const UnknownLayout& x, std::size_t var_offset,
                     const DenseMatrix& right, int sign);
  /// Sets the right-hand side for equations starting at eq_offset to M (row-major).
  void set_rhs(std::size_t eq_offset, const DenseMatrix& m);

  const DenseMatrix& matrix() const noexcept { return a_; }
  const DenseMatrix& rhs() const noexcept { return b_; }

 private:
  DenseMatrix a_;
  DenseMatrix b_;
};

}  // namespace bdk
