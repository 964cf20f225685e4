#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "core/exactfield.hpp"
#include "core/linalg.hpp"
#include "core/posetidx.hpp"

namespace bdk {

/// One band size per index. A single number per index suffices because an
/// object's row and column partitions must agree.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(IndexSetPtr idx);  // all zero
  DimVector(IndexSetPtr idx, std::vector<std::size_t> dims);

  const IndexSetPtr& index_set() const noexcept { return idx_; }
  std::size_t size() const noexcept { return dims_.size(); }
  std::size_t operator[](std::size_t pos) const { return dims_.at(pos); }
  const std::vector<std::size_t>& values() const noexcept { return dims_; }

  /// Start of band `pos` in the flattened order.
  std::size_t offset(std::size_t pos) const { return offsets_.at(pos); }
  std::size_t total() const noexcept { return offsets_.empty() ? 0 : offsets_.back(); }
  /// Positions with nonzero dimension, in declared order.
  std::vector<std::size_t> support() const;

  friend DimVector operator+(const DimVector& a, const DimVector& b);
  friend bool operator==(const DimVector& a, const DimVector& b);

 private:
  void compute_offsets();

  IndexSetPtr idx_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;  // size()+1 entries
};

/// Block matrix indexed by an IndexSet. Block (i, j) has shape
/// rows[i] x cols[j]; zero blocks are not stored.
class BlockMatrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  BlockMatrix() = default;
  BlockMatrix(FieldSpec field, DimVector rows, DimVector cols);

  static BlockMatrix identity(FieldSpec field, const DimVector& dims);
  static BlockMatrix from_flat(const DenseMatrix& flat, DimVector rows, DimVector cols);

  FieldSpec field() const noexcept { return field_; }
  const DimVector& row_dims() const noexcept { return rows_; }
  const DimVector& col_dims() const noexcept { return cols_; }
  const std::map<Key, DenseMatrix>& blocks() const noexcept { return blocks_; }

  /// Stored block or nullptr when the block is zero.
  const DenseMatrix* find(std::size_t i, std::size_t j) const;
  DenseMatrix block(std::size_t i, std::size_t j) const;
  /// Throws ShapeViolation when the block does not have the declared shape.
  void set_block(std::size_t i, std::size_t j, DenseMatrix m);

  DenseMatrix flatten() const;
  bool is_zero() const noexcept { return blocks_.empty(); }

  BlockMatrix negated() const;
  BlockMatrix scaled(const Scalar& s) const;

  friend BlockMatrix operator+(const BlockMatrix& a, const BlockMatrix& b);
  friend BlockMatrix operator-(const BlockMatrix& a, const BlockMatrix& b);
  /// Blockwise product; throws DimensionMismatch on incompatible partitions.
  friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b);
  friend bool operator==(const BlockMatrix& a, const BlockMatrix& b);

 private:
  FieldSpec field_;
  DimVector rows_;
  DimVector cols_;
  std::map<Key, DenseMatrix> blocks_;
};

/// An object of s(Y, k): a square block matrix B with B^2 = 0 whose band
/// sizes agree on sigma-orbits. Only check_object creates one.
class Representation {
 public:
  Representation() = default;

  const DimVector& dims() const { return data_->dims; }
  const BlockMatrix& matrix() const { return data_->matrix; }
  FieldSpec field() const { return data_->matrix.field(); }
  const IndexSetPtr& index_set() const { return data_->dims.index_set(); }

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  struct Data {
    DimVector dims;
    BlockMatrix matrix;
  };
  friend Representation check_object(const DimVector& dims, const BlockMatrix& b);

  std::shared_ptr<const Data> data_;
};

/// A morphism B -> C: T with T C = B T, block upper triangular, and
/// sigma-tied diagonal blocks. Composition is in diagram order: T then U
/// is the matrix product T U.
class Morphism {
 public:
  Morphism() = default;

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  const BlockMatrix& matrix() const { return matrix_; }
  FieldSpec field() const { return matrix_.field(); }

  friend Morphism operator+(const Morphism& a, const Morphism& b);
  friend Morphism operator-(const Morphism& a, const Morphism& b);
  Morphism operator-() const;
  Morphism scaled(const Scalar& s) const;

  friend bool operator==(const Morphism& a, const Morphism& b);

 private:
  friend Morphism check_morphism(const BlockMatrix& t, const Representation& src,
                                 const Representation& tgt);
  Representation source_;
  Representation target_;
  BlockMatrix matrix_;
};

/// Validates object conditions in order: partition shape, equal band sizes
/// on sigma-orbits, B^2 = 0. Throws ShapeViolation(i, j),
/// InvolutionDimViolation(i) or SquareNotZero(i, j).
Representation check_object(const DimVector& dims, const BlockMatrix& b);

/// Validates morphism conditions in order: shape, triangularity, sigma-tied
/// diagonal, intertwining. Throws MixedFields, MixedIndexSets,
/// ShapeViolation, TriangularityViolation(i, j), SigmaDiagonalViolation(i)
/// or IntertwiningViolation(i, j).
Morphism check_morphism(const BlockMatrix& t, const Representation& src, const Representation& tgt);

Morphism identity(const Representation& b);
Morphism zero_morphism(const Representation& b, const Representation& c);
/// Throws SourceTargetMismatch unless t.target() == u.source().
Morphism compose(const Morphism& t, const Morphism& u);

/// Basis of Hom(B, C), one morphism per free variable of the RREF.
std::vector<Morphism> hom_basis(const Representation& b, const Representation& c);

Representation zero_object(const IndexSetPtr& idx, FieldSpec field);

/// True iff source and target dims agree and every diagonal block is invertible.
bool is_strict_iso(const Morphism& t);

/// Shared precondition for binary constructions. Throws MixedFields or
/// MixedIndexSets.
void require_compatible(const Representation& a, const Representation& b);

/// Label of band position `pos`, for messages.
std::string band_label(const DimVector& dims, std::size_t pos);

}  // namespace bdk
