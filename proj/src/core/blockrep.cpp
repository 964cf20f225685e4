#include "core/blockrep.hpp"

#include "core/error.hpp"
#include "core/linsys.hpp"

namespace bdk {

// ---- DimVector ----

DimVector::DimVector(IndexSetPtr idx) : idx_(std::move(idx)) {
  dims_.assign(idx_ ? idx_->size() : 0, 0);
  compute_offsets();
}

DimVector::DimVector(IndexSetPtr idx, std::vector<std::size_t> dims)
    : idx_(std::move(idx)), dims_(std::move(dims)) {
  if (!idx_ || dims_.size() != idx_->size())
    throw Error(ErrorCode::DimensionMismatch, "dimension vector length differs from index set size");
  compute_offsets();
}

void DimVector::compute_offsets() {
  offsets_.assign(dims_.size() + 1, 0);
  for (std::size_t i = 0; i < dims_.size(); ++i) offsets_[i + 1] = offsets_[i] + dims_[i];
}

std::vector<std::size_t> DimVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < dims_.size(); ++i)
    if (dims_[i] > 0) s.push_back(i);
  return s;
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  if (!same_index_set(a.idx_, b.idx_))
    throw Error(ErrorCode::MixedIndexSets, "dimension vectors over different index sets");
  std::vector<std::size_t> d(a.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.dims_[i] + b.dims_[i];
  return DimVector(a.idx_, std::move(d));
}

bool operator==(const DimVector& a, const DimVector& b) {
  return same_index_set(a.idx_, b.idx_) && a.dims_ == b.dims_;
}

std::string band_label(const DimVector& dims, std::size_t pos) {
  return dims.index_set()->label(pos);
}

// ---- BlockMatrix ----

BlockMatrix::BlockMatrix(FieldSpec field, DimVector rows, DimVector cols)
    : field_(field), rows_(std::move(rows)), cols_(std::move(cols)) {
  if (!same_index_set(rows_.index_set(), cols_.index_set()))
    throw Error(ErrorCode::MixedIndexSets, "row and column partitions use different index sets");
}

BlockMatrix BlockMatrix::identity(FieldSpec field, const DimVector& dims) {
  BlockMatrix m(field, dims, dims);
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i] > 0) m.blocks_.emplace(Key{i, i}, DenseMatrix::identity(field, dims[i]));
  return m;
}

BlockMatrix BlockMatrix::from_flat(const DenseMatrix& flat, DimVector rows, DimVector cols) {
  if (flat.rows() != rows.total() || flat.cols() != cols.total())
    throw Error(ErrorCode::DimensionMismatch, "flat matrix does not match the partitions");
  BlockMatrix m(flat.field(), std::move(rows), std::move(cols));
  for (std::size_t i = 0; i < m.rows_.size(); ++i) {
    if (m.rows_[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols_.size(); ++j) {
      if (m.cols_[j] == 0) continue;
      m.set_block(i, j, flat.block(m.rows_.offset(i), m.cols_.offset(j), m.rows_[i], m.cols_[j]));
    }
  }
  return m;
}

const DenseMatrix* BlockMatrix::find(std::size_t i, std::size_t j) const {
  auto it = blocks_.find({i, j});
  return it == blocks_.end() ? nullptr : &it->second;
}

DenseMatrix BlockMatrix::block(std::size_t i, std::size_t j) const {
  if (const auto* b = find(i, j)) return *b;
  return DenseMatrix(field_, rows_[i], cols_[j]);
}

void BlockMatrix::set_block(std::size_t i, std::size_t j, DenseMatrix m) {
  if (i >= rows_.size() || j >= cols_.size())
    throw Error(ErrorCode::ShapeViolation, "block position outside the index set");
  if (m.rows() != rows_[i] || m.cols() != cols_[j]) {
    const IndexSet& idx = *rows_.index_set();
    throw Error(ErrorCode::ShapeViolation,
                "block (" + idx.label(i) + "," + idx.label(j) + ") should be " +
                    std::to_string(rows_[i]) + "x" + std::to_string(cols_[j]) + ", got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()),
                idx.label(i), idx.label(j));
  }
  if (m.field() != field_) throw Error(ErrorCode::MixedFields, "block over a different field");
  if (m.rows() == 0 || m.cols() == 0 || m.is_zero())
    blocks_.erase({i, j});
  else
    blocks_.insert_or_assign(Key{i, j}, std::move(m));
}

DenseMatrix BlockMatrix::flatten() const {
  DenseMatrix flat(field_, rows_.total(), cols_.total());
  for (const auto& [key, m] : blocks_) flat.set_block(rows_.offset(key.first), cols_.offset(key.second), m);
  return flat;
}

BlockMatrix BlockMatrix::negated() const {
  BlockMatrix r(field_, rows_, cols_);
  for (const auto& [key, m] : blocks_) r.blocks_.emplace(key, m.negated());
  return r;
}

BlockMatrix BlockMatrix::scaled(const Scalar& s) const {
  BlockMatrix r(field_, rows_, cols_);
  for (const auto& [key, m] : blocks_) r.set_block(key.first, key.second, m.scaled(s));
  return r;
}

namespace {

void require_same_shape(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::MixedFields, "block matrices over different fields");
  if (!(a.row_dims() == b.row_dims()) || !(a.col_dims() == b.col_dims()))
    throw Error(ErrorCode::DimensionMismatch, "block matrices with different partitions");
}

BlockMatrix combine(const BlockMatrix& a, const BlockMatrix& b, bool subtract) {
  require_same_shape(a, b);
  BlockMatrix r = a;
  for (const auto& [key, m] : b.blocks()) {
    const auto* existing = a.find(key.first, key.second);
    if (existing)
      r.set_block(key.first, key.second, subtract ? *existing - m : *existing + m);
    else
      r.set_block(key.first, key.second, subtract ? m.negated() : m);
  }
  return r;
}

}  // namespace

BlockMatrix operator+(const BlockMatrix& a, const BlockMatrix& b) { return combine(a, b, false); }
BlockMatrix operator-(const BlockMatrix& a, const BlockMatrix& b) { return combine(a, b, true); }

BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::MixedFields, "block matrices over different fields");
  if (!(a.cols_ == b.rows_))
    throw Error(ErrorCode::DimensionMismatch, "inner partitions of a block product differ");
  std::map<BlockMatrix::Key, DenseMatrix> acc;
  for (const auto& [ka, ma] : a.blocks_) {
    const std::size_t k = ka.second;
    for (auto it = b.blocks_.lower_bound({k, 0}); it != b.blocks_.end() && it->first.first == k; ++it) {
      DenseMatrix p = mat_mul(ma, it->second);
      const BlockMatrix::Key key{ka.first, it->first.second};
      auto slot = acc.find(key);
      if (slot == acc.end())
        acc.emplace(key, std::move(p));
      else
        slot->second = slot->second + p;
    }
  }
  BlockMatrix r(a.field_, a.rows_, b.cols_);
  for (auto& [key, m] : acc) r.set_block(key.first, key.second, std::move(m));
  return r;
}

bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.blocks_ == b.blocks_;
}

// ---- Representation / Morphism ----

bool operator==(const Representation& a, const Representation& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return false;
  return a.data_->dims == b.data_->dims && a.data_->matrix == b.data_->matrix;
}

namespace {

void require_same_ends(const Morphism& a, const Morphism& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target()))
    throw Error(ErrorCode::SourceTargetMismatch, "morphisms have different sources or targets");
}

/// First nonzero block in row-major order, if any.
std::optional<BlockMatrix::Key> first_block(const BlockMatrix& m) {
  if (m.blocks().empty()) return std::nullopt;
  return m.blocks().begin()->first;
}

}  // namespace

Morphism operator+(const Morphism& a, const Morphism& b) {
  require_same_ends(a, b);
  Morphism r = a;
  r.matrix_ = a.matrix_ + b.matrix_;
  return r;
}

Morphism operator-(const Morphism& a, const Morphism& b) {
  require_same_ends(a, b);
  Morphism r = a;
  r.matrix_ = a.matrix_ - b.matrix_;
  return r;
}

Morphism Morphism::operator-() const {
  Morphism r = *this;
  r.matrix_ = matrix_.negated();
  return r;
}

Morphism Morphism::scaled(const Scalar& s) const {
  Morphism r = *this;
  r.matrix_ = matrix_.scaled(s);
  return r;
}

bool operator==(const Morphism& a, const Morphism& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
}

void require_compatible(const Representation& a, const Representation& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::MixedFields, "objects over different fields");
  if (!same_index_set(a.index_set(), b.index_set()))
    throw Error(ErrorCode::MixedIndexSets, "objects over different index sets");
}

Representation check_object(const DimVector& dims, const BlockMatrix& b) {
  if (!dims.index_set()) throw Error(ErrorCode::InvalidArgument, "dimension vector without index set");
  const IndexSet& idx = *dims.index_set();
  if (!same_index_set(dims.index_set(), b.row_dims().index_set()))
    throw Error(ErrorCode::MixedIndexSets, "matrix and dimension vector use different index sets");
  for (const auto* side : {&b.row_dims(), &b.col_dims()})
    for (std::size_t i = 0; i < dims.size(); ++i)
      if ((*side)[i] != dims[i])
        throw Error(ErrorCode::ShapeViolation,
                    "band " + idx.label(i) + " has size " + std::to_string((*side)[i]) +
                        ", expected " + std::to_string(dims[i]),
                    idx.label(i), idx.label(i));
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i] != dims[idx.sigma(i)])
      throw Error(ErrorCode::InvolutionDimViolation,
                  "d(" + idx.label(i) + ")=" + std::to_string(dims[i]) + " but d(" +
                      idx.label(idx.sigma(i)) + ")=" + std::to_string(dims[idx.sigma(i)]),
                  idx.label(i));
  if (auto bad = first_block(b * b))
    throw Error(ErrorCode::SquareNotZero,
                "B^2 has a nonzero block at (" + idx.label(bad->first) + "," + idx.label(bad->second) + ")",
                idx.label(bad->first), idx.label(bad->second));
  Representation r;
  r.data_ = std::make_shared<const Representation::Data>(Representation::Data{dims, b});
  return r;
}

Morphism check_morphism(const BlockMatrix& t, const Representation& src, const Representation& tgt) {
  require_compatible(src, tgt);
  if (t.field() != src.field()) throw Error(ErrorCode::MixedFields, "morphism matrix over a different field");
  if (!same_index_set(t.row_dims().index_set(), src.index_set()))
    throw Error(ErrorCode::MixedIndexSets, "morphism matrix over a different index set");
  const IndexSet& idx = *src.index_set();
  auto shape_fail = [&](const DimVector& got, const DimVector& want, const char* side) {
    for (std::size_t i = 0; i < want.size(); ++i)
      if (got[i] != want[i])
        throw Error(ErrorCode::ShapeViolation,
                    std::string(side) + " band " + idx.label(i) + " has size " + std::to_string(got[i]) +
                        ", expected " + std::to_string(want[i]),
                    idx.label(i));
  };
  shape_fail(t.row_dims(), src.dims(), "row");
  shape_fail(t.col_dims(), tgt.dims(), "column");

  for (const auto& [key, m] : t.blocks())
    if (key.first > key.second)
      throw Error(ErrorCode::TriangularityViolation,
                  "nonzero block below the diagonal at (" + idx.label(key.first) + "," +
                      idx.label(key.second) + ")",
                  idx.label(key.first), idx.label(key.second));

  for (std::size_t i = 0; i < idx.size(); ++i) {
    const std::size_t s = idx.sigma(i);
    if (s <= i) continue;
    const auto* a = t.find(i, i);
    const auto* b = t.find(s, s);
    const bool equal = (!a && !b) || (a && b && *a == *b);
    if (!equal)
      throw Error(ErrorCode::SigmaDiagonalViolation,
                  "diagonal blocks at " + idx.label(i) + " and " + idx.label(s) + " differ",
                  idx.label(i));
  }

  if (auto bad = first_block(t * tgt.matrix() - src.matrix() * t))
    throw Error(ErrorCode::IntertwiningViolation,
                "TC - BT has a nonzero block at (" + idx.label(bad->first) + "," + idx.label(bad->second) + ")",
                idx.label(bad->first), idx.label(bad->second));

  Morphism m;
  m.source_ = src;
  m.target_ = tgt;
  m.matrix_ = t;
  return m;
}

Morphism identity(const Representation& b) {
  return check_morphism(BlockMatrix::identity(b.field(), b.dims()), b, b);
}

Morphism zero_morphism(const Representation& b, const Representation& c) {
  return check_morphism(BlockMatrix(b.field(), b.dims(), c.dims()), b, c);
}

Morphism compose(const Morphism& t, const Morphism& u) {
  if (!(t.target() == u.source()))
    throw Error(ErrorCode::SourceTargetMismatch, "target of the first map is not the source of the second");
  return check_morphism(t.matrix() * u.matrix(), t.source(), u.target());
}

std::vector<Morphism> hom_basis(const Representation& b, const Representation& c) {
  require_compatible(b, c);
  const UnknownLayout x(b.dims(), c.dims());
  const std::size_t nb = b.dims().total(), nc = c.dims().total();
  SystemBuilder sys(b.field(), nb * nc, x.size());
  sys.right_product(0, x, 0, c.matrix().flatten(), +1);
  sys.left_product(0, b.matrix().flatten(), x, 0, -1);
  std::vector<Morphism> basis;
  for (const auto& v : nullspace(sys.matrix())) basis.push_back(check_morphism(x.assemble(v, 0), b, c));
  return basis;
}

Representation zero_object(const IndexSetPtr& idx, FieldSpec field) {
  DimVector d(idx);
  return check_object(d, BlockMatrix(field, d, d));
}

bool is_strict_iso(const Morphism& t) {
  const DimVector& d = t.source().dims();
  if (!(d == t.target().dims())) return false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    const auto* blk = t.matrix().find(i, i);
    if (!blk || !mat_inverse(*blk)) return false;
  }
  return true;
}

}  // namespace bdk
