#include "core/linalg.hpp"

#include <algorithm>
#include <string>

#include "core/error.hpp"
#include "core/fieldops.hpp"

namespace bdk {

using detail::dispatch;

namespace {

std::string shape(const DenseMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_field(const DenseMatrix& a, const DenseMatrix& b) {
  if (!(a.field() == b.field()))
    throw Error(ErrorCode::MixedFields,
                "matrices over " + a.field().name() + " and " + b.field().name());
}

template <class Ops>
typename Ops::value_type to_raw(const Ops&, const Scalar& s) {
  if constexpr (std::is_same_v<Ops, detail::PrimeOps>)
    return s.residue();
  else
    return s.rational();
}

template <class Ops>
Scalar from_raw(const Ops& ops, FieldSpec field, const typename Ops::value_type& v) {
  if constexpr (std::is_same_v<Ops, detail::PrimeOps>) {
    (void)ops;
    return Scalar::from_int(field, v);
  } else {
    (void)field;
    return Scalar::from_rational(v);
  }
}

// In-place RREF of a rows x cols row-major array. Rows of the pivot are
// applied only on the pivot row's nonzero columns, which keeps the sparse
// systems produced by the block solvers cheap.
template <class Ops>
std::vector<std::size_t> rref_kernel(const Ops& ops, std::vector<typename Ops::value_type>& a,
                                     std::size_t rows, std::size_t cols) {
  using V = typename Ops::value_type;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nz;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pr = row;
    while (pr < rows && ops.is_zero(a[pr * cols + col])) ++pr;
    if (pr == rows) continue;
    if (pr != row)
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pr * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((pr + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(row * cols));
    V* prow = a.data() + row * cols;
    const V inv = ops.inv(prow[col]);
    nz.clear();
    for (std::size_t k = col; k < cols; ++k) {
      if (ops.is_zero(prow[k])) continue;
      prow[k] = ops.mul(prow[k], inv);
      nz.push_back(k);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row) continue;
      V* target = a.data() + r * cols;
      if (ops.is_zero(target[col])) continue;
      const V f = target[col];
      for (std::size_t k : nz) target[k] = ops.sub(target[k], ops.mul(f, prow[k]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

DenseMatrix augmented(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_field(a, b);
  if (b.cols() != 1 || b.rows() != a.rows())
    throw Error(ErrorCode::DimensionMismatch,
                "right-hand side " + shape(b) + " does not match system " + shape(a));
  DenseMatrix aug(a.field(), a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  aug.set_block(0, a.cols(), b);
  return aug;
}

}  // namespace

DenseMatrix::DenseMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field.is_prime_field())
    data_ = std::vector<std::uint32_t>(rows * cols, 0);
  else
    data_ = std::vector<mpq_class>(rows * cols);
}

DenseMatrix DenseMatrix::identity(FieldSpec field, std::size_t n) {
  DenseMatrix m(field, n, n);
  dispatch(field, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    auto& d = m.raw<Ops>();
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = ops.one();
  });
  return m;
}

DenseMatrix DenseMatrix::from_rows(FieldSpec field,
                                   std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  DenseMatrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    std::size_t j = 0;
    for (long long v : row) m.set(i, j++, Scalar::from_int(field, v));
    ++i;
  }
  return m;
}

DenseMatrix DenseMatrix::from_columns(FieldSpec field, std::size_t length,
                                      std::span<const DenseMatrix> columns) {
  DenseMatrix m(field, length, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].rows() != length || columns[j].cols() != 1)
      throw Error(ErrorCode::DimensionMismatch, "column " + std::to_string(j) + " has shape " +
                                                    shape(columns[j]) + ", expected length " +
                                                    std::to_string(length));
    require_same_field(m, columns[j]);
    m.set_block(0, j, columns[j]);
  }
  return m;
}

Scalar DenseMatrix::at(std::size_t r, std::size_t c) const {
  return dispatch(field_, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    return from_raw(ops, field_, raw<Ops>()[r * cols_ + c]);
  });
}

void DenseMatrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (!(value.field() == field_))
    throw Error(ErrorCode::MixedFields, "storing a " + value.field().name() +
                                            " scalar into a " + field_.name() + " matrix");
  dispatch(field_, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    raw<Ops>()[r * cols_ + c] = to_raw(ops, value);
  });
}

bool DenseMatrix::is_zero() const {
  return dispatch(field_, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto& d = raw<Ops>();
    return std::all_of(d.begin(), d.end(), [&](const auto& v) { return ops.is_zero(v); });
  });
}

bool DenseMatrix::is_identity() const {
  return is_square() && *this == identity(field_, rows_);
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(field_, cols_, rows_);
  dispatch(field_, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto& s = raw<Ops>();
    auto& d = t.raw<Ops>();
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) d[c * rows_ + r] = s[r * cols_ + c];
  });
  return t;
}

DenseMatrix DenseMatrix::negated() const {
  DenseMatrix out(*this);
  dispatch(field_, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    for (auto& v : out.raw<Ops>()) v = ops.neg(v);
  });
  return out;
}

DenseMatrix DenseMatrix::scaled(const Scalar& factor) const {
  if (!(factor.field() == field_)) throw Error(ErrorCode::MixedFields, "scaling by a foreign scalar");
  DenseMatrix out(*this);
  dispatch(field_, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto f = to_raw(ops, factor);
    for (auto& v : out.raw<Ops>()) v = ops.mul(v, f);
  });
  return out;
}

DenseMatrix DenseMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw Error(ErrorCode::DimensionMismatch, "block outside a " + shape(*this) + " matrix");
  DenseMatrix out(field_, nr, nc);
  dispatch(field_, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    (void)ops;
    const auto& s = raw<Ops>();
    auto& d = out.raw<Ops>();
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) d[r * nc + c] = s[(r0 + r) * cols_ + c0 + c];
  });
  return out;
}

void DenseMatrix::set_block(std::size_t r0, std::size_t c0, const DenseMatrix& src) {
  require_same_field(*this, src);
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_)
    throw Error(ErrorCode::DimensionMismatch,
                "a " + shape(src) + " block does not fit into a " + shape(*this) + " matrix");
  dispatch(field_, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    (void)ops;
    const auto& s = src.raw<Ops>();
    auto& d = raw<Ops>();
    for (std::size_t r = 0; r < src.rows_; ++r)
      for (std::size_t c = 0; c < src.cols_; ++c)
        d[(r0 + r) * cols_ + c0 + c] = s[r * src.cols_ + c];
  });
}

DenseMatrix DenseMatrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::DimensionMismatch, "adding " + shape(a) + " and " + shape(b));
  DenseMatrix out(a);
  dispatch(a.field_, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    auto& d = out.raw<Ops>();
    const auto& s = b.raw<Ops>();
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = ops.add(d[k], s[k]);
  });
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) { return a + b.negated(); }

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) { return mat_mul(a, b); }

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "multiplying " + shape(a) + " by " + shape(b));
  DenseMatrix out(a.field(), a.rows(), b.cols());
  dispatch(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto& x = a.template raw<Ops>();
    const auto& y = b.template raw<Ops>();
    auto& z = out.template raw<Ops>();
    const std::size_t n = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const auto& f = x[i * n + k];
        if (ops.is_zero(f)) continue;
        for (std::size_t j = 0; j < m; ++j)
          if (!ops.is_zero(y[k * m + j])) z[i * m + j] = ops.add(z[i * m + j], ops.mul(f, y[k * m + j]));
      }
  });
  return out;
}

RrefResult rref(DenseMatrix a) {
  RrefResult result{a, {}, 0};
  dispatch(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    result.pivot_cols = rref_kernel(ops, result.reduced.template raw<Ops>(), a.rows(), a.cols());
  });
  result.rank = result.pivot_cols.size();
  return result;
}

namespace {

struct Reduced {
  DenseMatrix r;
  std::vector<std::size_t> pivots;
};

std::optional<Reduced> reduce_system(const DenseMatrix& a, const DenseMatrix& b) {
  RrefResult red = rref(augmented(a, b));
  if (!red.pivot_cols.empty() && red.pivot_cols.back() == a.cols()) return std::nullopt;
  return Reduced{std::move(red.reduced), std::move(red.pivot_cols)};
}

DenseMatrix particular_from(const Reduced& red, std::size_t n) {
  DenseMatrix x(red.r.field(), n, 1);
  for (std::size_t i = 0; i < red.pivots.size(); ++i) x.set(red.pivots[i], 0, red.r.at(i, n));
  return x;
}

std::vector<DenseMatrix> kernel_from(const DenseMatrix& r, const std::vector<std::size_t>& pivots,
                                     std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots)
    if (p < n) is_pivot[p] = true;
  std::vector<DenseMatrix> basis;
  const Scalar one = Scalar::from_int(r.field(), 1);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    DenseMatrix v(r.field(), n, 1);
    v.set(f, 0, one);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (pivots[i] < n) v.set(pivots[i], 0, -r.at(i, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::optional<AffineSolution> solve_affine(const DenseMatrix& a, const DenseMatrix& b) {
  auto red = reduce_system(a, b);
  if (!red) return std::nullopt;
  return AffineSolution{particular_from(*red, a.cols()), kernel_from(red->r, red->pivots, a.cols())};
}

std::optional<DenseMatrix> solve_particular(const DenseMatrix& a, const DenseMatrix& b) {
  auto red = reduce_system(a, b);
  if (!red) return std::nullopt;
  return particular_from(*red, a.cols());
}

std::vector<DenseMatrix> nullspace(const DenseMatrix& a) {
  RrefResult red = rref(a);
  return kernel_from(red.reduced, red.pivot_cols, a.cols());
}

std::optional<DenseMatrix> mat_inverse(const DenseMatrix& a) {
  if (!a.is_square())
    throw Error(ErrorCode::NotSquare, "inverse of a non-square " + shape(a) + " matrix");
  const std::size_t n = a.rows();
  DenseMatrix aug(a.field(), n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, DenseMatrix::identity(a.field(), n));
  RrefResult red = rref(std::move(aug));
  if (red.rank < n || (n > 0 && red.pivot_cols[n - 1] != n - 1)) return std::nullopt;
  return red.reduced.block(0, n, n, n);
}

std::vector<DenseMatrix> column_space(FieldSpec field, std::size_t length,
                                      std::span<const DenseMatrix> columns) {
  if (columns.empty()) return {};
  RrefResult red = rref(DenseMatrix::from_columns(field, length, columns).transposed());
  std::vector<DenseMatrix> basis;
  for (std::size_t i = 0; i < red.rank; ++i)
    basis.push_back(red.reduced.block(i, 0, 1, length).transposed());
  return basis;
}

std::vector<DenseMatrix> subspace_intersect(std::span<const DenseMatrix> u,
                                            std::span<const DenseMatrix> v) {
  if (u.empty() || v.empty()) return {};
  const FieldSpec field = u.front().field();
  const std::size_t length = u.front().rows();
  for (const auto* side : {&u, &v})
    for (const auto& col : *side) {
      if (col.cols() != 1 || col.rows() != length)
        throw Error(ErrorCode::DimensionMismatch, "subspace generators of unequal length");
      if (!(col.field() == field)) throw Error(ErrorCode::MixedFields, "subspace generators over mixed fields");
    }
  const auto bu = column_space(field, length, u);
  const auto bv = column_space(field, length, v);
  if (bu.empty() || bv.empty()) return {};
  std::vector<DenseMatrix> all(bu);
  all.insert(all.end(), bv.begin(), bv.end());
  const DenseMatrix joint = DenseMatrix::from_columns(field, length, all);
  const DenseMatrix umat = DenseMatrix::from_columns(field, length, bu);
  std::vector<DenseMatrix> basis;
  for (const auto& k : nullspace(joint)) basis.push_back(umat * k.block(0, 0, bu.size(), 1));
  return basis;
}

}  // namespace bdk
