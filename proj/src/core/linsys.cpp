#include "core/linsys.hpp"

#include "core/error.hpp"
#include "core/fieldops.hpp"

namespace bdk {

using detail::dispatch;

UnknownLayout::UnknownLayout(const DimVector& rows, const DimVector& cols)
    : rows_(rows), cols_(cols), var_(rows.total() * cols.total(), -1) {
  if (!same_index_set(rows.index_set(), cols.index_set()))
    throw Error(ErrorCode::MixedIndexSets, "unknown layout over two index sets");
  const IndexSet& idx = *rows.index_set();
  const std::size_t nc = cols.total();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t r = 0; r < rows[i]; ++r) {
      const std::size_t fr = rows.offset(i) + r;
      for (std::size_t j = i; j < idx.size(); ++j) {
        for (std::size_t c = 0; c < cols[j]; ++c) {
          const std::size_t fc = cols.offset(j) + c;
          const std::size_t partner = idx.sigma(i);
          if (j == i && partner < i) {
            var_[fr * nc + fc] = var_[(rows.offset(partner) + r) * nc + cols.offset(partner) + c];
          } else {
            var_[fr * nc + fc] = static_cast<std::ptrdiff_t>(count_++);
          }
        }
      }
    }
  }
}

BlockMatrix UnknownLayout::assemble(const DenseMatrix& solution, std::size_t offset) const {
  DenseMatrix flat(solution.field(), rows(), cols());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c)
      if (const auto v = var(r, c); v >= 0)
        flat.set(r, c, solution.at(offset + static_cast<std::size_t>(v), 0));
  return BlockMatrix::from_flat(flat, rows_, cols_);
}

SystemBuilder::SystemBuilder(FieldSpec field, std::size_t equations, std::size_t unknowns)
    : a_(field, equations, unknowns), b_(field, equations, 1) {}

void SystemBuilder::left_product(std::size_t eq_offset, const DenseMatrix& left,
                                 const UnknownLayout& x, std::size_t var_offset, int sign) {
  if (left.cols() != x.rows())
    throw Error(ErrorCode::DimensionMismatch, "left factor does not match unknown rows");
  const std::size_t nr = left.rows(), nc = x.cols(), nk = x.rows();
  if (eq_offset + nr * nc > a_.rows() || var_offset + x.size() > a_.cols())
    throw Error(ErrorCode::DimensionMismatch, "equation block outside the system");
  dispatch(a_.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto& l = left.raw<Ops>();
    auto& a = a_.raw<Ops>();
    const std::size_t width = a_.cols();
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t k = 0; k < nk; ++k) {
        const auto& coeff = l[r * nk + k];
        if (ops.is_zero(coeff)) continue;
        const auto term = sign < 0 ? ops.neg(coeff) : coeff;
        for (std::size_t c = 0; c < nc; ++c) {
          const auto v = x.var(k, c);
          if (v < 0) continue;
          auto& slot = a[(eq_offset + r * nc + c) * width + var_offset + static_cast<std::size_t>(v)];
          slot = ops.add(slot, term);
        }
      }
  });
}

void SystemBuilder::right_product(std::size_t eq_offset, const UnknownLayout& x,
                                  std::size_t var_offset, const DenseMatrix& right, int sign) {
  if (right.rows() != x.cols())
    throw Error(ErrorCode::DimensionMismatch, "right factor does not match unknown columns");
  const std::size_t nr = x.rows(), nc = right.cols(), nk = x.cols();
  if (eq_offset + nr * nc > a_.rows() || var_offset + x.size() > a_.cols())
    throw Error(ErrorCode::DimensionMismatch, "equation block outside the system");
  dispatch(a_.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto& rm = right.raw<Ops>();
    auto& a = a_.raw<Ops>();
    const std::size_t width = a_.cols();
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t k = 0; k < nk; ++k) {
        const auto v = x.var(r, k);
        if (v < 0) continue;
        for (std::size_t c = 0; c < nc; ++c) {
          const auto& coeff = rm[k * nc + c];
          if (ops.is_zero(coeff)) continue;
          auto& slot = a[(eq_offset + r * nc + c) * width + var_offset + static_cast<std::size_t>(v)];
          slot = sign < 0 ? ops.sub(slot, coeff) : ops.add(slot, coeff);
        }
      }
  });
}

void SystemBuilder::set_rhs(std::size_t eq_offset, const DenseMatrix& m) {
  if (eq_offset + m.rows() * m.cols() > b_.rows())
    throw Error(ErrorCode::DimensionMismatch, "right-hand side outside the system");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) b_.set(eq_offset + r * m.cols() + c, 0, m.at(r, c));
}

}  // namespace bdk
