#include "core/bruteforce.hpp"

#include <functional>

namespace bdk::oracle {

namespace {

struct Shape {
  std::vector<std::size_t> row_band, col_band;
  std::vector<std::size_t> row_local, col_local;
};

Shape shape_of(const DimVector& rows, const DimVector& cols) {
  Shape s;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t r = 0; r < rows[i]; ++r) {
      s.row_band.push_back(i);
      s.row_local.push_back(r);
    }
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t c = 0; c < cols[j]; ++c) {
      s.col_band.push_back(j);
      s.col_local.push_back(c);
    }
  return s;
}

std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                               std::size_t n, std::size_t k, std::size_t m, std::uint32_t p) {
  std::vector<std::uint32_t> out(n * m, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < k; ++l) acc += static_cast<std::uint64_t>(a[i * k + l]) * b[l * m + j];
      out[i * m + j] = static_cast<std::uint32_t>(acc % p);
    }
  return out;
}

/// Enumerates every matrix with zeros below the band diagonal, calling
/// visit(x) for those whose diagonal blocks agree on sigma-pairs.
bool enumerate_shaped(const DimVector& rows, const DimVector& cols, std::uint32_t p, std::uint64_t limit,
                      const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  const Shape sh = shape_of(rows, cols);
  const std::size_t nr = sh.row_band.size(), nc = sh.col_band.size();
  std::vector<std::size_t> free;
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c)
      if (sh.row_band[r] <= sh.col_band[c]) free.push_back(r * nc + c);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < free.size(); ++i) {
    total *= p;
    if (total > limit) return false;
  }
  const IndexSet& idx = *rows.index_set();
  std::vector<std::uint32_t> x(nr * nc, 0);
  std::vector<std::uint32_t> digits(free.size(), 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    for (std::size_t i = 0; i < free.size(); ++i) x[free[i]] = digits[i];
    bool tied = true;
    for (std::size_t r = 0; r < nr && tied; ++r)
      for (std::size_t c = 0; c < nc && tied; ++c) {
        const std::size_t i = sh.row_band[r];
        if (sh.col_band[c] != i || idx.sigma(i) == i) continue;
        const std::size_t partner = idx.sigma(i);
        const std::size_t pr = rows.offset(partner) + sh.row_local[r];
        const std::size_t pc = cols.offset(partner) + sh.col_local[c];
        if (x[r * nc + c] != x[pr * nc + pc]) tied = false;
      }
    if (tied) visit(x);
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return true;
}

}  // namespace

Flat flat_of(const BlockMatrix& m) {
  const DenseMatrix d = m.flatten();
  Flat f{d.rows(), d.cols(), std::vector<std::uint32_t>(d.rows() * d.cols())};
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) f.v[r * d.cols() + c] = d.at(r, c).residue();
  return f;
}

DenseMatrix dense_of(FieldSpec field, const Flat& f) {
  DenseMatrix d(field, f.rows, f.cols);
  for (std::size_t r = 0; r < f.rows; ++r)
    for (std::size_t c = 0; c < f.cols; ++c) d.set(r, c, Scalar::from_int(field, f.v[r * f.cols + c]));
  return d;
}

std::optional<std::vector<Flat>> all_morphisms(const Representation& b, const Representation& c,
                                               std::uint64_t limit) {
  if (!b.field().is_prime_field()) return std::nullopt;
  const std::uint32_t p = b.field().modulus();
  const Flat bf = flat_of(b.matrix()), cf = flat_of(c.matrix());
  const std::size_t nb = bf.rows, nc = cf.rows;
  std::vector<Flat> out;
  const bool done = enumerate_shaped(b.dims(), c.dims(), p, limit, [&](const std::vector<std::uint32_t>& x) {
    if (mul(x, cf.v, nb, nc, nc, p) == mul(bf.v, x, nb, nb, nc, p)) out.push_back({nb, nc, x});
  });
  if (!done) return std::nullopt;
  return out;
}

std::optional<std::size_t> hom_dim(const Representation& b, const Representation& c, std::uint64_t limit) {
  auto all = all_morphisms(b, c, limit);
  if (!all) return std::nullopt;
  const std::uint32_t p = b.field().modulus();
  std::size_t dim = 0;
  for (std::uint64_t n = all->size(); n > 1; n /= p) ++dim;
  return dim;
}

std::optional<bool> kappa_related(const Morphism& s, const Morphism& t, std::uint64_t limit) {
  if (!s.field().is_prime_field()) return std::nullopt;
  const std::uint32_t p = s.field().modulus();
  const Flat bf = flat_of(s.source().matrix()), cf = flat_of(s.target().matrix());
  const Flat sf = flat_of(s.matrix()), tf = flat_of(t.matrix());
  const std::size_t nb = bf.rows, nc = cf.rows;
  std::vector<std::uint32_t> diff(nb * nc);
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = (sf.v[i] + p - tf.v[i]) % p;
  bool found = false;
  const bool done = enumerate_shaped(s.source().dims(), s.target().dims(), p, limit,
                                     [&](const std::vector<std::uint32_t>& k) {
                                       if (found) return;
                                       auto lhs = mul(bf.v, k, nb, nb, nc, p);
                                       const auto rhs = mul(k, cf.v, nb, nc, nc, p);
                                       for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] = (lhs[i] + rhs[i]) % p;
                                       if (lhs == diff) found = true;
                                     });
  if (!done) return std::nullopt;
  return found;
}

}  // namespace bdk::oracle
