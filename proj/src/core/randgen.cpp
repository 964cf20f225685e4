#include "core/randgen.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "core/error.hpp"
#include "core/linsys.hpp"

namespace bdk {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t s = seed;
  std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(s)), static_cast<std::uint32_t>(splitmix64(s)),
                    static_cast<std::uint32_t>(splitmix64(s)), static_cast<std::uint32_t>(splitmix64(s))};
  engine_.seed(seq);
}

Rng Rng::for_stream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t s = seed;
  std::uint64_t mixed = splitmix64(s);
  s = mixed ^ (stream * 0xd1b54a32d192ed03ULL);
  mixed = splitmix64(s);
  s = mixed ^ (index * 0x8cb92ba72f3d8dd7ULL);
  return Rng(splitmix64(s));
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = engine_(); while (x >= limit);
  return x % n;
}

Scalar Rng::scalar(FieldSpec field) {
  if (field.is_prime_field()) return Scalar::from_int(field, static_cast<long long>(below(field.modulus())));
  const long num = static_cast<long>(below(7)) - 3;
  const long den = static_cast<long>(below(3)) + 1;
  return Scalar::from_rational(mpq_class(mpz_class(num), mpz_class(den)));
}

Scalar Rng::nonzero_scalar(FieldSpec field) {
  for (;;) {
    Scalar s = scalar(field);
    if (!s.is_zero()) return s;
  }
}

IndexSetPtr random_index_set(Rng& rng, std::size_t max_indices) {
  const std::size_t n = rng.between(1, std::max<std::size_t>(1, max_indices));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<IndexSet::Pair> pairs;
  for (std::size_t i = 0; i + 1 < n; i += 2)
    if (rng.coin()) pairs.emplace_back(labels[order[i]], labels[order[i + 1]]);
  return make_index_set(std::move(labels), pairs);
}

DimVector random_dims(Rng& rng, const IndexSetPtr& idx, std::size_t max_dim) {
  std::vector<std::size_t> d(idx->size(), 0);
  for (std::size_t i = 0; i < idx->size(); ++i) {
    const std::size_t s = idx->sigma(i);
    d[i] = s < i ? d[s] : rng.between(0, max_dim);
  }
  return DimVector(idx, std::move(d));
}

DenseMatrix random_matrix(Rng& rng, FieldSpec field, std::size_t rows, std::size_t cols) {
  DenseMatrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.scalar(field));
  return m;
}

Representation random_object(Rng& rng, FieldSpec field, const DimVector& dims) {
  const std::size_t n = dims.total();
  const std::size_t r = rng.between(0, n / 2);
  const DenseMatrix v = random_matrix(rng, field, r, n);
  const auto ker = nullspace(v);
  DenseMatrix u(field, n, r);
  for (std::size_t c = 0; c < r; ++c) {
    DenseMatrix col(field, n, 1);
    for (const auto& basis : ker) col = col + basis.scaled(rng.scalar(field));
    u.set_block(0, c, col);
  }
  return check_object(dims, BlockMatrix::from_flat(mat_mul(u, v), dims, dims));
}

Morphism random_morphism(Rng& rng, const Representation& b, const Representation& c) {
  Morphism t = zero_morphism(b, c);
  for (const auto& m : hom_basis(b, c)) t = t + m.scaled(rng.scalar(b.field()));
  return t;
}

KappaMatrix random_kappa(Rng& rng, const Representation& b, const Representation& c) {
  const UnknownLayout layout(b.dims(), c.dims());
  const DenseMatrix values = random_matrix(rng, b.field(), layout.size(), 1);
  return check_kappa(layout.assemble(values, 0), b, c);
}

CommutingSquare random_commuting_square(Rng& rng, const Representation& a, const Representation& b,
                                        const Representation& a2, const Representation& b2) {
  const Morphism t = random_morphism(rng, a, b);
  const Morphism t2 = random_morphism(rng, a2, b2);
  const FieldSpec f = a.field();

  const UnknownLayout fl(a.dims(), a2.dims());
  const UnknownLayout gl(b.dims(), b2.dims());
  const UnknownLayout kl(a.dims(), b2.dims());
  const std::size_t na = a.dims().total(), na2 = a2.dims().total();
  const std::size_t nb = b.dims().total(), nb2 = b2.dims().total();
  const std::size_t of = 0, og = fl.size(), ok = og + gl.size();
  const std::size_t e1 = 0, e2 = na * na2, e3 = e2 + nb * nb2;
  SystemBuilder sys(f, e3 + na * nb2, ok + kl.size());

  const DenseMatrix af = a.matrix().flatten(), a2f = a2.matrix().flatten();
  const DenseMatrix bf = b.matrix().flatten(), b2f = b2.matrix().flatten();
  // F A' - A F = 0, G B' - B G = 0
  sys.right_product(e1, fl, of, a2f, +1);
  sys.left_product(e1, af, fl, of, -1);
  sys.right_product(e2, gl, og, b2f, +1);
  sys.left_product(e2, bf, gl, og, -1);
  // F T' - T G - A K - K B' = 0
  sys.right_product(e3, fl, of, t2.matrix().flatten(), +1);
  sys.left_product(e3, t.matrix().flatten(), gl, og, -1);
  sys.left_product(e3, af, kl, ok, -1);
  sys.right_product(e3, kl, ok, b2f, -1);

  const auto kernel = nullspace(sys.matrix());
  if (kernel.empty()) throw Error(ErrorCode::Degenerate, "commuting-square system has only the zero solution");
  DenseMatrix x(f, sys.matrix().cols(), 1);
  for (const auto& v : kernel) x = x + v.scaled(rng.scalar(f));
  if (x.is_zero()) x = kernel.front();

  return {check_morphism(fl.assemble(x, of), a, a2), check_morphism(gl.assemble(x, og), b, b2), t, t2,
          check_kappa(kl.assemble(x, ok), a, b2)};
}

}  // namespace bdk
