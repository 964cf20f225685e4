#include "core/homotopy.hpp"

#include "core/error.hpp"
#include "core/linsys.hpp"

namespace bdk {

KappaMatrix check_kappa(const BlockMatrix& k, const Representation& src, const Representation& tgt) {
  require_compatible(src, tgt);
  if (k.field() != src.field()) throw Error(ErrorCode::MixedFields, "kappa-matrix over a different field");
  if (!(k.row_dims() == src.dims()) || !(k.col_dims() == tgt.dims()))
    throw Error(ErrorCode::ShapeViolation, "kappa-matrix partitions do not match source and target");
  const IndexSet& idx = *src.index_set();
  for (const auto& [key, m] : k.blocks())
    if (key.first > key.second)
      throw Error(ErrorCode::TriangularityViolation,
                  "kappa-matrix has a nonzero block below the diagonal at (" + idx.label(key.first) +
                      "," + idx.label(key.second) + ")",
                  idx.label(key.first), idx.label(key.second));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const std::size_t s = idx.sigma(i);
    if (s <= i) continue;
    const auto* a = k.find(i, i);
    const auto* b = k.find(s, s);
    if (!((!a && !b) || (a && b && *a == *b)))
      throw Error(ErrorCode::SigmaDiagonalViolation,
                  "kappa-matrix diagonal blocks at " + idx.label(i) + " and " + idx.label(s) + " differ",
                  idx.label(i));
  }
  return {src, tgt, k};
}

KappaMatrix zero_kappa(const Representation& src, const Representation& tgt) {
  return check_kappa(BlockMatrix(src.field(), src.dims(), tgt.dims()), src, tgt);
}

bool witnesses(const Morphism& s, const Morphism& t, const KappaMatrix& k) {
  if (!(s.source() == t.source()) || !(s.target() == t.target())) return false;
  if (!(k.source == s.source()) || !(k.target == s.target())) return false;
  const DenseMatrix kf = k.matrix.flatten();
  const DenseMatrix lhs = s.matrix().flatten() - t.matrix().flatten();
  const DenseMatrix rhs = mat_mul(s.source().matrix().flatten(), kf) + mat_mul(kf, s.target().matrix().flatten());
  return lhs == rhs;
}

namespace {

SystemBuilder kappa_system(const Representation& src, const Representation& tgt, const UnknownLayout& k) {
  const std::size_t nb = src.dims().total(), nc = tgt.dims().total();
  SystemBuilder sys(src.field(), nb * nc, k.size());
  sys.left_product(0, src.matrix().flatten(), k, 0, +1);
  sys.right_product(0, k, 0, tgt.matrix().flatten(), +1);
  return sys;
}

}  // namespace

std::optional<KappaMatrix> solve_kappa(const Representation& src, const Representation& tgt,
                                       const BlockMatrix& d) {
  require_compatible(src, tgt);
  const UnknownLayout k(src.dims(), tgt.dims());
  SystemBuilder sys = kappa_system(src, tgt, k);
  sys.set_rhs(0, d.flatten());
  auto x = solve_particular(sys.matrix(), sys.rhs());
  if (!x) return std::nullopt;
  return check_kappa(k.assemble(*x, 0), src, tgt);
}

std::optional<KappaMatrix> kappa_equiv(const Morphism& s, const Morphism& t) {
  if (!(s.source() == t.source()) || !(s.target() == t.target()))
    throw Error(ErrorCode::SourceTargetMismatch, "compared morphisms have different sources or targets");
  return solve_kappa(s.source(), s.target(), s.matrix() - t.matrix());
}

std::vector<Morphism> null_homotopic_subspace(const Representation& b, const Representation& c) {
  require_compatible(b, c);
  const std::size_t nb = b.dims().total(), nc = c.dims().total();
  const std::size_t len = nb * nc;
  const UnknownLayout k(b.dims(), c.dims());
  const SystemBuilder sys = kappa_system(b, c, k);
  std::vector<DenseMatrix> image;
  image.reserve(k.size());
  for (std::size_t v = 0; v < k.size(); ++v) image.push_back(sys.matrix().column(v));

  auto vec = [&](const BlockMatrix& m) {
    const DenseMatrix f = m.flatten();
    DenseMatrix out(b.field(), len, 1);
    for (std::size_t r = 0; r < nb; ++r)
      for (std::size_t col = 0; col < nc; ++col) out.set(r * nc + col, 0, f.at(r, col));
    return out;
  };
  std::vector<DenseMatrix> hom;
  for (const auto& m : hom_basis(b, c)) hom.push_back(vec(m.matrix()));
  if (hom.empty() || image.empty()) return {};

  std::vector<Morphism> out;
  for (const auto& v : subspace_intersect(image, hom)) {
    DenseMatrix f(b.field(), nb, nc);
    for (std::size_t r = 0; r < nb; ++r)
      for (std::size_t col = 0; col < nc; ++col) f.set(r, col, v.at(r * nc + col, 0));
    out.push_back(check_morphism(BlockMatrix::from_flat(f, b.dims(), c.dims()), b, c));
  }
  return out;
}

std::size_t quotient_hom_dim(const Representation& b, const Representation& c) {
  return hom_basis(b, c).size() - null_homotopic_subspace(b, c).size();
}

std::optional<KappaIso> is_kappa_iso(const Morphism& t) {
  const Representation& b = t.source();
  const Representation& c = t.target();
  const FieldSpec f = t.field();

  if (is_strict_iso(t)) {
    auto inv = mat_inverse(t.matrix().flatten());
    if (inv)
      return KappaIso{check_morphism(BlockMatrix::from_flat(*inv, c.dims(), b.dims()), c, b),
                      zero_kappa(b, b), zero_kappa(c, c)};
  }

  const UnknownLayout u(c.dims(), b.dims());
  const UnknownLayout kb(b.dims(), b.dims());
  const UnknownLayout kc(c.dims(), c.dims());
  const std::size_t nb = b.dims().total(), nc = c.dims().total();
  const std::size_t ou = 0, okb = u.size(), okc = okb + kb.size();
  const std::size_t e1 = 0, e2 = nc * nb, e3 = e2 + nb * nb;
  SystemBuilder sys(f, e3 + nc * nc, okc + kc.size());

  const DenseMatrix bf = b.matrix().flatten(), cf = c.matrix().flatten(), tf = t.matrix().flatten();
  // U B - C U = 0
  sys.right_product(e1, u, ou, bf, +1);
  sys.left_product(e1, cf, u, ou, -1);
  // T U - B K_B - K_B B = Id_B
  sys.left_product(e2, tf, u, ou, +1);
  sys.left_product(e2, bf, kb, okb, -1);
  sys.right_product(e2, kb, okb, bf, -1);
  sys.set_rhs(e2, DenseMatrix::identity(f, nb));
  // U T - C K_C - K_C C = Id_C
  sys.right_product(e3, u, ou, tf, +1);
  sys.left_product(e3, cf, kc, okc, -1);
  sys.right_product(e3, kc, okc, cf, -1);
  sys.set_rhs(e3, DenseMatrix::identity(f, nc));

  auto x = solve_particular(sys.matrix(), sys.rhs());
  if (!x) return std::nullopt;
  return KappaIso{check_morphism(u.assemble(*x, ou), c, b),
                  check_kappa(kb.assemble(*x, okb), b, b),
                  check_kappa(kc.assemble(*x, okc), c, c)};
}

}  // namespace bdk
