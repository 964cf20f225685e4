#include "core/triaxioms.hpp"

#include "core/error.hpp"

namespace bdk {

namespace {

CellCheck exact(std::string name, const Morphism& lhs, const Morphism& rhs) {
  return {std::move(name), CellKind::Exact, lhs == rhs, std::nullopt};
}

CellCheck up_to(std::string name, const Morphism& lhs, const Morphism& rhs, const KappaMatrix& k) {
  const bool ok = witnesses(lhs, rhs, k);
  return {std::move(name), CellKind::Witness, ok, k};
}

using Cells = std::vector<std::vector<std::optional<BlockMatrix>>>;

}  // namespace

bool all_hold(const std::vector<CellCheck>& cells) {
  for (const auto& c : cells)
    if (!c.holds) return false;
  return true;
}

TriangleIso certify_triangle_iso(const Triangle& t1, const Triangle& t2, const Morphism& f1,
                                 const Morphism& f2, const Morphism& f3) {
  const std::array<std::pair<const Morphism*, std::pair<const Representation*, const Representation*>>, 3> ends{{
      {&f1, {&t1.x, &t2.x}}, {&f2, {&t1.y, &t2.y}}, {&f3, {&t1.z, &t2.z}}}};
  for (std::size_t n = 0; n < 3; ++n) {
    const auto& [f, e] = ends[n];
    if (!(f->source() == *e.first) || !(f->target() == *e.second))
      throw Error(ErrorCode::SourceTargetMismatch,
                  "vertical map " + std::to_string(n + 1) + " does not join the triangles")
          .with_cell(static_cast<int>(n + 1));
  }

  std::array<std::optional<KappaIso>, 3> inv;
  for (std::size_t n = 0; n < 3; ++n) {
    inv[n] = is_kappa_iso(*ends[n].first);
    if (!inv[n])
      throw Error(ErrorCode::NotIso, "vertical map " + std::to_string(n + 1) + " is not a kappa-isomorphism")
          .with_cell(static_cast<int>(n + 1));
  }

  const std::array<std::pair<Morphism, Morphism>, 3> squares{{
      {compose(t1.u, f2), compose(f1, t2.u)},
      {compose(t1.v, f3), compose(f2, t2.v)},
      {compose(t1.w, shift_morphism(f1)), compose(f3, t2.w)}}};
  std::array<std::optional<KappaMatrix>, 3> wit;
  for (std::size_t n = 0; n < 3; ++n) {
    wit[n] = kappa_equiv(squares[n].first, squares[n].second);
    if (!wit[n])
      throw Error(ErrorCode::SquareFails, "square " + std::to_string(n + 1) + " does not commute up to homotopy")
          .with_cell(static_cast<int>(n + 1));
  }
  return {t1, t2, {f1, f2, f3}, {*wit[0], *wit[1], *wit[2]}, {*inv[0], *inv[1], *inv[2]}};
}

TriangleIso compose_triangle_iso(const TriangleIso& a, const TriangleIso& b) {
  return certify_triangle_iso(a.from, b.to, compose(a.maps[0], b.maps[0]), compose(a.maps[1], b.maps[1]),
                              compose(a.maps[2], b.maps[2]));
}

TriangleIso rotate_triangle_iso(const TriangleIso& iso) {
  return certify_triangle_iso(rotate_triangle(iso.from), rotate_triangle(iso.to), iso.maps[1], iso.maps[2],
                              shift_morphism(iso.maps[0]));
}

RotationResult rotate(const Morphism& t) {
  const Representation& b = t.source();
  const Representation& c = t.target();
  const FieldSpec f = t.field();
  const Triangle std_t = standard_triangle(t);
  const Triangle rotated = rotate_triangle(std_t);
  const Morphism& iota_c = std_t.v;
  const Triangle std_iota = standard_triangle(iota_c);
  const Representation& cone_iota = std_iota.z;
  const Representation sb = shift(b);
  const Representation sc = shift(c);

  // Parts of C_{iota_C} inside each band: (C, B, C).
  const std::vector<DimVector> parts{c.dims(), b.dims(), c.dims()};
  const Morphism r = check_morphism(
      assemble(f, {b.dims()}, parts, Cells{{t.matrix().negated(), BlockMatrix::identity(f, b.dims()), std::nullopt}}),
      sb, cone_iota);
  const Morphism s = check_morphism(part_projection(f, parts, 1), cone_iota, sb);

  std::vector<CellCheck> cells;
  cells.push_back(exact("R S = Id_[B]", compose(r, s), identity(sb)));
  cells.push_back(exact("iota_{C_T} S = pi_B", compose(std_iota.v, s), std_t.w));

  Cells k1(3, std::vector<std::optional<BlockMatrix>>(3));
  k1[2][0] = BlockMatrix::identity(f, c.dims());
  cells.push_back(up_to("Id - S R = K C_{iota_C} + C_{iota_C} K", identity(cone_iota), compose(s, r),
                        check_kappa(assemble(f, parts, parts, k1), cone_iota, cone_iota)));

  Cells k2(3, std::vector<std::optional<BlockMatrix>>(1));
  k2[2][0] = BlockMatrix::identity(f, c.dims());
  cells.push_back(up_to("pi_C + S T = C_{iota_C} K - K C", std_iota.w, compose(s, rotated.w),
                        check_kappa(assemble(f, parts, {c.dims()}, k2), cone_iota, sc)));

  TriangleIso iso = certify_triangle_iso(std_iota, rotated, identity(c), identity(std_t.z), s);
  return {rotated, std_iota, r, s, std::move(iso), std::move(cells)};
}

FillResult fill_tr3(const Morphism& f, const Morphism& g, const Morphism& t, const Morphism& t2,
                    const KappaMatrix& k) {
  if (!(f.source() == t.source()) || !(g.source() == t.target()) || !(f.target() == t2.source()) ||
      !(g.target() == t2.target()))
    throw Error(ErrorCode::SourceTargetMismatch, "square maps do not line up");
  if (!(k.source == t.source()) || !(k.target == t2.target()) || !witnesses(compose(f, t2), compose(t, g), k))
    throw Error(ErrorCode::InvalidWitness, "K does not satisfy F T' - T G = A K + K B'");

  const Representation& a = t.source();
  const Representation& b = t.target();
  const Representation& a2 = t2.source();
  const Representation& b2 = t2.target();
  const FieldSpec fs = t.field();
  const Triangle s1 = standard_triangle(t);
  const Triangle s2 = standard_triangle(t2);
  const Morphism h = check_morphism(assemble(fs, {a.dims(), b.dims()}, {a2.dims(), b2.dims()},
                                             Cells{{f.matrix(), k.matrix.negated()}, {std::nullopt, g.matrix()}}),
                                    s1.z, s2.z);
  std::vector<CellCheck> cells;
  cells.push_back(exact("iota_B H = G iota_B'", compose(s1.v, h), compose(g, s2.v)));
  cells.push_back(exact("pi_A [F] = H pi_A'", compose(s1.w, shift_morphism(f)), compose(h, s2.w)));
  return {h, std::move(cells)};
}

OctahedronResult octahedron(const Morphism& s, const Morphism& t) {
  if (!(s.target() == t.source()))
    throw Error(ErrorCode::SourceTargetMismatch, "octahedron needs S: A -> B and T: B -> C");
  const Representation& a = s.source();
  const Representation& b = s.target();
  const Representation& c = t.target();
  const FieldSpec fs = s.field();
  const Morphism st = compose(s, t);
  const Triangle tri_s = standard_triangle(s);
  const Triangle tri_st = standard_triangle(st);
  const Triangle tri_t = standard_triangle(t);

  const Morphism f = check_morphism(assemble(fs, {a.dims(), b.dims()}, {a.dims(), c.dims()},
                                             Cells{{BlockMatrix::identity(fs, a.dims()), std::nullopt},
                                                   {std::nullopt, t.matrix()}}),
                                    tri_s.z, tri_st.z);
  const Morphism g = check_morphism(assemble(fs, {a.dims(), c.dims()}, {b.dims(), c.dims()},
                                             Cells{{s.matrix(), std::nullopt},
                                                   {std::nullopt, BlockMatrix::identity(fs, c.dims())}}),
                                    tri_st.z, tri_t.z);
  const Triangle tri_f = standard_triangle(f);

  // C_F bands hold the parts (A, B, A, C).
  const std::vector<DimVector> parts_f{a.dims(), b.dims(), a.dims(), c.dims()};
  Cells lam(2, std::vector<std::optional<BlockMatrix>>(4));
  lam[0][1] = BlockMatrix::identity(fs, b.dims());
  lam[1][3] = BlockMatrix::identity(fs, c.dims());
  const Morphism lambda = check_morphism(assemble(fs, {b.dims(), c.dims()}, parts_f, lam), tri_t.z, tri_f.z);

  std::vector<CellCheck> cells;
  cells.push_back(exact("iota_B F = T iota'_C", compose(tri_s.v, f), compose(t, tri_st.v)));
  cells.push_back(exact("F pi'_A = pi_A", compose(f, tri_st.w), tri_s.w));
  cells.push_back(exact("iota'_C G = iota_C", compose(tri_st.v, g), tri_t.v));
  cells.push_back(exact("G pi_B = pi'_A [S]", compose(g, tri_t.w), compose(tri_st.w, shift_morphism(s))));
  cells.push_back(exact("Lambda pi_{C_S} = pi_B [iota_B]", compose(lambda, tri_f.w),
                        compose(tri_t.w, shift_morphism(tri_s.v))));

  Cells kc(2, std::vector<std::optional<BlockMatrix>>(4));
  kc[0][0] = BlockMatrix::identity(fs, a.dims());
  cells.push_back(up_to("iota_{C_ST} - G Lambda = C_ST K + K C_F", tri_f.v, compose(g, lambda),
                        check_kappa(assemble(fs, {a.dims(), c.dims()}, parts_f, kc), tri_st.z, tri_f.z)));

  auto inv = is_kappa_iso(lambda);
  cells.push_back({"Lambda is a kappa-isomorphism", CellKind::Witness, inv.has_value(), std::nullopt});
  if (!inv) throw Error(ErrorCode::NotIso, "Lambda is not a kappa-isomorphism").with_cell(3);

  const Triangle top = make_triangle(f, g, compose(tri_t.w, shift_morphism(tri_s.v)));
  TriangleIso iso = certify_triangle_iso(top, tri_f, identity(tri_s.z), identity(tri_st.z), lambda);
  return {f, g, lambda, std::move(*inv), top, std::move(iso), std::move(cells)};
}

}  // namespace bdk
