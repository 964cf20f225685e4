#include "support.hpp"

#include "core/conetri.hpp"
#include "core/triaxioms.hpp"

using namespace bdk;
using namespace bdk::test;

namespace {

// A one-dimensional object with zero differential: not contractible.
Representation line(FieldSpec f, const IndexSetPtr& idx) {
  std::vector<std::size_t> d(idx->size(), 0);
  d[0] = 1;
  return object(f, dims(idx, d));
}

using Cells = std::vector<std::vector<std::optional<BlockMatrix>>>;

}  // namespace

TEST_CASE("rotation certificate") {
  Rng rng(51);
  for (int n = 0; n < 30; ++n) {
    const Pair bc = random_pair(rng, n % 3 ? gf(5) : Q(), 3, 3);
    const Morphism t = random_morphism(rng, bc.b, bc.c);
    const RotationResult r = rotate(t);
    CHECK(all_hold(r.cells));
    CHECK(r.cells.size() == 4);
    CHECK(compose(r.r, r.s) == identity(shift(bc.b)));
    for (const auto& cell : r.cells)
      if (cell.kind == CellKind::Witness) REQUIRE(cell.witness);
    CHECK(r.iso.maps[2] == r.s);
  }
}

TEST_CASE("identity triangle isomorphism and composition") {
  Rng rng(52);
  const Pair bc = random_pair(rng, gf(5), 3, 3);
  const Triangle t = standard_triangle(random_morphism(rng, bc.b, bc.c));
  const TriangleIso id = certify_triangle_iso(t, t, identity(t.x), identity(t.y), identity(t.z));
  const TriangleIso twice = compose_triangle_iso(id, id);
  CHECK(twice.maps[1] == identity(t.y));
}

TEST_CASE("corrupted vertical maps are reported by cell") {
  const auto idx = chain({"a"});
  const FieldSpec f = Q();
  const Representation b = line(f, idx);
  const Triangle t = standard_triangle(identity(b));
  // cone(Id_B) is contractible, so use a triangle with a non-contractible third vertex.
  const Triangle s = standard_triangle(zero_morphism(b, b));

  Error e = error_of([&] { certify_triangle_iso(s, s, identity(b), identity(b), zero_morphism(s.z, s.z)); });
  CHECK(e.code() == ErrorCode::NotIso);
  CHECK(e.cell() == 3);
  e = error_of([&] { certify_triangle_iso(s, s, zero_morphism(b, b), identity(b), identity(s.z)); });
  CHECK(e.code() == ErrorCode::NotIso);
  CHECK(e.cell() == 1);

  const Morphism two = identity(b).scaled(Scalar::from_int(f, 2));
  e = error_of([&] { certify_triangle_iso(t, t, two, identity(b), identity(t.z)); });
  CHECK(e.code() == ErrorCode::SquareFails);
  CHECK(e.cell() == 1);

  CHECK(error_of([&] { certify_triangle_iso(t, s, identity(s.z), identity(b), identity(b)); }).code() ==
        ErrorCode::SourceTargetMismatch);
}

TEST_CASE("rotating three times gives the shifted triangle") {
  Rng rng(53);
  for (int n = 0; n < 20; ++n) {
    const Pair bc = random_pair(rng, gf(5), 3, 3);
    const Triangle t = standard_triangle(random_morphism(rng, bc.b, bc.c));
    const Triangle r3 = rotate_triangle(rotate_triangle(rotate_triangle(t)));
    const Triangle sh = shift_triangle(t);
    CHECK(r3.x == sh.x);
    CHECK(r3.z == sh.z);
    CHECK(r3.u == sh.u);
    CHECK(r3.v == sh.v);
    CHECK(r3.w == sh.w);
    // An iso of triangles rotates to an iso of rotated triangles.
    const RotationResult rot = rotate(t.u);
    TriangleIso iso = rot.iso;
    for (int k = 0; k < 3; ++k) iso = rotate_triangle_iso(iso);
    CHECK(iso.maps[0] == shift_morphism(rot.iso.maps[0]));
  }
}

TEST_CASE("fill-in for commuting squares") {
  Rng rng(54);
  int plus_fails = 0, with_k = 0;
  for (int n = 0; n < 40; ++n) {
    const auto idx = random_index_set(rng, 3);
    const FieldSpec f = n % 4 ? gf(5) : Q();
    std::vector<Representation> o;
    for (int i = 0; i < 4; ++i) o.push_back(random_object(rng, f, random_dims(rng, idx, 3)));
    CommutingSquare sq;
    try {
      sq = random_commuting_square(rng, o[0], o[1], o[2], o[3]);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Degenerate);
      continue;
    }
    const FillResult r = fill_tr3(sq.f, sq.g, sq.t, sq.t2, sq.k);
    CHECK(all_hold(r.cells));
    CHECK(r.h.source() == cone(sq.t));
    CHECK(r.h.target() == cone(sq.t2));
    if (sq.k.matrix.is_zero()) continue;
    ++with_k;
    // The same block matrix with +K in the corner.
    Cells cells(2, std::vector<std::optional<BlockMatrix>>(2));
    cells[0][0] = sq.f.matrix();
    cells[0][1] = sq.k.matrix;
    cells[1][1] = sq.g.matrix();
    const BlockMatrix plus = assemble(f, {o[0].dims(), o[1].dims()}, {o[2].dims(), o[3].dims()}, cells);
    try {
      check_morphism(plus, cone(sq.t), cone(sq.t2));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IntertwiningViolation);
      ++plus_fails;
    }
  }
  CHECK(with_k > 5);
  CHECK(plus_fails > 0);
}

TEST_CASE("fill-in of identities is the identity") {
  Rng rng(55);
  const Pair bc = random_pair(rng, gf(5), 3, 3);
  const Morphism t = random_morphism(rng, bc.b, bc.c);
  const FillResult r = fill_tr3(identity(bc.b), identity(bc.c), t, t, zero_kappa(bc.b, bc.c));
  CHECK(r.h == identity(cone(t)));
}

TEST_CASE("fill-in rejects a wrong witness") {
  const auto idx = chain({"a"});
  const FieldSpec f = Q();
  const Representation b = line(f, idx);
  const Morphism id = identity(b);
  const KappaMatrix k = check_kappa(BlockMatrix::identity(f, b.dims()), b, b);
  // F T' - T G = 2 - 1 = 1, but B K + K B = 0 for the zero differential.
  CHECK(error_of([&] { fill_tr3(id.scaled(Scalar::from_int(f, 2)), id, id, id, k); }).code() ==
        ErrorCode::InvalidWitness);
}

TEST_CASE("octahedron") {
  Rng rng(56);
  for (int n = 0; n < 20; ++n) {
    const auto idx = random_index_set(rng, 3);
    const FieldSpec f = n % 4 ? gf(5) : Q();
    const Representation a = random_object(rng, f, random_dims(rng, idx, 2));
    const Representation b = random_object(rng, f, random_dims(rng, idx, 2));
    const Representation c = random_object(rng, f, random_dims(rng, idx, 2));
    const OctahedronResult r = octahedron(random_morphism(rng, a, b), random_morphism(rng, b, c));
    CHECK(all_hold(r.cells));
    CHECK(r.lambda.source() == r.triangle.z);
  }
  const Pair bc = random_pair(rng, gf(5), 2, 2);
  const OctahedronResult ids = octahedron(identity(bc.b), identity(bc.b));
  CHECK(all_hold(ids.cells));
  const auto idx = chain({"a"});
  const Representation one = line(gf(5), idx);
  const Representation two = object(gf(5), dims(idx, {2}));
  CHECK(error_of([&] { octahedron(identity(one), identity(two)); }).code() == ErrorCode::SourceTargetMismatch);
}
