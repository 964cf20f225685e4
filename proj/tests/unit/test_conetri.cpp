#include "support.hpp"

#include "core/conetri.hpp"
#include "core/problem.hpp"

using namespace bdk;
using namespace bdk::test;

TEST_CASE("cone and canonical maps of the worked GF(5) example") {
  const ProblemFile p = load_problem(BDK_FIXTURE_DIR "/gf5_cone.json");
  const Morphism& t = p.morphism("T");
  const FieldSpec f = gf(5);
  const Representation c = cone(t);
  CHECK(c.dims().values() == std::vector<std::size_t>{2, 1, 1, 1});
  CHECK(c.matrix().flatten() == mat(f, {{0, 1, 2, 4, 3},
                                        {0, 0, 0, 0, 1},
                                        {0, 0, 0, 0, 0},
                                        {0, 0, 0, 0, 1},
                                        {0, 0, 0, 0, 0}}));
  const CanonicalMaps m = canonical_maps(t);
  CHECK(m.iota.matrix().flatten() == mat(f, {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}}));
  CHECK(m.pi.matrix().flatten() == mat(f, {{1, 0}, {0, 0}, {0, 0}, {0, 1}, {0, 0}}));
  CHECK(m.pi.target() == shift(t.source()));
  CHECK(compose(m.iota, m.pi).matrix().is_zero());
  CHECK_FALSE(hat_maps(t));
}

TEST_CASE("cone layout stacks parts inside each band") {
  const auto idx = chain({"x", "y"});
  const FieldSpec f = Q();
  const DimVector a = dims(idx, {1, 2}), b = dims(idx, {3, 0});
  CHECK(stack({a, b}).values() == std::vector<std::size_t>{4, 2});
  const BlockMatrix in1 = part_inclusion(f, {a, b}, 1);
  CHECK(in1.row_dims() == b);
  CHECK(in1.flatten() == mat(f, {{0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}}));
  CHECK((in1 * part_projection(f, {a, b}, 1)).flatten() == DenseMatrix::identity(f, 3));
  CHECK((part_inclusion(f, {a, b}, 0) * part_projection(f, {a, b}, 1)).is_zero());
}

TEST_CASE("cones of random morphisms are objects") {
  Rng rng(31);
  for (int n = 0; n < 60; ++n) {
    const FieldSpec f = n % 3 ? gf(5) : Q();
    const Pair bc = random_pair(rng, f, 3, 3);
    const Morphism t = random_morphism(rng, bc.b, bc.c);
    const Representation c = cone(t);
    CHECK_NOTHROW(check_object(c.dims(), c.matrix()));
    CHECK(c.dims() == bc.b.dims() + bc.c.dims());
    CHECK_NOTHROW(standard_triangle(t));
  }
}

TEST_CASE("shift") {
  Rng rng(32);
  for (int n = 0; n < 30; ++n) {
    const Pair bc = random_pair(rng, gf(7), 3, 3);
    const Morphism t = random_morphism(rng, bc.b, bc.c);
    CHECK(shift(shift(bc.b)) == bc.b);
    CHECK(shift(bc.b).matrix() == bc.b.matrix().negated());
    const Morphism st = shift_morphism(t);
    CHECK(st.matrix() == t.matrix());
    CHECK(st.source() == shift(bc.b));
    CHECK(shift_morphism(compose(t, identity(bc.c))) == compose(st, identity(shift(bc.c))));
    const Triangle tri = shift_triangle(standard_triangle(t));
    CHECK(tri.x == shift(bc.b));
    CHECK(tri.u == -st);
  }
}

TEST_CASE("biproduct identities") {
  Rng rng(33);
  for (int n = 0; n < 40; ++n) {
    const Pair bc = random_pair(rng, n % 2 ? Q() : gf(5), 3, 3);
    const DirectSum s = direct_sum(bc.b, bc.c);
    CHECK(compose(s.iota_hat, s.pi) == identity(bc.b));
    CHECK(compose(s.iota, s.pi_hat) == identity(bc.c));
    CHECK(compose(s.iota_hat, s.pi_hat).matrix().is_zero());
    CHECK(compose(s.iota, s.pi).matrix().is_zero());
    CHECK(compose(s.pi, s.iota_hat) + compose(s.pi_hat, s.iota) == identity(s.sum));
  }
}

TEST_CASE("hat maps exist exactly for the zero morphism") {
  Rng rng(34);
  int nonzero = 0;
  for (int n = 0; n < 60; ++n) {
    const Pair bc = random_pair(rng, gf(5), 3, 3);
    const Morphism t = random_morphism(rng, bc.b, bc.c);
    CHECK(hat_maps(t).has_value() == t.matrix().is_zero());
    nonzero += !t.matrix().is_zero();
    const auto zero = hat_maps(zero_morphism(bc.b, bc.c));
    REQUIRE(zero);
    CHECK(zero->iota_hat.target() == cone(zero_morphism(bc.b, bc.c)));
    CHECK(compose(zero->iota_hat, canonical_maps(zero_morphism(bc.b, bc.c)).pi) == identity(shift(bc.b)));
  }
  CHECK(nonzero > 20);
}

TEST_CASE("triangle shape checks") {
  Rng rng(35);
  const Pair bc = random_pair(rng, gf(5), 2, 2);
  const Triangle t = standard_triangle(zero_morphism(bc.b, bc.c));
  CHECK(error_of([&] { make_triangle(t.u, t.w, t.v); }).code() == ErrorCode::SourceTargetMismatch);
  const Triangle r = rotate_triangle(t);
  CHECK(r.x == t.y);
  CHECK(r.z == shift(t.x));
  CHECK(r.w == -shift_morphism(t.u));
}
