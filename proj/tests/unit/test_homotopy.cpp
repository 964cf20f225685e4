#include "support.hpp"

#include "core/bruteforce.hpp"
#include "core/conetri.hpp"
#include "core/homotopy.hpp"
#include "core/problem.hpp"

using namespace bdk;
using namespace bdk::test;

TEST_CASE("contractible object") {
  const ProblemFile p = load_problem(BDK_FIXTURE_DIR "/contractible.json");
  const auto k = kappa_equiv(p.morphism("id"), p.morphism("zero"));
  REQUIRE(k);
  CHECK(k->matrix.flatten() == mat(Q(), {{0, 0}, {1, 0}}));
  CHECK(witnesses(p.morphism("id"), p.morphism("zero"), *k));
  CHECK(quotient_hom_dim(p.object("Z"), p.object("Z")) == 0);
  CHECK(quotient_hom_dim(p.object("B"), p.object("B")) == 1);
  CHECK_FALSE(kappa_equiv(p.morphism("idB"), zero_morphism(p.object("B"), p.object("B"))));
}

TEST_CASE("kappa-matrix shape") {
  const auto idx = chain({"a", "b"}, {{"a", "b"}});
  const FieldSpec f = Q();
  const Representation b = object(f, dims(idx, {1, 1}));
  CHECK(error_of([&] { check_kappa(blocks(f, b.dims(), b.dims(), {{"b", "a", mat(f, {{1}})}}), b, b); }).code() ==
        ErrorCode::TriangularityViolation);
  CHECK(error_of([&] { check_kappa(blocks(f, b.dims(), b.dims(), {{"a", "a", mat(f, {{1}})}}), b, b); }).code() ==
        ErrorCode::SigmaDiagonalViolation);
  CHECK_NOTHROW(check_kappa(blocks(f, b.dims(), b.dims(), {{"a", "b", mat(f, {{5}})}}), b, b));
}

TEST_CASE("homotopy is an equivalence relation and a congruence") {
  Rng rng(41);
  int moved = 0;
  for (int n = 0; n < 40; ++n) {
    const auto idx = random_index_set(rng, 3);
    const FieldSpec f = n % 2 ? Q() : gf(3);
    const Representation a = random_object(rng, f, random_dims(rng, idx, 3));
    const Representation b = random_object(rng, f, random_dims(rng, idx, 3));
    const Representation c = random_object(rng, f, random_dims(rng, idx, 3));
    const Morphism s = random_morphism(rng, b, c);
    const Morphism u = random_morphism(rng, c, a);
    const Morphism v = random_morphism(rng, a, b);
    // Subtract random null-homotopic maps to get s ~ t ~ w.
    const auto null = null_homotopic_subspace(b, c);
    auto null_combo = [&] {
      Morphism m = zero_morphism(b, c);
      for (const auto& x : null) m = m + x.scaled(rng.scalar(f));
      return m;
    };
    const Morphism t = s - null_combo();
    const Morphism w = t - null_combo();
    const auto k1 = kappa_equiv(s, t);
    const auto k2 = kappa_equiv(t, w);
    REQUIRE(k1);
    REQUIRE(k2);
    moved += !(s == w);
    CHECK(witnesses(s, t, *k1));
    CHECK(witnesses(s, s, zero_kappa(b, c)));
    CHECK(witnesses(t, s, check_kappa(k1->matrix.negated(), b, c)));
    CHECK(witnesses(s, w, check_kappa(k1->matrix + k2->matrix, b, c)));
    const auto solved = kappa_equiv(s, w);
    REQUIRE(solved);
    CHECK(witnesses(s, w, *solved));
    CHECK(witnesses(compose(s, u), compose(t, u), check_kappa(k1->matrix * u.matrix(), b, a)));
    CHECK(witnesses(compose(v, s), compose(v, t), check_kappa(v.matrix() * k1->matrix, a, c)));
  }
  CHECK(moved > 5);
}

TEST_CASE("homotopy relation matches exhaustive search over GF(2)") {
  Rng rng(42);
  int compared = 0, related = 0;
  for (int n = 0; n < 60; ++n) {
    const Pair bc = random_pair(rng, gf(2), 2, 2);
    const Morphism t = random_morphism(rng, bc.b, bc.c);
    const Morphism z = zero_morphism(bc.b, bc.c);
    const auto expected = oracle::kappa_related(t, z);
    if (!expected) continue;
    ++compared;
    related += *expected;
    CHECK(kappa_equiv(t, z).has_value() == *expected);
  }
  CHECK(compared >= 40);
  CHECK(related > 0);
  CHECK(related < compared);
}

TEST_CASE("null-homotopic subspace over GF(2) by enumeration") {
  Rng rng(43);
  for (int n = 0; n < 25; ++n) {
    const Pair bc = random_pair(rng, gf(2), 2, 2);
    const auto all = oracle::all_morphisms(bc.b, bc.c);
    if (!all || all->size() > 64) continue;
    std::size_t null = 0;
    for (const auto& flat : *all) {
      const Morphism m = check_morphism(
          BlockMatrix::from_flat(oracle::dense_of(gf(2), flat), bc.b.dims(), bc.c.dims()), bc.b, bc.c);
      null += *oracle::kappa_related(m, zero_morphism(bc.b, bc.c));
    }
    const auto sub = null_homotopic_subspace(bc.b, bc.c);
    CHECK(null == (std::size_t{1} << sub.size()));
    CHECK(quotient_hom_dim(bc.b, bc.c) == hom_basis(bc.b, bc.c).size() - sub.size());
    for (const auto& m : sub) CHECK(kappa_equiv(m, zero_morphism(bc.b, bc.c)));
  }
}

TEST_CASE("kappa-isomorphisms") {
  const ProblemFile p = load_problem(BDK_FIXTURE_DIR "/contractible.json");
  const Representation& z = p.object("Z");
  const Representation zero = zero_object(z.index_set(), Q());
  const auto to_zero = is_kappa_iso(zero_morphism(z, zero));
  REQUIRE(to_zero);
  CHECK(witnesses(compose(zero_morphism(z, zero), to_zero->inverse), identity(z), to_zero->k_source));
  CHECK_FALSE(is_kappa_iso(zero_morphism(p.object("B"), p.object("B"))));
  CHECK_FALSE(is_kappa_iso(zero_morphism(p.object("B"), zero)));

  Rng rng(44);
  for (int n = 0; n < 30; ++n) {
    const Pair bc = random_pair(rng, gf(5), 3, 3);
    const auto id = is_kappa_iso(identity(bc.b));
    REQUIRE(id);
    CHECK(id->inverse == identity(bc.b));
    // Adding a contractible summand keeps the inclusion a kappa-iso.
    const Representation cz = cone(identity(bc.c));
    const DirectSum s = direct_sum(bc.b, cz);
    const auto inc = is_kappa_iso(s.iota_hat);
    REQUIRE(inc);
    CHECK(witnesses(compose(s.iota_hat, inc->inverse), identity(bc.b), inc->k_source));
    CHECK(witnesses(compose(inc->inverse, s.iota_hat), identity(s.sum), inc->k_target));
    if (!is_kappa_iso(zero_morphism(bc.b, zero_object(bc.b.index_set(), gf(5)))))
      CHECK_FALSE(is_kappa_iso(s.iota));
  }
}
