#include "support.hpp"

#include "core/bruteforce.hpp"

using namespace bdk;
using namespace bdk::test;

TEST_CASE("object validation reports the failing block") {
  const auto idx = chain({"a", "b"}, {{"a", "b"}});
  const FieldSpec f = Q();

  auto err = error_of([&] { object(f, dims(idx, {1, 2})); });
  CHECK(err.code() == ErrorCode::InvolutionDimViolation);
  CHECK(err.row_label() == "a");

  const auto plain = chain({"a", "b"});
  err = error_of([&] { object(f, dims(plain, {1, 1}), {{"a", "b", mat(f, {{1}})}, {"b", "a", mat(f, {{1}})}}); });
  CHECK(err.code() == ErrorCode::SquareNotZero);
  CHECK(err.row_label() == "a");
  CHECK(err.col_label() == "a");

  err = error_of([&] { check_object(dims(plain, {1, 1}), BlockMatrix(f, dims(plain, {1, 2}), dims(plain, {1, 2}))); });
  CHECK(err.code() == ErrorCode::ShapeViolation);
  CHECK(err.row_label() == "b");

  err = error_of([&] { blocks(f, dims(plain, {1, 1}), dims(plain, {1, 1}), {{"a", "b", mat(f, {{1, 2}})}}); });
  CHECK(err.code() == ErrorCode::ShapeViolation);

  const Representation ok = object(f, dims(plain, {1, 1}), {{"a", "b", mat(f, {{1}})}});
  CHECK(ok.dims().total() == 2);
}

TEST_CASE("morphism validation order and labels") {
  const auto idx = chain({"a", "b", "c"}, {{"a", "c"}});
  const FieldSpec f = gf(5);
  const Representation b = object(f, dims(idx, {1, 1, 1}));
  const Representation c = object(f, dims(idx, {1, 1, 1}));

  auto err = error_of([&] { morphism(b, c, {{"b", "a", mat(f, {{1}})}, {"a", "a", mat(f, {{2}})}}); });
  CHECK(err.code() == ErrorCode::TriangularityViolation);
  CHECK(err.row_label() == "b");
  CHECK(err.col_label() == "a");

  err = error_of([&] { morphism(b, c, {{"a", "a", mat(f, {{1}})}, {"c", "c", mat(f, {{2}})}}); });
  CHECK(err.code() == ErrorCode::SigmaDiagonalViolation);
  CHECK(err.row_label() == "a");

  const Representation c2 = object(f, dims(idx, {1, 1, 1}), {{"a", "b", mat(f, {{1}})}});
  err = error_of([&] { morphism(b, c2, {{"a", "a", mat(f, {{1}})}, {"c", "c", mat(f, {{1}})}}); });
  CHECK(err.code() == ErrorCode::IntertwiningViolation);
  CHECK(err.row_label() == "a");
  CHECK(err.col_label() == "b");

  const Representation other = object(Q(), dims(idx, {1, 1, 1}));
  CHECK(error_of([&] { zero_morphism(b, other); }).code() == ErrorCode::MixedFields);
  const Representation elsewhere = object(f, dims(chain({"x"}), {1}));
  CHECK(error_of([&] { zero_morphism(b, elsewhere); }).code() == ErrorCode::MixedIndexSets);
  CHECK(error_of([&] { compose(identity(b), identity(c2)); }).code() == ErrorCode::SourceTargetMismatch);
  CHECK(error_of([&] { identity(b) + identity(c2); }).code() == ErrorCode::SourceTargetMismatch);
}

TEST_CASE("hom dimension matches exhaustive enumeration over GF(2) and GF(3)") {
  for (std::uint64_t p : {2, 3}) {
    Rng rng(p * 100);
    int compared = 0;
    for (int n = 0; n < 40; ++n) {
      const Pair bc = random_pair(rng, gf(p), 2, 2);
      const auto expected = oracle::hom_dim(bc.b, bc.c);
      if (!expected) continue;
      ++compared;
      const auto basis = hom_basis(bc.b, bc.c);
      CHECK(basis.size() == *expected);
      for (const auto& m : basis) CHECK_NOTHROW(check_morphism(m.matrix(), bc.b, bc.c));
    }
    CHECK(compared >= 30);
  }
}

TEST_CASE("composition is associative and unital") {
  Rng rng(21);
  for (int n = 0; n < 40; ++n) {
    const auto idx = random_index_set(rng, 3);
    const FieldSpec f = n % 2 ? Q() : gf(5);
    std::vector<Representation> o;
    for (int i = 0; i < 4; ++i) o.push_back(random_object(rng, f, random_dims(rng, idx, 3)));
    const Morphism s = random_morphism(rng, o[0], o[1]);
    const Morphism t = random_morphism(rng, o[1], o[2]);
    const Morphism u = random_morphism(rng, o[2], o[3]);
    CHECK(compose(compose(s, t), u) == compose(s, compose(t, u)));
    CHECK(compose(identity(o[0]), s) == s);
    CHECK(compose(s, identity(o[1])) == s);
    CHECK(compose(s + s, t) == compose(s, t) + compose(s, t));
    // Diagonal blocks of a product of triangular maps multiply.
    const BlockMatrix st = compose(s, t).matrix();
    for (std::size_t i = 0; i < idx->size(); ++i)
      CHECK(st.block(i, i) == s.matrix().block(i, i) * t.matrix().block(i, i));
  }
}

TEST_CASE("strict isomorphisms") {
  const auto idx = chain({"a", "b"});
  const FieldSpec f = Q();
  const Representation b = object(f, dims(idx, {1, 1}), {{"a", "b", mat(f, {{1}})}});
  CHECK(is_strict_iso(identity(b)));
  CHECK_FALSE(is_strict_iso(zero_morphism(b, b)));
  CHECK(is_strict_iso(identity(b).scaled(Scalar::parse(f, "2/3"))));
  const Representation z = zero_object(idx, f);
  CHECK(is_strict_iso(identity(z)));
  CHECK_FALSE(is_strict_iso(zero_morphism(b, z)));
}

TEST_CASE("block matrix arithmetic") {
  const auto idx = chain({"a", "b"});
  const FieldSpec f = gf(7);
  const DimVector d = dims(idx, {2, 1});
  const BlockMatrix i = BlockMatrix::identity(f, d);
  CHECK(i.flatten().is_identity());
  CHECK(BlockMatrix::from_flat(i.flatten(), d, d) == i);
  CHECK((i - i).is_zero());
  CHECK((i * i) == i);
  CHECK(i.negated().scaled(Scalar::from_int(f, -1)) == i);
  CHECK(d.offset(1) == 2);
  CHECK(d.support() == std::vector<std::size_t>{0, 1});
  CHECK((d + d).values() == std::vector<std::size_t>{4, 2});
  CHECK(blocks(f, d, d, {{"a", "b", DenseMatrix(f, 2, 1)}}).blocks().empty());
}
