#include <set>

#include "support.hpp"

#include "core/homotopy.hpp"

using namespace bdk;
using namespace bdk::test;

TEST_CASE("streams are deterministic and distinct") {
  Rng a(7), b(7), c(8);
  for (int i = 0; i < 10; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }
  CHECK(Rng::for_stream(1, 2, 3).next() == Rng::for_stream(1, 2, 3).next());
  CHECK(Rng::for_stream(1, 2, 3).next() != Rng::for_stream(1, 3, 2).next());
  CHECK(Rng::for_stream(1, 2, 3).next() != Rng::for_stream(1, 2, 4).next());

  std::uint64_t s1 = 0, s2 = 0;
  CHECK(splitmix64(s1) == splitmix64(s2));
  CHECK(splitmix64(s1) != 0);
}

TEST_CASE("bounded draws") {
  Rng rng(9);
  std::array<int, 5> seen{};
  for (int i = 0; i < 2000; ++i) {
    const auto x = rng.below(5);
    REQUIRE(x < 5);
    ++seen[x];
  }
  for (int n : seen) CHECK(n > 300);
  for (int i = 0; i < 200; ++i) {
    const auto x = rng.between(2, 4);
    CHECK(x >= 2);
    CHECK(x <= 4);
    CHECK_FALSE(rng.nonzero_scalar(gf(2)).is_zero());
    CHECK_FALSE(rng.nonzero_scalar(Q()).is_zero());
  }
}

TEST_CASE("same seed gives the same instance") {
  auto draw = [](std::uint64_t seed) {
    Rng rng(seed);
    const Pair bc = random_pair(rng, gf(5), 3, 3);
    return std::make_pair(bc, random_morphism(rng, bc.b, bc.c));
  };
  const auto x = draw(99), y = draw(99);
  CHECK(x.first.b == y.first.b);
  CHECK(x.second == y.second);
}

TEST_CASE("generators cover the parameter space") {
  Rng rng(10);
  std::set<std::size_t> sizes;
  bool paired = false, fixed = false, nonzero_object = false, nonzero_map = false;
  for (int n = 0; n < 200; ++n) {
    const auto idx = random_index_set(rng, 3);
    sizes.insert(idx->size());
    for (std::size_t i = 0; i < idx->size(); ++i) (idx->sigma(i) == i ? fixed : paired) = true;
    const DimVector d = random_dims(rng, idx, 3);
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d[i] <= 3);
      CHECK(d[i] == d[idx->sigma(i)]);
    }
    const Representation b = random_object(rng, gf(5), d);
    CHECK((b.matrix() * b.matrix()).is_zero());
    nonzero_object |= !b.matrix().is_zero();
    const Representation c = random_object(rng, gf(5), random_dims(rng, idx, 3));
    const Morphism t = random_morphism(rng, b, c);
    nonzero_map |= !t.matrix().is_zero();
    const KappaMatrix k = random_kappa(rng, b, c);
    CHECK_NOTHROW(check_kappa(k.matrix, b, c));
  }
  CHECK(sizes == std::set<std::size_t>{1, 2, 3});
  CHECK(paired);
  CHECK(fixed);
  CHECK(nonzero_object);
  CHECK(nonzero_map);
}

TEST_CASE("commuting squares satisfy their defining equation") {
  Rng rng(12);
  int made = 0;
  for (int n = 0; n < 50; ++n) {
    const auto idx = random_index_set(rng, 3);
    std::vector<Representation> o;
    for (int i = 0; i < 4; ++i) o.push_back(random_object(rng, gf(5), random_dims(rng, idx, 3)));
    try {
      const CommutingSquare sq = random_commuting_square(rng, o[0], o[1], o[2], o[3]);
      CHECK(witnesses(compose(sq.f, sq.t2), compose(sq.t, sq.g), sq.k));
      CHECK(sq.f.source() == o[0]);
      CHECK(sq.g.target() == o[3]);
      ++made;
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Degenerate);
    }
  }
  CHECK(made > 30);
}
