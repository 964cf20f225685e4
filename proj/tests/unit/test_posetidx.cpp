#include "support.hpp"

#include "core/posetidx.hpp"

using namespace bdk;
using namespace bdk::test;

TEST_CASE("order and involution") {
  const auto idx = chain({"0", "1/2", "1", "2"}, {{"1/2", "2"}});
  CHECK(idx->size() == 4);
  CHECK(idx->position("1") == 2);
  CHECK(idx->sigma("1/2") == "2");
  CHECK(idx->sigma("2") == "1/2");
  CHECK(idx->sigma("0") == "0");
  CHECK(idx->compare("2", "1/2") == std::strong_ordering::greater);
  CHECK(idx->compare("0", "0") == std::strong_ordering::equal);
  CHECK(idx->involution_pairs() == std::vector<IndexSet::Pair>{{"1/2", "2"}});
  CHECK_FALSE(idx->find("3"));
  // Labels are opaque: declared order wins over any numeric reading.
  const auto rev = chain({"10", "9"});
  CHECK(rev->compare("10", "9") == std::strong_ordering::less);
}

TEST_CASE("sigma is an involution") {
  Rng rng(17);
  for (int n = 0; n < 50; ++n) {
    const auto idx = random_index_set(rng, 6);
    for (std::size_t i = 0; i < idx->size(); ++i) CHECK(idx->sigma(idx->sigma(i)) == i);
  }
}

TEST_CASE("construction errors carry the label") {
  auto err = error_of([] { chain({"a", "b", "a"}); });
  CHECK(err.code() == ErrorCode::DuplicateLabel);
  CHECK(err.row_label() == "a");
  CHECK(error_of([] { chain({"a", ""}); }).code() == ErrorCode::InvalidLabel);
  CHECK(error_of([] { chain({"a,b"}); }).code() == ErrorCode::InvalidLabel);
  err = error_of([] { chain({"a", "b"}, {{"a", "c"}}); });
  CHECK(err.code() == ErrorCode::UnknownLabelInPair);
  CHECK(err.row_label() == "c");
  err = error_of([] { chain({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); });
  CHECK(err.code() == ErrorCode::OverlappingPairs);
  CHECK(err.row_label() == "b");
  CHECK(error_of([] { chain({"a"})->position("z"); }).code() == ErrorCode::UnknownLabel);
}

TEST_CASE("index set identity") {
  const auto a = chain({"x", "y"});
  const auto b = chain({"x", "y"});
  CHECK(same_index_set(a, b));
  CHECK_FALSE(same_index_set(a, chain({"y", "x"})));
  CHECK_FALSE(same_index_set(a, chain({"x", "y"}, {{"x", "y"}})));
}
