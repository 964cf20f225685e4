#include "support.hpp"

#include "core/problem.hpp"

using namespace bdk;
using namespace bdk::test;

namespace {

const char* kDoc = R"({
  "field": {"kind": "GFp", "p": 3},
  "poset": {"order": ["a", "b"], "involution": []},
  "objects": {
    "X": {"dims": {"a": 2, "b": 1}, "blocks": {"a,b": [[1], [0]]}},
    "Y": {"dims": {"a": 2, "b": 1}, "blocks": {"a,b": [1, 0]}}
  },
  "morphisms": {
    "f": {"source": "X", "target": "Y", "blocks": {"a,a": [[1, 0], [0, 1]], "b,b": [1]}}
  },
  "kappas": {
    "k": {"source": "X", "target": "Y", "blocks": {"a,b": ["2", "-1"]}}
  }
})";

}  // namespace

TEST_CASE("flat and nested entries parse alike") {
  const ProblemFile p = parse_problem(kDoc);
  CHECK(p.object("X") == p.object("Y"));
  CHECK(p.kappa("k").matrix.block(0, 1) == mat(gf(3), {{2}, {2}}));
  CHECK(p.morphism("f") == identity(p.object("X")));
  CHECK(error_of([&] { p.object("Z"); }).code() == ErrorCode::NotFound);
}

TEST_CASE("serialization round trip") {
  for (const char* name : {"gf5_cone.json", "nonabelian.json", "nonabelian_split.json", "contractible.json"}) {
    CAPTURE(name);
    const ProblemFile p = load_problem(std::string(BDK_FIXTURE_DIR "/") + name);
    const ProblemFile again = parse_problem(serialize_problem(p));
    CHECK(again == p);
    CHECK(serialize_problem(again) == serialize_problem(p));
  }
  const ProblemFile p = parse_problem(kDoc);
  CHECK(parse_problem(serialize_problem(p)) == p);
}

TEST_CASE("generated problems round trip") {
  Rng rng(61);
  for (int n = 0; n < 20; ++n) {
    const FieldSpec f = n % 2 ? Q() : gf(7);
    const auto idx = random_index_set(rng, 3);
    ProblemFile p(f, idx);
    const Representation b = random_object(rng, f, random_dims(rng, idx, 3));
    const Representation c = random_object(rng, f, random_dims(rng, idx, 3));
    p.add_object("B", b);
    p.add_object("C", c);
    p.add_morphism("T", random_morphism(rng, b, c));
    p.add_kappa("K", random_kappa(rng, b, c));
    CHECK(parse_problem(serialize_problem(p)) == p);
  }
}

TEST_CASE("interning") {
  const auto idx = chain({"a"});
  ProblemFile p(Q(), idx);
  const Representation b = object(Q(), dims(idx, {1}));
  const Representation c = object(Q(), dims(idx, {2}));
  p.add_object("B", b);
  CHECK(p.intern(b, "other") == "B");
  CHECK(p.intern(c, "B") == "B.2");
  p.add_morphism("z", zero_morphism(c, object(Q(), dims(idx, {3}))));
  CHECK(p.objects().back().first == "z.tgt");
}

TEST_CASE("validation errors name the entry and the condition") {
  Error e = error_of([] { load_problem(BDK_FIXTURE_DIR "/bad_involution.json"); });
  CHECK(e.code() == ErrorCode::Validation);
  CHECK(e.row_label() == "C");
  CHECK(e.col_label() == "InvolutionDimViolation");

  e = error_of([] { load_problem(BDK_FIXTURE_DIR "/missing.json"); });
  CHECK(e.code() == ErrorCode::Io);

  e = error_of([] { load_problem(BDK_FIXTURE_DIR "/bad_syntax.json"); });
  CHECK(e.code() == ErrorCode::Syntax);
  CHECK(std::string(e.what()).find("line 3") != std::string::npos);

  std::string doc = kDoc;
  doc.replace(doc.find("\"target\": \"Y\""), 13, "\"target\": \"W\"");
  e = error_of([&] { parse_problem(doc); });
  CHECK(e.row_label() == "f");
  CHECK(e.col_label() == "UnknownObject");

  doc = kDoc;
  doc.replace(doc.find("\"b,b\": [1]"), 10, "\"b,a\": [1, 0]");
  e = error_of([&] { parse_problem(doc); });
  CHECK(e.row_label() == "f");
  CHECK(e.col_label() == "TriangularityViolation");

  doc = kDoc;
  doc.replace(doc.find("[[1], [0]]"), 10, "[[1, 0]]");
  e = error_of([&] { parse_problem(doc); });
  CHECK(e.row_label() == "X");
  CHECK(e.col_label() == "ShapeViolation");
}
