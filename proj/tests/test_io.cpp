#include <filesystem>

#include "doctest.h"

#include "hgalg/cache.hpp"
#include "hgalg/errors.hpp"
#include "hgalg/json_io.hpp"
#include "hgalg/verify.hpp"

using namespace hgalg;

TEST_CASE("grid parsing") {
  const Grid g = Grid::parse("n=3..6, alpha=1/2,d=4");
  CHECK(g.values("n", {}) == std::vector<int>{3, 4, 5, 6});
  CHECK(g.values("alpha", {}) == std::vector<int>{1, 2});
  CHECK(g.value("d", 0) == 4);
  CHECK(g.values("missing", {7}) == std::vector<int>{7});
  CHECK(g.preset().empty());
  CHECK(Grid::parse("small-world,d=1").preset() == "small-world");
  CHECK_THROWS_AS(Grid::parse("n=5..3"), InvalidArgument);
  CHECK_THROWS_AS(Grid::parse("n=x"), InvalidArgument);
  CHECK_THROWS_AS(Grid::parse("n=1,n=2"), InvalidArgument);
  CHECK_THROWS_AS(Grid::parse("a,b"), InvalidArgument);
  CHECK_THROWS_AS(g.value("n", 0), InvalidArgument);
  CHECK_THROWS_AS(g.restrict_keys({"n", "d"}), InvalidArgument);
}

TEST_CASE("json round trips") {
  const Hypergraph h(6, bit(0) | bit(1) | bit(2) | bit(4), {mask_of({0, 1}), mask_of({1, 2})});
  const auto doc = hypergraph_from_json(parse_json(canonical_dump(to_json(h))));
  CHECK(doc.hypergraph.edges() == h.edges());
  CHECK(doc.hypergraph.vertex_set() == h.vertex_set());

  const FamilySpec spec{FamilyKind::cycle, 4, 3, 1, {}};
  const auto tagged = hypergraph_from_json(to_json(make_family(spec), spec));
  REQUIRE(tagged.family);
  CHECK(tagged.family->kind == FamilyKind::cycle);
  CHECK(tagged.family->n == 4);

  const auto c = SimplicialComplex::from_facets(4, {mask_of({0, 1, 2}), mask_of({2, 3})});
  CHECK(complex_from_json(to_json(c)) == c);
  const auto v = SimplicialComplex::void_complex(3);
  CHECK(complex_from_json(to_json(v)).is_void());

  const MonomialIdeal ideal(5, {mask_of({2, 3}), mask_of({0, 1})});
  CHECK(ideal_from_json(to_json(ideal)).generators() == ideal.generators());

  const AttachmentSequence seq{3, {{4, 0, std::vector<int>{}}, {4, 3, std::nullopt}}};
  const auto back = sequence_from_json(to_json(seq));
  CHECK(back.d == 3);
  CHECK(back.steps.size() == 2);
  CHECK_FALSE(back.steps[1].glue.has_value());

  BettiTable t(4);
  t.set(0, 0, 1);
  t.set(2, 4, 1);
  CHECK(betti_table_from_json(to_json(t)) == t);
}

TEST_CASE("json validation") {
  CHECK_THROWS_AS(parse_json("{"), InvalidArgument);
  CHECK_THROWS_AS(hypergraph_from_json(parse_json(R"({"n":3,"edges":[[0,3]]})")), InvalidArgument);
  CHECK_THROWS_AS(hypergraph_from_json(parse_json(R"({"n":3,"edges":[[0,0]]})")), InvalidArgument);
  CHECK_THROWS_AS(hypergraph_from_json(parse_json(R"({"n":-1,"edges":[]})")), InvalidArgument);
  CHECK_THROWS_AS(hypergraph_from_json(parse_json(R"({"n":3,"edges":"x"})")), InvalidArgument);
  CHECK_THROWS_AS(complex_from_json(parse_json(R"({"n":3,"facets":[],"void":false})")), InvalidArgument);
  CHECK_THROWS_AS(document_kind(parse_json(R"({"n":3})")), InvalidArgument);
  CHECK(document_kind(parse_json(R"({"n":3,"generators":[]})")) == DocumentKind::ideal);
}

TEST_CASE("result cache") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "hgalg-test-cache";
  fs::remove_all(dir);
  const ResultCache cache(dir);
  const auto k1 = ResultCache::key("{\"n\":1}", "betti", "field=q");
  const auto k2 = ResultCache::key("{\"n\":1}", "betti", "field=gf2");
  CHECK(k1.size() == 64);
  CHECK(k1 != k2);
  CHECK_FALSE(cache.get(k1));
  cache.put(k1, "payload\n");
  REQUIRE(cache.get(k1));
  CHECK(*cache.get(k1) == "payload\n");
  CHECK(fs::exists(dir / k1.substr(0, 2) / k1));
  CHECK(ResultCache::default_root(std::string("/x/y")) == fs::path("/x/y"));
  fs::remove_all(dir);
}

TEST_CASE("theorem registry") {
  CHECK(theorem_ids().size() == 25);
  CHECK_THROWS_AS(run_verification("nope", Grid::parse("")), InvalidArgument);
  CHECK_THROWS_AS(run_verification("P", Grid::parse("bogus")), InvalidArgument);
  CHECK_THROWS_AS(run_verification("P", Grid::parse("q=1")), InvalidArgument);
  const auto r = run_verification("to", Grid::parse("n=3..4,alpha=1"));
  CHECK(r.ok());
  CHECK(r.count(InstanceStatus::match) == 2);
  CHECK(r.to_json()["instances"].empty());
  CHECK(r.to_json(true)["instances"].size() == 2);
}

TEST_CASE("every theorem passes its default grid") {
  for (const auto& id : theorem_ids()) {
    CAPTURE(id);
    const auto r = run_verification(id, Grid::parse(""));
    CHECK(r.count(InstanceStatus::match) > 0);
    CHECK(r.count(InstanceStatus::mismatch) == 0);
  }
}
