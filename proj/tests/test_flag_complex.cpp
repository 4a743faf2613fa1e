#include "chhs/errors.hpp"
#include "chhs/flag_complex.hpp"
#include "chhs/generators.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chhs;

namespace {

FlagComplex triangle() { return FlagComplex::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }
FlagComplex square() { return FlagComplex::build({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}); }

std::vector<std::string> keys(const FlagComplex& x) {
  std::vector<std::string> out;
  for (const auto& m : x.maximal_sets()) out.push_back(x.key(m));
  return out;
}

VertexSet set(const FlagComplex& x, std::vector<std::string> labels) {
  VertexSet out = x.none();
  for (const auto& l : labels) out.insert(x.index_of(l));
  return out;
}

}  // namespace

TEST_CASE("maximal simplices of small complexes") {
  CHECK(keys(triangle()) == std::vector<std::string>{"a|b|c"});
  CHECK(keys(square()) == std::vector<std::string>{"a|b", "a|d", "b|c", "c|d"});
  const auto discrete = FlagComplex::build({"a", "b", "c"}, {});
  CHECK(keys(discrete) == std::vector<std::string>{"a", "b", "c"});
  CHECK(triangle().dimension() == 2);
  CHECK(discrete.dimension() == 0);
}

TEST_CASE("construction errors") {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  CHECK(kind([] { FlagComplex::build({"a"}, {{"a", "z"}}); }) == ErrorKind::UnknownVertex);
  CHECK(kind([] { FlagComplex::build({"a"}, {{"a", "a"}}); }) == ErrorKind::LoopEdge);
  CHECK(kind([] { FlagComplex::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorKind::DuplicateEdge);
  CHECK(kind([] { square().simplex_from_labels({"a", "c"}); }) == ErrorKind::NotASimplex);
}

TEST_CASE("links and saturations") {
  const auto t = triangle();
  CHECK(t.link(t.none()) == t.all());
  CHECK(t.link(set(t, {"a"})) == set(t, {"b", "c"}));
  CHECK(t.saturation(set(t, {"a"})) == set(t, {"a"}));
  const auto q = square();
  CHECK(q.saturation(set(q, {"b"})) == set(q, {"b", "d"}));
  CHECK(q.link(set(q, {"b"})) == set(q, {"a", "c"}));
  CHECK(q.star(set(q, {"b"})) == set(q, {"a", "b", "c"}));
  CHECK(q.saturation(q.none()).empty());
}

TEST_CASE("classes, complexity and co-level chains") {
  const auto single = FlagComplex::build({"a"}, {});
  CHECK(simplex_classes(single).size() == 1);
  CHECK(simplex_classes(square()).size() == 3);
  CHECK(complexity(FlagComplex::build({"a", "b", "c"}, {})).n == 2);
  CHECK(complexity(triangle()).n == 4);
  CHECK(complexity(triangle()).dim == 2);

  const auto oct = gen_octahedron(3);
  const Census c = take_census(oct);
  CHECK(c.classes.size() == 7);
  CHECK(c.complexity == 4);
  CHECK(c.simplex_count == 1 + 6 + 12 + 8);

  CHECK(longest_chain({}) == 0);
  CHECK(longest_chain({VertexSet::of(3, {0}), VertexSet::of(3, {0, 1}), VertexSet::of(3, {2})}) == 2);
}

TEST_CASE("census agrees with brute-force link enumeration on the corpus") {
  for (const auto& e : corpus::build()) {
    if (e.x.vertex_count() > 14) continue;
    CAPTURE(e.name);
    const auto g = oracle::graph_of(e.x);
    const auto expected = oracle::classes(g);
    const Census c = take_census(e.x);
    REQUIRE(c.classes.size() == expected.size());
    CHECK(c.simplex_count == oracle::all_simplices(g).size());
    for (const auto& cls : c.classes) {
      const auto it = expected.find(oracle::to_set(cls.link));
      REQUIRE(it != expected.end());
      CHECK(oracle::to_set(cls.saturation) == it->second.saturation);
      CHECK(cls.members == it->second.members.size());
    }
  }
}
