#include "chhs/errors.hpp"
#include "chhs/generators.hpp"
#include "chhs/instance_io.hpp"
#include "corpus.hpp"
#include "doctest.h"

using namespace chhs;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ParseError;
}

const char* kSquare = R"({"vertices": ["a", "b", "c", "d"],
  "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]],
  "w_edges": [["a|b", "b|c"]]})";

}  // namespace

TEST_CASE("parsing the square document") {
  const ParsedInstance p = parse_instance(kSquare);
  CHECK(p.x.vertex_count() == 4);
  CHECK(p.x.maximal_simplices().size() == 4);
  REQUIRE(p.w.edges().size() == 1);
  const auto [a, b] = p.w.edges()[0];
  CHECK(p.x.key(p.x.maximal_sets()[a]) == "a|b");
  CHECK(p.x.key(p.x.maximal_sets()[b]) == "b|c");
  CHECK_FALSE(p.action);
  CHECK_FALSE(p.link_edges);
}

TEST_CASE("document errors") {
  CHECK(kind_of([] {
          parse_instance(R"({"vertices": ["a", "b", "c", "d"],
            "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]], "w_edges": [["a|b|c", "c|d"]]})");
        }) == ErrorKind::NotMaximalSimplex);
  CHECK(kind_of([] { parse_instance(R"({"vertices": ["a", "a"]})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_instance(R"({"vertices": ["a"], "edges": [["a", "q"]]})"); }) == ErrorKind::UnknownVertex);
  CHECK(kind_of([] { parse_instance("{not json"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_instance(R"({"edges": []})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_instance(R"({"vertices": ["a|b"]})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_instance(R"({"vertices": ["a", "b"], "edges": [["a"]]})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] {
          parse_instance(R"({"vertices": ["a", "b"], "edges": [["a", "b"]], "action": [{"a": "a", "b": "a"}]})");
        }) == ErrorKind::NotAPermutation);
}

TEST_CASE("missing W edges give an empty X-graph") {
  const ParsedInstance p = parse_instance(R"({"vertices": ["a", "b"], "edges": [["a", "b"]]})");
  CHECK(p.w.edges().empty());
  CHECK(p.w.vertex_count() == 1);
}

TEST_CASE("actions, link edges and tuples") {
  const ParsedInstance p = parse_instance(R"({"vertices": ["a", "b", "c", "d"],
    "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]],
    "action": [{"a": "b", "b": "c", "c": "d", "d": "a"}, {}],
    "link_edges": {"a": [["b", "d"]]},
    "tuple": {"": ["a"], "b": ["a", "c"]}})");
  REQUIRE(p.action);
  REQUIRE(p.action->size() == 2);
  CHECK((*p.action)[0] == Permutation{1, 2, 3, 0});
  CHECK((*p.action)[1] == Permutation{0, 1, 2, 3});
  REQUIRE(p.link_edges);
  REQUIRE(p.link_edges->size() == 1);
  CHECK((*p.link_edges)[0].simplex.to_vector() == std::vector<Vertex>{0});
  REQUIRE(p.tuple);
  CHECK(p.tuple->size() == 2);

  const Instance inst(p.x, p.w);
  const LinkEdgeMap m = resolve_link_edges(inst, *p.link_edges);
  REQUIRE(m.size() == 1);
  CHECK(m.begin()->first == inst.class_of(VertexSet::of(4, {0})));

  const ParsedInstance bad = parse_instance(R"({"vertices": ["a", "b"], "edges": [["a", "b"]],
    "link_edges": {"a|b": [["a", "b"]]}})");
  const Instance bi(bad.x, bad.w);
  CHECK(kind_of([&] { resolve_link_edges(bi, *bad.link_edges); }) == ErrorKind::MaximalSimplex);
}

TEST_CASE("emit then parse is the identity on canonical documents") {
  for (const auto& e : corpus::build()) {
    CAPTURE(e.name);
    for (WRule rule : {WRule::None, WRule::SharedCodim1Face}) {
      const std::string text = emit_instance(e.x, apply_w_rule(e.x, rule));
      const ParsedInstance p = parse_instance(text);
      CHECK(emit_instance(p.x, p.w) == text);
    }
  }
  const ParsedInstance p = parse_instance(R"({"vertices": ["a", "b", "c", "d"],
    "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]],
    "action": [{"a": "b", "b": "c", "c": "d", "d": "a"}],
    "link_edges": {"a": [["b", "d"]]}})");
  const std::string text = emit_instance(p.x, p.w, p.action, p.link_edges);
  const ParsedInstance q = parse_instance(text);
  CHECK(emit_instance(q.x, q.w, q.action, q.link_edges) == text);
}
