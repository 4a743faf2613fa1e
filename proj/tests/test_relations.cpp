#include "chhs/errors.hpp"
#include "chhs/generators.hpp"
#include "chhs/relations.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chhs;

namespace {

VertexSet set(const FlagComplex& x, std::vector<std::string> labels) {
  VertexSet out = x.none();
  for (const auto& l : labels) out.insert(x.index_of(l));
  return out;
}

}  // namespace

TEST_CASE("orthogonal and transverse examples") {
  const auto q = gen_octahedron(2);
  const IndexSet qi(q);
  CHECK(qi.size() == 3);
  const auto x1 = qi.class_of(q, set(q, {"x1"}));
  const auto x2 = qi.class_of(q, set(q, {"x2"}));
  CHECK(qi.class_of(q, set(q, {"y1"})) == x1);
  CHECK(qi.relation(x1, x2) == Relation::Orthogonal);
  CHECK(qi.relation(x2, x1) == Relation::Orthogonal);
  CHECK(qi.relation(x1, 0) == Relation::NestedIn);
  CHECK(qi.relation(0, x1) == Relation::Contains);
  CHECK(qi.relation(x1, x1) == Relation::Equal);

  const auto p = gen_path(4);
  const IndexSet pi(p);
  const auto b = pi.class_of(p, set(p, {"p01"}));
  const auto c = pi.class_of(p, set(p, {"p02"}));
  CHECK(pi.relation(b, c) == Relation::Transverse);
  CHECK_THROWS_AS(pi.class_of(p, set(p, {"p00", "p01"})), Error);
}

TEST_CASE("co-levels") {
  const auto tri = FlagComplex::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  const IndexSet idx(tri);
  CHECK(idx.colevel(0) == 0);
  CHECK(idx.colevel(idx.class_of(tri, set(tri, {"a"}))) == 1);
  CHECK(idx.colevel(idx.class_of(tri, set(tri, {"a", "b"}))) == 2);
}

TEST_CASE("relation axioms on the corpus") {
  for (const auto& e : corpus::build()) {
    if (e.x.vertex_count() > 16) continue;
    CAPTURE(e.name);
    const IndexSet idx(e.x);
    CHECK(relation_axiom_violations(idx).empty());
    const RelationTable t = relation_table(idx);
    const auto g = oracle::graph_of(e.x);
    for (std::size_t a = 0; a < t.n; ++a) {
      CHECK(t.at(a, 0) == (a == 0 ? Relation::Equal : Relation::NestedIn));
      const auto la = oracle::to_set(idx.link(a));
      // literal triple-link identity
      CHECK(oracle::link(g, oracle::link(g, la)) == la);
      for (std::size_t b = 0; b < t.n; ++b) {
        if (t.at(a, b) == Relation::NestedIn) CHECK(idx.colevel(b) < idx.colevel(a));
        if (t.at(a, b) == Relation::Orthogonal) CHECK(t.at(b, a) == Relation::Orthogonal);
        for (std::size_t u = 0; u < t.n; ++u) {
          const bool nested = t.at(a, b) == Relation::NestedIn || t.at(a, b) == Relation::Equal;
          if (nested && t.at(b, u) == Relation::Orthogonal) CHECK(t.at(a, u) == Relation::Orthogonal);
        }
      }
    }
  }
}

TEST_CASE("joins produce orthogonal factor classes") {
  const auto x = join(gen_discrete(2, "u"), gen_discrete(3, "v"));
  const IndexSet idx(x);
  const auto u = idx.class_of(x, set(x, {"u1"}));
  const auto v = idx.class_of(x, set(x, {"v1"}));
  CHECK(idx.link(u).count() == 3);
  CHECK(idx.link(v).count() == 2);
  CHECK(idx.relation(u, v) == Relation::Orthogonal);
}

TEST_CASE("induced map on link classes") {
  const auto oct = gen_octahedron(3);
  const IndexSet idx(oct);
  const VertexSet delta = set(oct, {"x1"});
  const IotaReport r = iota_star(oct, idx, delta);
  CHECK(r.ok());
  CHECK(r.mapping.size() == 3);
  CHECK(r.mapping[0].second == idx.class_of(oct, delta));
  for (const auto& [from, to] : r.mapping) {
    if (from != 0) CHECK(idx.at(to).representative.size() == 2);
  }
  CHECK(r.link_complexity == 3);
  CHECK(r.ambient_complexity == 4);
  CHECK_THROWS_AS(iota_star(oct, idx, oct.none()), Error);
  CHECK_THROWS_AS(iota_star(oct, idx, set(oct, {"x1", "x2", "x3"})), Error);
}
