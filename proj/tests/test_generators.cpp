#include <set>

#include "chhs/errors.hpp"
#include "chhs/generators.hpp"
#include "chhs/instance_io.hpp"
#include "chhs/relations.hpp"
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

}  // namespace

TEST_CASE("finite groups") {
  const auto s3 = symmetric_group(3);
  CHECK(s3.size() == 6);
  const int e = s3.identity();
  for (int a = 0; a < 6; ++a) {
    CHECK(s3.mul(a, s3.inverse(a)) == e);
    for (int b = 0; b < 6; ++b) {
      for (int c = 0; c < 6; ++c) CHECK(s3.mul(s3.mul(a, b), c) == s3.mul(a, s3.mul(b, c)));
    }
  }
  const int swap = permutation_index({1, 0, 2});
  const int cyc = permutation_index({1, 2, 0});
  CHECK(generated_subgroup(s3, {swap}).size() == 2);
  CHECK(generated_subgroup(s3, {cyc}).size() == 3);
  CHECK(generated_subgroup(s3, {swap, cyc}).size() == 6);
  const auto z5 = cyclic_group(5);
  CHECK(z5.mul(3, 4) == 2);
  CHECK(z5.inverse(2) == 3);
}

TEST_CASE("amalgam ball of radius 2") {
  const Amalgam a = gen_amalgam(s3_amalgam_spec(2));
  CHECK(a.order_a == 6);
  CHECK(a.index_c_in_a == 3);
  const FlagComplex& x = a.x;
  const std::set<std::string> interior(a.interior.begin(), a.interior.end());
  REQUIRE(interior.count("g:e:c0"));
  // the identity's link is the edge between its two cosets
  const VertexSet lk = x.link(x.set_of({x.index_of("g:e:c0")}));
  CHECK(x.label_list(lk) == std::vector<std::string>{"A:e", "B:e"});
  CHECK(x.adjacent(x.index_of("A:e"), x.index_of("B:e")));
  CHECK(x.link(x.set_of({x.index_of("A:e")})).count() == 9);
  // the identity's saturation is its C-coset
  const VertexSet sat = x.saturation(x.set_of({x.index_of("g:e:c0")}));
  CHECK(sat.count() == 2);
  CHECK(x.dimension() == 2);
  CHECK(a.w.vertex_count() == x.maximal_simplices().size());
  CHECK(!a.w.edges().empty());
}

TEST_CASE("amalgam validation") {
  AmalgamSpec bad = s3_amalgam_spec(2);
  bad.c_in_a = {permutation_index({0, 1, 2}), permutation_index({1, 2, 0})};
  CHECK(kind_of([&] { gen_amalgam(bad); }) == ErrorKind::InvalidEmbedding);
  bad = s3_amalgam_spec(2);
  bad.c_in_b = {0};
  CHECK(kind_of([&] { gen_amalgam(bad); }) == ErrorKind::InvalidEmbedding);
  CHECK(kind_of([&] { gen_amalgam(s3_amalgam_spec(0)); }) == ErrorKind::BadParameters);
}

TEST_CASE("blow-ups") {
  BlowupSpec edge;
  edge.base_vertices = {"alpha", "gamma"};
  edge.base_edges = {{"alpha", "gamma"}};
  edge.blobs["alpha"] = {"a1", "a2"};
  edge.blobs["gamma"] = {"g1", "g2"};
  const Blowup b = gen_blowup(edge);
  CHECK(b.x.vertex_count() == 6);
  CHECK(b.x.edges().size() == 4 + 9);
  CHECK(b.collapse_is_morphism);
  CHECK(b.collapse.at("a2") == "alpha");
  CHECK(b.collapse.at("gamma") == "gamma");

  BlowupSpec star;
  star.base_vertices = {"o"};
  star.blobs["o"] = {"s1", "s2", "s3"};
  const Blowup s = gen_blowup(star);
  CHECK(s.x.vertex_count() == 4);
  CHECK(s.x.edges().size() == 3);
  CHECK(s.x.maximal_simplices().size() == 3);

  BlowupSpec overlap = edge;
  overlap.blobs["gamma"] = {"a1"};
  CHECK(kind_of([&] { gen_blowup(overlap); }) == ErrorKind::OverlappingBlobs);
}

TEST_CASE("library complexes") {
  const auto oct2 = gen_octahedron(2);
  CHECK(oct2.maximal_simplices().size() == 4);
  CHECK(oct2.edges().size() == 4);
  const auto j = join(gen_discrete(2, "u"), gen_discrete(2, "v"));
  CHECK(j.maximal_simplices().size() == 4);
  CHECK(complexity(j).n == complexity(oct2).n);
  CHECK(gen_cycle(6).edges().size() == 6);
  CHECK(gen_path(6).edges().size() == 5);
  CHECK(kind_of([] { gen_cycle(2); }) == ErrorKind::BadParameters);
  CHECK(kind_of([] { gen_random_flag(5, 1.5, 1); }) == ErrorKind::BadParameters);
  CHECK(kind_of([] { join(gen_path(2), gen_path(3)); }) == ErrorKind::BadParameters);

  const auto r1 = gen_random_flag(8, 0.5, 7);
  const auto r2 = gen_random_flag(8, 0.5, 7);
  CHECK(r1.edges() == r2.edges());
  CHECK(emit_instance(r1, XGraph::empty(r1)) == emit_instance(r2, XGraph::empty(r2)));
}

TEST_CASE("W rules") {
  const auto q = gen_octahedron(2);
  CHECK(apply_w_rule(q, WRule::None).edges().empty());
  CHECK(apply_w_rule(q, WRule::Complete).edges().size() == 6);
  // edges of a 4-cycle share a vertex exactly when consecutive
  CHECK(apply_w_rule(q, WRule::SharedCodim1Face).edges().size() == 4);
  const auto tri_pair = FlagComplex::build({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  CHECK(apply_w_rule(tri_pair, WRule::SharedCodim1Face).edges().size() == 1);
  CHECK(parse_w_rule("shared_codim1_face") == WRule::SharedCodim1Face);
  CHECK(to_string(WRule::Complete) == "complete");
  CHECK(kind_of([] { parse_w_rule("nope"); }) == ErrorKind::BadParameters);
}
