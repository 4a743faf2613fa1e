#include "chhs/xgraph.hpp"

#include <algorithm>

#include "chhs/errors.hpp"

namespace chhs {

std::uint64_t maximal_signature(const FlagComplex& x) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ULL;
  };
  for (const auto& l : x.labels()) {
    for (char c : l) mix(static_cast<unsigned char>(c));
    mix(0xff);
  }
  for (const auto& s : x.maximal_simplices()) {
    for (Vertex v : s) mix(v);
    mix(0xfffe);
  }
  return h;
}

XGraph::XGraph(const FlagComplex& x, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : count_(x.maximal_simplices().size()), adj_(count_, VertexSet(count_)), signature_(maximal_signature(x)) {
  for (auto [a, b] : edges) {
    if (a >= count_ || b >= count_) throw Error(ErrorKind::MismatchedBase, "W-edge refers to a missing maximal simplex");
    if (a == b) throw Error(ErrorKind::LoopEdge, "W-edge at maximal simplex {" + x.key(x.maximal_simplices()[a]) + "}");
    if (a > b) std::swap(a, b);
    if (adj_[a].contains(static_cast<Vertex>(b))) continue;
    adj_[a].insert(static_cast<Vertex>(b));
    adj_[b].insert(static_cast<Vertex>(a));
    edges_.emplace_back(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
}

XGraph XGraph::complete(const FlagComplex& x) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t n = x.maximal_simplices().size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return XGraph(x, edges);
}

AugmentedGraph build_augmented(const FlagComplex& x, const XGraph& w) {
  if (w.vertex_count() != x.maximal_simplices().size() || w.base_signature() != maximal_signature(x)) {
    throw Error(ErrorKind::MismatchedBase, "X-graph was built over a different complex");
  }
  const std::size_t n = x.vertex_count();
  AugmentedGraph g;
  g.adj = x.adjacency();
  Adjacency w_part(n, VertexSet(n));
  for (const auto& [a, b] : w.edges()) {
    const VertexSet& sa = x.maximal_sets()[a];
    const VertexSet& sb = x.maximal_sets()[b];
    sa.for_each([&](Vertex u) { w_part[u] |= sb; });
    sb.for_each([&](Vertex u) { w_part[u] |= sa; });
  }
  for (Vertex u = 0; u < n; ++u) {
    w_part[u].erase(u);
    g.adj[u] |= w_part[u];
  }
  for (Vertex u = 0; u < n; ++u) {
    g.adj[u].for_each([&](Vertex v) {
      if (u >= v) return;
      const bool in_x = x.adjacent(u, v);
      const bool in_w = w_part[u].contains(v);
      const EdgeOrigin origin = in_x && in_w ? EdgeOrigin::Both : (in_x ? EdgeOrigin::Complex : EdgeOrigin::W);
      g.edges.emplace_back(u, v, origin);
    });
  }
  return g;
}

}  // namespace chhs
