#include "chhs/instance.hpp"

#include <algorithm>

#include "chhs/errors.hpp"

namespace chhs {

Instance::Instance(FlagComplex x, XGraph w)
    : x_(std::move(x)), w_(std::move(w)), aug_(build_augmented(x_, w_)), index_(x_) {}

MetricGraph Instance::y_space(std::size_t cls) const { return MetricGraph::induced(aug_.adj, y_vertices(cls)); }

MetricGraph Instance::c_space(std::size_t cls) const { return MetricGraph::induced(aug_.adj, index_.link(cls)); }

std::vector<std::pair<Vertex, Vertex>> Instance::c0_edges(const VertexSet& simplex) const {
  const VertexSet lk = x_.link(simplex);
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u : lk.to_vector()) {
    (x_.neighbors(u) & lk).for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  const auto& sets = x_.maximal_sets();
  for (const auto& [a, b] : w_.edges()) {
    if (!simplex.is_subset_of(sets[a]) || !simplex.is_subset_of(sets[b])) continue;
    const VertexSet left = sets[a] - simplex;
    const VertexSet right = sets[b] - simplex;
    left.for_each([&](Vertex u) {
      right.for_each([&](Vertex v) {
        if (u != v) out.emplace_back(std::min(u, v), std::max(u, v));
      });
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MetricGraph Instance::c_space(const VertexSet& simplex, LinkVariant variant) const {
  const std::size_t cls = class_of(simplex);
  if (variant == LinkVariant::C) return c_space(cls);
  return MetricGraph::from_edges(x_.vertex_count(), index_.link(cls), c0_edges(simplex));
}

InducedLinkGraph Instance::induced_link_graph(const VertexSet& simplex) const {
  const VertexSet lk = x_.link(simplex);
  if (lk.empty()) {
    if (simplex.empty()) throw Error(ErrorKind::EmptyLink, "empty complex");
    throw Error(ErrorKind::MaximalSimplex, "{" + x_.key(simplex) + "} is maximal");
  }
  InducedLinkGraph out;
  out.vertices = maximal_cliques(x_.adjacency(), lk, kDefaultMaximalCap);
  std::vector<std::size_t> ambient(out.vertices.size());
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    const auto idx = x_.maximal_index(out.vertices[i] | simplex);
    if (!idx) throw std::logic_error("join with a maximal simplex of the link is not maximal");
    ambient[i] = *idx;
  }
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < out.vertices.size(); ++j) {
      if (w_.adjacent(ambient[i], ambient[j])) out.edges.emplace_back(i, j);
    }
  }
  // Augmented link graph: edges of the link plus a biclique per edge above.
  std::vector<std::pair<Vertex, Vertex>> augmented;
  for (Vertex u : lk.to_vector()) {
    (x_.neighbors(u) & lk).for_each([&](Vertex v) {
      if (u < v) augmented.emplace_back(u, v);
    });
  }
  for (const auto& [i, j] : out.edges) {
    out.vertices[i].for_each([&](Vertex u) {
      out.vertices[j].for_each([&](Vertex v) {
        if (u != v) augmented.emplace_back(std::min(u, v), std::max(u, v));
      });
    });
  }
  std::sort(augmented.begin(), augmented.end());
  augmented.erase(std::unique(augmented.begin(), augmented.end()), augmented.end());
  out.iota_check = augmented == c0_edges(simplex);
  return out;
}

MetricGraph Instance::coned_intermediate(const VertexSet& simplex, int k) const {
  const std::size_t cls = class_of(simplex);
  const int level = index_.colevel(cls);
  if (k < 0 || k > level) {
    throw Error(ErrorKind::BadLevel, "level " + std::to_string(k) + " outside [0," + std::to_string(level) + "]");
  }
  const VertexSet y = y_vertices(cls);
  Adjacency adj = aug_.adj;
  for (std::size_t s = 0; s < index_.size(); ++s) {
    if (!index_.nested(cls, s) || index_.colevel(s) <= k) continue;
    const VertexSet cone = index_.link(s) & y;
    cone.for_each([&](Vertex u) {
      adj[u] |= cone;
      adj[u].erase(u);
    });
  }
  return MetricGraph::induced(adj, y);
}

}  // namespace chhs
