#include "chhs/metric_graph.hpp"

#include <algorithm>

#include "chhs/errors.hpp"

namespace chhs {

MetricGraph MetricGraph::induced(const Adjacency& adj, const VertexSet& vertices) {
  MetricGraph g;
  g.universe_ = vertices.universe();
  g.members_ = vertices;
  g.vertices_ = vertices.to_vector();
  g.local_.assign(g.universe_, -1);
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) g.local_[g.vertices_[i]] = static_cast<int>(i);
  g.adj_.assign(g.vertices_.size(), VertexSet(g.vertices_.size()));
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    (adj[g.vertices_[i]] & vertices).for_each([&](Vertex w) {
      g.adj_[i].insert(static_cast<Vertex>(g.local_[w]));
    });
  }
  g.compute();
  return g;
}

MetricGraph MetricGraph::from_edges(std::size_t universe, const VertexSet& vertices,
                                    const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Adjacency adj(universe, VertexSet(universe));
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    adj[a].insert(b);
    adj[b].insert(a);
  }
  return induced(adj, vertices);
}

void MetricGraph::compute() { dist_ = kernels::apsp_parallel(adj_); }

std::vector<std::pair<Vertex, Vertex>> MetricGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    adj_[i].for_each([&](Vertex j) {
      if (i < j) out.emplace_back(vertices_[i], vertices_[j]);
    });
  }
  return out;
}

bool MetricGraph::connected() const { return !separated_pair().has_value(); }

std::optional<std::pair<Vertex, Vertex>> MetricGraph::separated_pair() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dist_[i * n + j] == kInfDist) return std::make_pair(vertices_[i], vertices_[j]);
    }
  }
  return std::nullopt;
}

Dist MetricGraph::diameter() const {
  Dist best = 0;
  for (Dist d : dist_) best = std::max(best, d);
  return best;
}

Dist MetricGraph::set_diameter(const VertexSet& s) const {
  const auto members = s.to_vector();
  Dist best = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) best = std::max(best, dist(members[i], members[j]));
  }
  return best;
}

Dist MetricGraph::set_distance(const VertexSet& a, const VertexSet& b) const {
  Dist best = kInfDist;
  a.for_each([&](Vertex u) {
    const Dist* row = local_row(local(u));
    b.for_each([&](Vertex v) { best = std::min(best, row[local(v)]); });
  });
  return best;
}

Dist MetricGraph::distance_to(Vertex v, const VertexSet& s) const {
  const Dist* row = local_row(local(v));
  Dist best = kInfDist;
  s.for_each([&](Vertex u) { best = std::min(best, row[local(u)]); });
  return best;
}

MetricGraph shortest_path_metric(const Adjacency& adj) {
  return MetricGraph::induced(adj, VertexSet::full(adj.size()));
}

Rational gromov_delta(const MetricGraph& g, std::size_t cap) {
  if (g.size() > cap) {
    throw Error(ErrorKind::CapExceeded, "four-point scan on " + std::to_string(g.size()) + " vertices exceeds cap " + std::to_string(cap));
  }
  if (auto pair = g.separated_pair()) {
    throw Error(ErrorKind::Disconnected, "vertices " + std::to_string(pair->first) + " and " +
                                             std::to_string(pair->second) + " lie in different components");
  }
  return Rational::half(kernels::four_point_twice_delta_parallel(g.matrix().data(), g.size()));
}

QiReport qi_constants(const MetricGraph& ambient, const MetricGraph& sub) {
  for (Vertex v : sub.vertices()) {
    if (!ambient.contains(v)) throw Error(ErrorKind::VertexNotInAmbient, "vertex " + std::to_string(v) + " is not in the ambient graph");
  }
  QiReport report;
  const auto& vs = sub.vertices();
  // Compare ratios a/(b+1) exactly by cross multiplication.
  std::int64_t best_num = 1;
  std::int64_t best_den = 1;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Dist* row_sub = sub.local_row(i);
    const Dist* row_amb = ambient.local_row(ambient.local(vs[i]));
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const Dist a = row_sub[j];
      const Dist b = row_amb[ambient.local(vs[j])];
      if (a == kInfDist || b == kInfDist) {
        report.lambda = Rational::infinity();
        report.witness = std::make_pair(vs[i], vs[j]);
        return report;
      }
      const std::int64_t num = a;
      const std::int64_t den = static_cast<std::int64_t>(b) + 1;
      if (num * best_den > best_num * den) {
        best_num = num;
        best_den = den;
        report.witness = std::make_pair(vs[i], vs[j]);
      }
    }
  }
  report.lambda = Rational(best_num, best_den);
  return report;
}

VertexSet coarse_projection(const MetricGraph& g, const VertexSet& target, Vertex x) {
  if (target.empty()) throw Error(ErrorKind::EmptyTarget, "projection onto an empty set");
  if (!g.contains(x)) throw Error(ErrorKind::VertexNotInAmbient, "point " + std::to_string(x) + " is not in the graph");
  const Dist* row = g.local_row(g.local(x));
  Dist nearest = kInfDist;
  target.for_each([&](Vertex y) { nearest = std::min(nearest, row[g.local(y)]); });
  if (nearest == kInfDist) throw Error(ErrorKind::Unreachable, "point " + std::to_string(x) + " cannot reach the target");
  VertexSet out(g.universe());
  target.for_each([&](Vertex y) {
    if (row[g.local(y)] <= nearest + 1) out.insert(y);
  });
  return out;
}

VertexSet coarse_projection_of_set(const MetricGraph& g, const VertexSet& target, const VertexSet& xs) {
  VertexSet out(g.universe());
  if (target.empty()) return out;
  xs.for_each([&](Vertex x) {
    const Dist* row = g.local_row(g.local(x));
    Dist nearest = kInfDist;
    target.for_each([&](Vertex y) { nearest = std::min(nearest, row[g.local(y)]); });
    if (nearest == kInfDist) return;
    target.for_each([&](Vertex y) {
      if (row[g.local(y)] <= nearest + 1) out.insert(y);
    });
  });
  return out;
}

}  // namespace chhs
