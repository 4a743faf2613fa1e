#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "chhs/cliques.hpp"
#include "chhs/kernels.hpp"
#include "chhs/rational.hpp"
#include "chhs/vertex_set.hpp"

namespace chhs {

/// Finite unweighted graph on a subset of an ambient vertex universe, with
/// its all-pairs distance matrix. Public accessors speak ambient vertex ids.
class MetricGraph {
 public:
  MetricGraph() = default;

  /// Induced subgraph of `adj` on `vertices`.
  static MetricGraph induced(const Adjacency& adj, const VertexSet& vertices);
  /// Graph whose adjacency is given over the ambient universe but whose
  /// vertex set is `vertices`; edges leaving the set are ignored.
  static MetricGraph from_edges(std::size_t universe, const VertexSet& vertices,
                                const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t universe() const noexcept { return universe_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const VertexSet& vertex_set() const noexcept { return members_; }
  bool contains(Vertex v) const { return v < universe_ && members_.contains(v); }
  std::size_t local(Vertex v) const { return static_cast<std::size_t>(local_[v]); }

  Dist dist(Vertex a, Vertex b) const { return dist_[local(a) * size() + local(b)]; }
  const Dist* local_row(std::size_t i) const { return dist_.data() + i * size(); }
  const std::vector<Dist>& matrix() const noexcept { return dist_; }
  const Adjacency& local_adjacency() const noexcept { return adj_; }
  bool has_edge(Vertex a, Vertex b) const { return adj_[local(a)].contains(static_cast<Vertex>(local(b))); }
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool connected() const;
  /// First pair (in vertex order) at infinite distance.
  std::optional<std::pair<Vertex, Vertex>> separated_pair() const;
  /// kInfDist when disconnected; 0 for at most one vertex.
  Dist diameter() const;

  /// Max distance between members of s (kInfDist if some pair is separated).
  Dist set_diameter(const VertexSet& s) const;
  /// Min distance between a and b (kInfDist if either is empty or separated).
  Dist set_distance(const VertexSet& a, const VertexSet& b) const;
  /// Min distance from v to s.
  Dist distance_to(Vertex v, const VertexSet& s) const;

  friend bool operator==(const MetricGraph& a, const MetricGraph& b) {
    return a.vertices_ == b.vertices_ && a.adj_ == b.adj_;
  }

 private:
  void compute();

  std::size_t universe_ = 0;
  std::vector<Vertex> vertices_;
  VertexSet members_;
  std::vector<int> local_;
  Adjacency adj_;
  std::vector<Dist> dist_;
};

/// Breadth-first all-pairs metric of a whole graph.
MetricGraph shortest_path_metric(const Adjacency& adj);

inline constexpr std::size_t kDefaultDeltaCap = 400;

/// Exact four-point constant (a half-integer); throws Disconnected, or
/// CapExceeded above `cap` vertices.
Rational gromov_delta(const MetricGraph& g, std::size_t cap = kDefaultDeltaCap);

struct QiReport {
  Rational lambda = Rational(1);
  std::optional<std::pair<Vertex, Vertex>> witness;
};

/// Smallest lambda >= 1 with d_A <= lambda * d_B + lambda on all pairs of A.
QiReport qi_constants(const MetricGraph& ambient, const MetricGraph& sub);

/// Slack-1 nearest-point set of x in target; throws EmptyTarget / Unreachable.
VertexSet coarse_projection(const MetricGraph& g, const VertexSet& target, Vertex x);

/// Union of coarse projections of the reachable points of xs.
VertexSet coarse_projection_of_set(const MetricGraph& g, const VertexSet& target, const VertexSet& xs);

}  // namespace chhs
