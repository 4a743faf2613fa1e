#pragma once

#include <cstddef>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "chhs/cliques.hpp"
#include "chhs/flag_complex.hpp"

namespace chhs {

/// Graph on the maximal simplices of a flag complex.
class XGraph {
 public:
  XGraph() = default;
  /// Edges are index pairs into x.maximal_simplices(); duplicates collapse,
  /// loops throw LoopEdge, out-of-range indices throw MismatchedBase.
  XGraph(const FlagComplex& x, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  static XGraph empty(const FlagComplex& x) { return XGraph(x, {}); }
  static XGraph complete(const FlagComplex& x);

  std::size_t vertex_count() const noexcept { return count_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a].contains(static_cast<Vertex>(b)); }
  const VertexSet& neighbors(std::size_t a) const { return adj_[a]; }
  const Adjacency& adjacency() const noexcept { return adj_; }
  std::uint64_t base_signature() const noexcept { return signature_; }

 private:
  std::size_t count_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  Adjacency adj_;
  std::uint64_t signature_ = 0;
};

std::uint64_t maximal_signature(const FlagComplex& x);

enum class EdgeOrigin : std::uint8_t { Complex = 1, W = 2, Both = 3 };

/// X^{+W}: the 1-skeleton plus a biclique for every W-edge, each edge tagged.
struct AugmentedGraph {
  Adjacency adj;
  std::vector<std::tuple<Vertex, Vertex, EdgeOrigin>> edges;
};

/// Throws MismatchedBase when w was built over a different complex.
AugmentedGraph build_augmented(const FlagComplex& x, const XGraph& w);

}  // namespace chhs
