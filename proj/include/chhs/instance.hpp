#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "chhs/flag_complex.hpp"
#include "chhs/metric_graph.hpp"
#include "chhs/relations.hpp"
#include "chhs/xgraph.hpp"

namespace chhs {

enum class LinkVariant { C, C0 };

struct InducedLinkGraph {
  /// Maximal simplices of the link, in lexicographic order.
  std::vector<VertexSet> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Whether the augmented link graph coincides with C0 of the simplex.
  bool iota_check = false;
};

/// A complex, an X-graph over it, the augmented graph and the index set,
/// with the derived spaces attached to simplices and classes.
class Instance {
 public:
  Instance(FlagComplex x, XGraph w);

  const FlagComplex& complex() const noexcept { return x_; }
  const XGraph& w() const noexcept { return w_; }
  const AugmentedGraph& augmented() const noexcept { return aug_; }
  const Adjacency& augmented_adjacency() const noexcept { return aug_.adj; }
  const IndexSet& index() const noexcept { return index_; }

  /// Class of a non-maximal simplex; throws MaximalSimplex.
  std::size_t class_of(const VertexSet& simplex) const { return index_.class_of(x_, simplex); }

  VertexSet y_vertices(std::size_t cls) const { return x_.all() - index_.saturation(cls); }
  MetricGraph augmented_metric() const { return MetricGraph::induced(aug_.adj, x_.all()); }
  MetricGraph y_space(std::size_t cls) const;
  MetricGraph y_space(const VertexSet& simplex) const { return y_space(class_of(simplex)); }
  /// C of a class: Y induced on the link.
  MetricGraph c_space(std::size_t cls) const;
  /// C or C0 of a concrete simplex (C0 depends on the simplex, not only its class).
  MetricGraph c_space(const VertexSet& simplex, LinkVariant variant) const;
  std::vector<std::pair<Vertex, Vertex>> c0_edges(const VertexSet& simplex) const;

  InducedLinkGraph induced_link_graph(const VertexSet& simplex) const;

  /// Y_simplex with the links of classes above it of co-level > k coned off.
  /// Throws BadLevel unless 0 <= k <= co-level of the simplex.
  MetricGraph coned_intermediate(const VertexSet& simplex, int k) const;

 private:
  FlagComplex x_;
  XGraph w_;
  AugmentedGraph aug_;
  IndexSet index_;
};

}  // namespace chhs
