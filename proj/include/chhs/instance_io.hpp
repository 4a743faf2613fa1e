#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chhs/flag_complex.hpp"
#include "chhs/instance.hpp"
#include "chhs/thm_a.hpp"
#include "chhs/xgraph.hpp"

namespace chhs {

/// Link edges as written in a document: simplex key resolved to a vertex set.
struct LinkEdgeEntry {
  VertexSet simplex;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

struct ParsedInstance {
  FlagComplex x;
  XGraph w;
  std::optional<std::vector<Permutation>> action;
  std::optional<std::vector<LinkEdgeEntry>> link_edges;
  /// Optional coordinate tuple: simplex key resolved to its class set, and the coordinate set.
  std::optional<std::vector<std::pair<VertexSet, VertexSet>>> tuple;
};

ParsedInstance parse_instance(const std::string& text);

/// Merge document link edges by class; every key must name a non-maximal simplex.
LinkEdgeMap resolve_link_edges(const Instance& inst, const std::vector<LinkEdgeEntry>& entries);

std::string emit_instance(const FlagComplex& x, const XGraph& w,
                          const std::optional<std::vector<Permutation>>& action = std::nullopt,
                          const std::optional<std::vector<LinkEdgeEntry>>& link_edges = std::nullopt);

}  // namespace chhs
