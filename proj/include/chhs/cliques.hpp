#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "chhs/vertex_set.hpp"

namespace chhs {

using Adjacency = std::vector<VertexSet>;

/// Bron-Kerbosch with Tomita pivoting, restricted to the induced subgraph on
/// `within`. The callback returns false to stop early. An empty `within`
/// yields the single empty clique.
void for_each_maximal_clique(const Adjacency& adj, const VertexSet& within,
                             const std::function<bool(const VertexSet&)>& visit);

/// All maximal cliques of adj[within], sorted lexicographically.
/// Throws CapExceeded when more than `cap` cliques exist.
std::vector<VertexSet> maximal_cliques(const Adjacency& adj, const VertexSet& within, std::size_t cap);

/// Every clique of adj[within] (including the empty one), each once.
/// The callback receives the clique and its common neighbourhood inside `within`.
void for_each_clique(const Adjacency& adj, const VertexSet& within,
                     const std::function<void(const VertexSet& clique, const VertexSet& common)>& visit);

/// Cliques of adj[within] ordered by size, then lexicographically.
std::vector<VertexSet> cliques_by_size(const Adjacency& adj, const VertexSet& within, std::size_t cap);

bool is_clique(const Adjacency& adj, const VertexSet& s);

}  // namespace chhs
