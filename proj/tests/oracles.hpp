#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chhs/flag_complex.hpp"
#include "chhs/instance.hpp"

namespace oracle {

/// Plain adjacency-list graph rebuilt from an edge list, independent of the bitset code.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::set<std::pair<int, int>> edges;
  bool adjacent(int a, int b) const { return edges.count({std::min(a, b), std::max(a, b)}) > 0; }
};

Graph graph_of(const chhs::FlagComplex& x);
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

/// -1 marks unreachable pairs.
std::vector<std::vector<int>> bfs_all(const Graph& g);

/// Twice the four-point constant via Gromov products over all (w, x, y, z); -1 if disconnected.
std::int64_t naive_twice_delta(const std::vector<std::vector<int>>& d);

using Set = std::set<int>;
std::vector<Set> all_simplices(const Graph& g);
Set link(const Graph& g, const Set& s);

struct Class {
  Set link;
  Set saturation;
  std::vector<Set> members;
};
/// Classes of non-maximal simplices keyed by link.
std::map<Set, Class> classes(const Graph& g);

/// Condition 4 checked over every simplex, pair and W-adjacent pair of maximal simplices.
bool literal_condition4(const chhs::Instance& inst);

/// Condition 3 at a threshold, searching every simplex of every link.
bool literal_condition3(const chhs::Instance& inst, const std::vector<chhs::Dist>& diameters, const chhs::Rational& t);

Set to_set(const chhs::VertexSet& s);

}  // namespace oracle
