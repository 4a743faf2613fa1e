#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chhs/cliques.hpp"
#include "chhs/vertex_set.hpp"

namespace chhs {

inline constexpr std::size_t kDefaultMaximalCap = 100000;
inline constexpr std::size_t kDefaultSimplexCap = 5000000;

/// Finite flag simplicial complex given by its 1-skeleton. Vertex indices
/// follow label order; maximal simplices are enumerated once at build time.
class FlagComplex {
 public:
  FlagComplex() = default;

  static FlagComplex build(std::vector<std::string> vertices,
                           const std::vector<std::pair<std::string, std::string>>& edges,
                           std::size_t maximal_cap = kDefaultMaximalCap);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_[v]; }
  Vertex index_of(std::string_view label) const;
  std::optional<Vertex> find(std::string_view label) const;

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  const Adjacency& adjacency() const noexcept { return adj_; }
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  VertexSet all() const { return VertexSet::full(vertex_count()); }
  VertexSet none() const { return VertexSet(vertex_count()); }

  const std::vector<Simplex>& maximal_simplices() const noexcept { return maximal_; }
  const std::vector<VertexSet>& maximal_sets() const noexcept { return maximal_sets_; }
  std::optional<std::size_t> maximal_index(const VertexSet& s) const;
  /// Indices of maximal simplices containing v.
  const std::vector<std::size_t>& maximal_containing(Vertex v) const { return containing_[v]; }
  int dimension() const noexcept { return dimension_; }

  bool is_simplex(const VertexSet& s) const { return is_clique(adj_, s); }
  bool is_maximal(const VertexSet& s) const { return is_simplex(s) && link_of_set(s).empty(); }

  VertexSet set_of(const Simplex& s) const;
  Simplex simplex_of(const VertexSet& s) const { return s.to_vector(); }
  /// Validated simplex from labels; throws UnknownVertex / NotASimplex.
  Simplex simplex_from_labels(const std::vector<std::string>& labels) const;
  /// "a|b|c" keys; the empty key is the empty simplex.
  std::string key(const VertexSet& s) const;
  std::string key(const Simplex& s) const;
  Simplex parse_key(std::string_view key) const;
  std::vector<std::string> label_list(const VertexSet& s) const;

  /// Vertices outside s adjacent to every vertex of s; all vertices for s = {}.
  VertexSet link_of_set(const VertexSet& s) const;
  /// Link of a simplex; throws NotASimplex.
  VertexSet link(const Simplex& s) const;
  VertexSet link(const VertexSet& s) const;
  /// Vertex set of Lk(s) * s.
  VertexSet star(const VertexSet& s) const;
  /// Union of all simplices with the same link; throws NotASimplex.
  VertexSet saturation(const VertexSet& s) const;

  /// Full subcomplex on a vertex subset, labels preserved.
  FlagComplex induced(const VertexSet& subset) const;

 private:
  void finish(std::size_t maximal_cap);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  Adjacency adj_;
  std::vector<Simplex> maximal_;
  std::vector<VertexSet> maximal_sets_;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> maximal_lookup_;
  std::vector<std::vector<std::size_t>> containing_;
  int dimension_ = -1;
};

/// Join of two complexes with disjoint label sets; throws BadParameters.
FlagComplex join(const FlagComplex& a, const FlagComplex& b);

/// One equivalence class of non-maximal simplices, keyed by its link.
struct SimplexClass {
  Simplex representative;
  VertexSet link;
  VertexSet saturation;
  std::size_t members = 0;
};

/// Result of one pass over every simplex of a complex.
struct Census {
  std::vector<SimplexClass> classes;
  std::vector<VertexSet> distinct_links;
  std::size_t simplex_count = 0;
  int dimension = -1;
  int complexity = 0;
};

Census take_census(const FlagComplex& x, std::size_t simplex_cap = kDefaultSimplexCap);

std::vector<SimplexClass> simplex_classes(const FlagComplex& x);

struct Complexity {
  int n = 0;
  int dim = -1;
};
Complexity complexity(const FlagComplex& x);

/// Length of the longest strict inclusion chain among the given sets.
int longest_chain(std::vector<VertexSet> sets);

}  // namespace chhs
