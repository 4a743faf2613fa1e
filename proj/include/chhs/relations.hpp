#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chhs/flag_complex.hpp"

namespace chhs {

enum class Relation : std::uint8_t { Equal, NestedIn, Contains, Orthogonal, Transverse };

std::string_view to_string(Relation r);

/// The index set: classes of non-maximal simplices with nesting,
/// orthogonality and co-level. Class 0 is always the class of the empty simplex.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(const FlagComplex& x, std::size_t simplex_cap = kDefaultSimplexCap);

  std::size_t size() const noexcept { return census_.classes.size(); }
  const SimplexClass& at(std::size_t c) const { return census_.classes[c]; }
  const std::vector<SimplexClass>& classes() const noexcept { return census_.classes; }
  const VertexSet& link(std::size_t c) const { return census_.classes[c].link; }
  const VertexSet& saturation(std::size_t c) const { return census_.classes[c].saturation; }
  const Simplex& representative(std::size_t c) const { return census_.classes[c].representative; }
  /// Lk(Lk(rep)).
  const VertexSet& double_link(std::size_t c) const { return double_link_[c]; }

  std::optional<std::size_t> class_of_link(const VertexSet& link) const;
  /// Class of a simplex; throws MaximalSimplex for maximal ones.
  std::size_t class_of(const FlagComplex& x, const VertexSet& simplex) const;

  /// Relation of a to b: NestedIn means a is nested in b.
  Relation relation(std::size_t a, std::size_t b) const;
  bool nested(std::size_t a, std::size_t b) const { return link(a).is_subset_of(link(b)); }
  bool strictly_nested(std::size_t a, std::size_t b) const { return a != b && nested(a, b); }
  bool orthogonal(std::size_t a, std::size_t b) const {
    return a != b && !nested(a, b) && !nested(b, a) && link(b).is_subset_of(double_link(a));
  }

  int colevel(std::size_t c) const { return colevel_[c]; }
  int complexity() const noexcept { return census_.complexity; }
  int dimension() const noexcept { return census_.dimension; }
  const Census& census() const noexcept { return census_; }

 private:
  Census census_;
  std::vector<VertexSet> double_link_;
  std::vector<int> colevel_;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> by_link_;
};

/// Dense table of pairwise relations. Construction checks the partial order,
/// the unique maximum, symmetry of orthogonality and exclusivity, and throws
/// std::logic_error on any violation.
struct RelationTable {
  std::size_t n = 0;
  std::vector<Relation> cells;
  Relation at(std::size_t a, std::size_t b) const { return cells[a * n + b]; }
};

RelationTable relation_table(const IndexSet& index);

/// Independent check of the relation axioms including the triple conditions;
/// returns human-readable violations (empty when all hold).
std::vector<std::string> relation_axiom_violations(const IndexSet& index);

struct IotaReport {
  /// (class of Lk(simplex) as its own complex, class of the join in X)
  std::vector<std::pair<std::size_t, std::size_t>> mapping;
  bool injective = true;
  bool preserves_relations = true;
  int link_complexity = 0;
  int ambient_complexity = 0;
  bool complexity_drops = true;
  std::string witness;
  bool ok() const { return injective && preserves_relations && complexity_drops; }
};

/// Map from classes of Lk(simplex) into classes of X, sending [S] to [S * simplex].
/// Throws EmptySimplex or MaximalSimplex.
IotaReport iota_star(const FlagComplex& x, const IndexSet& index, const VertexSet& simplex);

}  // namespace chhs
