#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "chhs/instance.hpp"
#include "chhs/rational.hpp"

namespace chhs {

/// A vertex permutation: image of vertex i at position i.
using Permutation = std::vector<Vertex>;
/// Extra edges per link class (keyed by class index).
using LinkEdgeMap = std::map<std::size_t, std::vector<std::pair<Vertex, Vertex>>>;

struct LinkHyperbolicity {
  std::size_t cls = 0;
  Rational delta;
  std::optional<std::pair<Vertex, Vertex>> delta_witness;
  Rational lambda;
  std::optional<std::pair<Vertex, Vertex>> lambda_witness;
};

struct JoinDecomposition {
  std::size_t delta_cls = 0;
  std::size_t sigma_cls = 0;
  bool holds = false;
  VertexSet pi;
  VertexSet pi_prime;
};

struct ThmAReport {
  std::vector<LinkHyperbolicity> links;
  bool condition_a = true;
  bool condition_b = true;
  std::size_t pairs_checked = 0;
  /// First failing pair, or empty when (B) holds.
  std::optional<JoinDecomposition> b_failure;
  /// Decompositions of pairs with nonempty intersection, when few enough to list.
  std::vector<JoinDecomposition> b_examples;
  bool condition_c = true;
  std::vector<std::size_t> exempt_classes;
  std::optional<std::size_t> c_failure;
  bool pass() const { return condition_a && condition_b && condition_c; }
};

/// The three link conditions; extra edges must lie inside their class's link.
ThmAReport check_thm_a_conditions(const FlagComplex& x, const IndexSet& index, const LinkEdgeMap& extra = {});

/// Decomposition search for one ordered pair of classes.
JoinDecomposition join_decomposition(const FlagComplex& x, const IndexSet& index, std::size_t delta_cls,
                                     std::size_t sigma_cls);

/// True when some member of the class is a codimension-1 face of a maximal simplex.
bool almost_maximal_class(const FlagComplex& x, const VertexSet& link);

XGraph build_w_from_link_edges(const FlagComplex& x, const IndexSet& index, const LinkEdgeMap& assignments,
                               const std::vector<Permutation>& generators = {});

struct GeneratorCheck {
  bool simplicial = true;
  std::optional<std::pair<Vertex, Vertex>> simplicial_witness;
  bool preserves_w = true;
  std::optional<std::pair<std::size_t, std::size_t>> w_witness;
  bool equivariant = true;
  /// (class, W-vertex) where equivariance failed.
  std::optional<std::pair<std::size_t, std::size_t>> equivariance_witness;
};

struct ActionReport {
  std::vector<GeneratorCheck> generators;
  std::size_t vertex_orbits = 0;
  std::size_t maximal_orbits = 0;
  std::size_t class_orbits = 0;
  bool pass = true;
};

void validate_permutation(const Permutation& p, std::size_t n);
VertexSet apply_permutation(const Permutation& p, const VertexSet& s);
ActionReport check_action(const Instance& inst, const std::vector<Permutation>& generators);

}  // namespace chhs
