#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "chhs/projections.hpp"
#include "chhs/rational.hpp"

namespace chhs {

struct ConstantsOptions {
  std::vector<Dist> kappa_grid{0, 1, 2, 3, 4};
  std::size_t alpha_family_cap = 3;
  std::size_t alpha_tuple_cap = 512;
  std::uint64_t seed = 1;
  std::size_t synthetic_tuples = 16;
};

struct BgiConstants {
  Dist e = 0;
  Dist c_super = 0;
  Dist c_strong = 0;
  /// No pair of points is joined by a geodesic avoiding any saturation.
  bool vacuous = true;
  std::size_t nested_pairs = 0;
};

struct ThetaEntry {
  Dist kappa = 0;
  Dist bound = 0;
  std::size_t pairs = 0;
};

struct HHSConstants {
  Dist xi = 0;
  Dist kappa0 = 0;
  /// Worst d(rho^U, rho^V) over the transversality coherence triples.
  Dist kappa_rho = 0;
  BgiConstants bgi;
  /// Threshold used to decide which domains the large-links list must cover.
  Dist e_ll = 0;
  Rational lambda_ll = Rational(1);
  Dist alpha = 0;
  bool alpha_exhaustive = true;
  std::size_t alpha_tuples = 0;
  std::vector<ThetaEntry> theta_u;
  Dist theta_real = 0;
  std::size_t realized_tuples = 0;
};

/// A coordinate family: one vertex set per class.
struct Tuple {
  std::vector<VertexSet> coords;
};

struct Realization {
  std::size_t vertex = 0;
  Dist theta = 0;
  /// Measured consistency constant of the input tuple.
  Dist kappa = 0;
};

Tuple coordinate_tuple(const ProjectionSystem& ps, std::size_t w);
Dist tuple_consistency(const ProjectionSystem& ps, const Tuple& t);
Realization realize_tuple(const ProjectionSystem& ps, const Tuple& t);

/// max over W-vertices of the consistency expressions for their coordinates.
Dist consistency_constant(const ProjectionSystem& ps);
Dist projection_diameter_bound(const ProjectionSystem& ps);
Dist rho_coherence(const ProjectionSystem& ps);
BgiConstants bgi_constants(const ProjectionSystem& ps);
Rational large_links_lambda(const ProjectionSystem& ps, Dist threshold);
Dist uniqueness_bound(const ProjectionSystem& ps, Dist kappa, std::size_t* pairs = nullptr);

struct PartialRealization {
  Dist alpha = 0;
  bool exhaustive = true;
  std::size_t tuples = 0;
};
PartialRealization partial_realization(const ProjectionSystem& ps, std::size_t family_cap, std::size_t tuple_cap);

HHSConstants hhs_constants(const ProjectionSystem& ps, const ConstantsOptions& options = {});

struct DistanceFormulaFit {
  Dist s = 0;
  Rational k = Rational(1);
  Rational c = Rational(0);
  std::size_t pairs = 0;
  std::size_t violations = 0;
};

/// Per W-vertex pair (x < y) the coordinate distance in every class, row-major by pair.
struct PairDistances {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Dist> w;
  std::vector<std::vector<Dist>> by_class;
};
PairDistances pair_distances(const ProjectionSystem& ps);

/// Perturbed coordinate distance for (class, pair index, true value).
using Perturbation = std::function<Dist(std::size_t cls, std::size_t pair, Dist d)>;

std::vector<DistanceFormulaFit> distance_formula_fit(const PairDistances& pd, const std::vector<Dist>& thresholds);
/// Refit with perturbed coordinate distances; each must stay within the lambda band of the true value.
std::vector<DistanceFormulaFit> distance_formula_fit(const PairDistances& pd, const std::vector<Dist>& thresholds,
                                                     const Perturbation& h, const Rational& lambda);
/// Count of pairs violating the two-sided bound for a given (K, C).
std::size_t fit_violations(const PairDistances& pd, Dist s, const Rational& k, const Rational& c,
                           const Perturbation* h = nullptr);
Dist thresholded(Dist d, Dist s);

}  // namespace chhs
