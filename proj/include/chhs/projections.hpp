#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "chhs/instance.hpp"
#include "chhs/metric_graph.hpp"

namespace chhs {

/// Value of a relative projection: a set for transverse pairs and nesting
/// into the target, a partial map when the target is nested in the source.
struct RhoValue {
  bool is_map = false;
  VertexSet set;
  /// Points of C(source) with their images; nullopt is the explicit empty value.
  std::vector<std::pair<Vertex, std::optional<VertexSet>>> map;
};

/// Projection data of an instance: per-class spaces, point projections and
/// the table of projections of maximal simplices (the W-vertices).
class ProjectionSystem {
 public:
  explicit ProjectionSystem(const Instance& inst);

  const Instance& instance() const noexcept { return inst_; }
  std::size_t class_count() const noexcept { return y_.size(); }
  std::size_t w_count() const noexcept { return inst_.w().vertex_count(); }

  const MetricGraph& y_metric(std::size_t cls) const { return y_[cls]; }
  const MetricGraph& c_metric(std::size_t cls) const { return c_[cls]; }
  const MetricGraph& w_metric() const noexcept { return w_metric_; }
  const MetricGraph& augmented_metric() const noexcept { return aug_metric_; }

  /// Slack-1 projection of a point of Y(cls) to C(cls); empty outside Y or when unreachable.
  const VertexSet& point_projection(std::size_t cls, Vertex v) const { return point_[cls][v]; }
  VertexSet project_set(std::size_t cls, const VertexSet& xs) const;

  /// pi of a maximal simplex (W-vertex) to a class.
  const VertexSet& pi(std::size_t cls, std::size_t w) const { return pi_[cls * w_count() + w]; }

  /// rho from source to target; throws EqualClasses / OrthogonalPair.
  RhoValue rho(std::size_t source, std::size_t target) const;
  /// The set-valued rho (target transverse to source, or source nested in target).
  const VertexSet& rho_set(std::size_t source, std::size_t target) const;
  /// Map-valued rho at one point of C(source) when target is nested in source.
  std::optional<VertexSet> rho_map_at(std::size_t source, std::size_t target, Vertex point) const;
  /// Image of a set under the map-valued rho (union of defined values).
  VertexSet rho_map_image(std::size_t source, std::size_t target, const VertexSet& points) const;

  /// diam in C(cls) of a union; kInfDist when either set is empty or separated.
  Dist d(std::size_t cls, const VertexSet& a, const VertexSet& b) const;
  Dist diam(std::size_t cls, const VertexSet& a) const;
  /// Distance between the coordinates of two W-vertices in C(cls).
  Dist dw(std::size_t cls, std::size_t x, std::size_t y) const { return d(cls, pi(cls, x), pi(cls, y)); }

 private:
  const Instance& inst_;
  std::vector<MetricGraph> y_;
  std::vector<MetricGraph> c_;
  MetricGraph w_metric_;
  MetricGraph aug_metric_;
  std::vector<std::vector<VertexSet>> point_;
  std::vector<VertexSet> pi_;
  std::vector<VertexSet> rho_sets_;
  std::vector<bool> rho_defined_;
};

struct SatAvoidingStats {
  Dist super = 0;
  Dist strong = 0;
  std::size_t pairs = 0;
};

/// Over pairs x != y of Y(cls) joined by an X^{+W}-geodesic avoiding the
/// saturation: max set distance (super) and max union diameter (strong)
/// of their projections in C(cls).
SatAvoidingStats sat_avoiding_stats(const MetricGraph& aug, const MetricGraph& y, const MetricGraph& c,
                                    const VertexSet& link);

}  // namespace chhs
