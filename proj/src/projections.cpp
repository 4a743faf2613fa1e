#include "chhs/projections.hpp"

#include <algorithm>

#include "chhs/errors.hpp"

namespace chhs {

ProjectionSystem::ProjectionSystem(const Instance& inst) : inst_(inst) {
  const IndexSet& index = inst.index();
  const std::size_t n = index.size();
  const std::size_t universe = inst.complex().vertex_count();
  y_.resize(n);
  c_.resize(n);
  point_.resize(n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long ci = 0; ci < count; ++ci) {
    const std::size_t c = static_cast<std::size_t>(ci);
    y_[c] = inst.y_space(c);
    c_[c] = inst.c_space(c);
    point_[c].assign(universe, VertexSet(universe));
    const VertexSet& link = index.link(c);
    for (Vertex v : y_[c].vertices()) {
      point_[c][v] = coarse_projection_of_set(y_[c], link, VertexSet::of(universe, {v}));
    }
  }
  w_metric_ = MetricGraph::induced(inst.w().adjacency(), VertexSet::full(inst.w().vertex_count()));
  aug_metric_ = inst.augmented_metric();

  const std::size_t wn = w_count();
  pi_.assign(n * wn, VertexSet(universe));
#pragma omp parallel for schedule(dynamic, 1)
  for (long long ci = 0; ci < count; ++ci) {
    const std::size_t c = static_cast<std::size_t>(ci);
    for (std::size_t w = 0; w < wn; ++w) pi_[c * wn + w] = project_set(c, inst.complex().maximal_sets()[w]);
  }

  rho_sets_.assign(n * n, VertexSet(universe));
  rho_defined_.assign(n * n, false);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      const Relation r = index.relation(s, t);
      if (r == Relation::Transverse || r == Relation::NestedIn) {
        rho_sets_[s * n + t] = project_set(t, index.saturation(s));
        rho_defined_[s * n + t] = true;
      }
    }
  }
}

VertexSet ProjectionSystem::project_set(std::size_t cls, const VertexSet& xs) const {
  VertexSet out(inst_.complex().vertex_count());
  const MetricGraph& y = y_[cls];
  xs.for_each([&](Vertex v) {
    if (y.contains(v)) out |= point_[cls][v];
  });
  return out;
}

RhoValue ProjectionSystem::rho(std::size_t source, std::size_t target) const {
  const IndexSet& index = inst_.index();
  const Relation r = index.relation(source, target);
  if (r == Relation::Equal) throw Error(ErrorKind::EqualClasses, "rho between a class and itself");
  if (r == Relation::Orthogonal) throw Error(ErrorKind::OrthogonalPair, "rho between orthogonal classes");
  RhoValue out;
  if (r == Relation::Contains) {
    out.is_map = true;
    for (Vertex p : c_[source].vertices()) out.map.emplace_back(p, rho_map_at(source, target, p));
    return out;
  }
  out.set = rho_set(source, target);
  return out;
}

const VertexSet& ProjectionSystem::rho_set(std::size_t source, std::size_t target) const {
  const std::size_t n = class_count();
  if (!rho_defined_[source * n + target]) {
    const Relation r = inst_.index().relation(source, target);
    if (r == Relation::Equal) throw Error(ErrorKind::EqualClasses, "rho between a class and itself");
    if (r == Relation::Orthogonal) throw Error(ErrorKind::OrthogonalPair, "rho between orthogonal classes");
    throw Error(ErrorKind::BadParameters, "set-valued rho needs the source nested in or transverse to the target");
  }
  return rho_sets_[source * n + target];
}

std::optional<VertexSet> ProjectionSystem::rho_map_at(std::size_t, std::size_t target, Vertex point) const {
  if (!y_[target].contains(point)) return std::nullopt;
  return point_[target][point];
}

VertexSet ProjectionSystem::rho_map_image(std::size_t source, std::size_t target, const VertexSet& points) const {
  VertexSet out(inst_.complex().vertex_count());
  points.for_each([&](Vertex p) {
    if (auto image = rho_map_at(source, target, p)) out |= *image;
  });
  return out;
}

Dist ProjectionSystem::d(std::size_t cls, const VertexSet& a, const VertexSet& b) const {
  if (a.empty() || b.empty()) return kInfDist;
  return c_[cls].set_diameter(a | b);
}

Dist ProjectionSystem::diam(std::size_t cls, const VertexSet& a) const {
  if (a.empty()) return kInfDist;
  return c_[cls].set_diameter(a);
}

SatAvoidingStats sat_avoiding_stats(const MetricGraph& aug, const MetricGraph& y, const MetricGraph& c,
                                    const VertexSet& link) {
  SatAvoidingStats stats;
  const auto& vs = y.vertices();
  std::vector<VertexSet> proj(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    proj[i] = coarse_projection_of_set(y, link, VertexSet::of(y.universe(), {vs[i]}));
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Dist* row_y = y.local_row(i);
    const Dist* row_a = aug.local_row(aug.local(vs[i]));
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const Dist dy = row_y[j];
      if (dy == kInfDist || dy != row_a[aug.local(vs[j])]) continue;
      if (proj[i].empty() || proj[j].empty()) continue;
      ++stats.pairs;
      stats.super = std::max(stats.super, c.set_distance(proj[i], proj[j]));
      stats.strong = std::max(stats.strong, c.set_diameter(proj[i] | proj[j]));
    }
  }
  return stats;
}

}  // namespace chhs
