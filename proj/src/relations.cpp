#include "chhs/relations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "chhs/errors.hpp"

namespace chhs {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Equal: return "equal";
    case Relation::NestedIn: return "nested-in";
    case Relation::Contains: return "contains";
    case Relation::Orthogonal: return "orthogonal";
    case Relation::Transverse: return "transverse";
  }
  return "unknown";
}

IndexSet::IndexSet(const FlagComplex& x, std::size_t simplex_cap) : census_(take_census(x, simplex_cap)) {
  const std::size_t n = census_.classes.size();
  double_link_.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    double_link_.push_back(x.link_of_set(census_.classes[c].link));
    by_link_.emplace(census_.classes[c].link, c);
  }
  // Longest chain down from the top class: larger links are processed first.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return census_.classes[a].link.count() > census_.classes[b].link.count();
  });
  colevel_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = order[i];
    int best = 0;
    for (std::size_t j = 0; j < i; ++j) {
      const std::size_t d = order[j];
      if (colevel_[d] + 1 > best && census_.classes[d].link.count() > census_.classes[c].link.count() &&
          census_.classes[c].link.is_subset_of(census_.classes[d].link)) {
        best = colevel_[d] + 1;
      }
    }
    colevel_[c] = best;
  }
}

std::optional<std::size_t> IndexSet::class_of_link(const VertexSet& link) const {
  auto it = by_link_.find(link);
  if (it == by_link_.end()) return std::nullopt;
  return it->second;
}

std::size_t IndexSet::class_of(const FlagComplex& x, const VertexSet& simplex) const {
  const VertexSet lk = x.link(simplex);
  if (lk.empty()) throw Error(ErrorKind::MaximalSimplex, "{" + x.key(simplex) + "} is maximal");
  return by_link_.at(lk);
}

Relation IndexSet::relation(std::size_t a, std::size_t b) const {
  if (a == b) return Relation::Equal;
  if (nested(a, b)) return Relation::NestedIn;
  if (nested(b, a)) return Relation::Contains;
  if (link(b).is_subset_of(double_link(a))) return Relation::Orthogonal;
  return Relation::Transverse;
}

RelationTable relation_table(const IndexSet& index) {
  RelationTable t;
  t.n = index.size();
  t.cells.resize(t.n * t.n);
  const long long count = static_cast<long long>(t.n);
#pragma omp parallel for schedule(dynamic, 16) if (t.n > 128)
  for (long long ai = 0; ai < count; ++ai) {
    const std::size_t a = static_cast<std::size_t>(ai);
    for (std::size_t b = 0; b < t.n; ++b) t.cells[a * t.n + b] = index.relation(a, b);
  }
  auto fail = [](const std::string& what) { throw std::logic_error("relation table invariant violated: " + what); };
  if (t.n == 0 || !index.representative(0).empty()) fail("class of the empty simplex missing");
  for (std::size_t a = 0; a < t.n; ++a) {
    const Relation to_top = t.at(a, 0);
    if (a != 0 && to_top != Relation::NestedIn) fail("class not nested in the top class");
    for (std::size_t b = 0; b < t.n; ++b) {
      const Relation r = t.at(a, b);
      const Relation s = t.at(b, a);
      const bool consistent = (r == Relation::Equal && s == Relation::Equal && a == b) ||
                              (r == Relation::NestedIn && s == Relation::Contains) ||
                              (r == Relation::Contains && s == Relation::NestedIn) ||
                              (r == Relation::Orthogonal && s == Relation::Orthogonal) ||
                              (r == Relation::Transverse && s == Relation::Transverse);
      if (!consistent) fail("pair (" + std::to_string(a) + "," + std::to_string(b) + ") is not symmetric");
      // Orthogonality read literally in both directions must agree.
      const bool lit_ab = index.link(b).is_subset_of(index.double_link(a));
      const bool lit_ba = index.link(a).is_subset_of(index.double_link(b));
      if (lit_ab != lit_ba) fail("orthogonality not symmetric at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      if (a == b && lit_ab) fail("class orthogonal to itself");
      if (lit_ab && (r == Relation::NestedIn || r == Relation::Contains)) fail("orthogonal classes are nested");
    }
  }
  return t;
}

std::vector<std::string> relation_axiom_violations(const IndexSet& index) {
  std::vector<std::string> out;
  const std::size_t n = index.size();
  auto nest = [&](std::size_t a, std::size_t b) { return index.link(a).is_subset_of(index.link(b)); };
  auto orth = [&](std::size_t a, std::size_t b) { return index.link(b).is_subset_of(index.double_link(a)); };
  std::size_t maxima = 0;
  for (std::size_t a = 0; a < n; ++a) {
    bool maximal = true;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && nest(a, b)) maximal = false;
      if (a != b && nest(a, b) && nest(b, a)) out.push_back("antisymmetry fails at " + std::to_string(a) + "," + std::to_string(b));
      if (orth(a, b) != orth(b, a)) out.push_back("orthogonality asymmetric at " + std::to_string(a) + "," + std::to_string(b));
      if (orth(a, b) && (nest(a, b) || nest(b, a))) out.push_back("orthogonal and nested at " + std::to_string(a) + "," + std::to_string(b));
    }
    if (orth(a, a)) out.push_back("class " + std::to_string(a) + " orthogonal to itself");
    if (maximal) ++maxima;
    if (!nest(a, 0)) out.push_back("class " + std::to_string(a) + " not below the top class");
  }
  if (maxima != 1) out.push_back("expected a unique maximal class, found " + std::to_string(maxima));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      if (!nest(v, w)) continue;
      for (std::size_t u = 0; u < n; ++u) {
        if (nest(w, u) && !nest(v, u)) out.push_back("transitivity fails");
        if (orth(w, u) && !orth(v, u)) {
          out.push_back("nested-orthogonal inheritance fails at " + std::to_string(v) + "," + std::to_string(w) + "," + std::to_string(u));
        }
      }
    }
  }
  return out;
}

IotaReport iota_star(const FlagComplex& x, const IndexSet& index, const VertexSet& simplex) {
  if (simplex.empty()) throw Error(ErrorKind::EmptySimplex, "the empty simplex has no proper link complex");
  const VertexSet lk = x.link(simplex);
  if (lk.empty()) throw Error(ErrorKind::MaximalSimplex, "{" + x.key(simplex) + "} is maximal");
  IotaReport report;
  const FlagComplex sub = x.induced(lk);
  const IndexSet sub_index(sub);
  const auto local = lk.to_vector();
  report.mapping.reserve(sub_index.size());
  std::vector<std::size_t> image(sub_index.size());
  for (std::size_t c = 0; c < sub_index.size(); ++c) {
    VertexSet joined = simplex;
    for (Vertex v : sub_index.representative(c)) joined.insert(local[v]);
    const VertexSet joined_link = x.link_of_set(joined);
    const auto target = index.class_of_link(joined_link);
    if (!target) {
      report.preserves_relations = false;
      report.witness = "join {" + x.key(joined) + "} has no class";
      continue;
    }
    image[c] = *target;
    report.mapping.emplace_back(c, *target);
  }
  std::vector<std::size_t> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    report.injective = false;
    if (report.witness.empty()) report.witness = "two link classes share an image";
  }
  if (report.preserves_relations) {
    for (std::size_t a = 0; a < sub_index.size() && report.preserves_relations; ++a) {
      for (std::size_t b = 0; b < sub_index.size(); ++b) {
        if (sub_index.relation(a, b) != index.relation(image[a], image[b])) {
          report.preserves_relations = false;
          report.witness = "relation of link classes " + std::to_string(a) + "," + std::to_string(b) + " changes";
          break;
        }
      }
    }
  }
  report.link_complexity = sub_index.complexity();
  report.ambient_complexity = index.complexity();
  report.complexity_drops = report.link_complexity < report.ambient_complexity;
  if (!report.complexity_drops && report.witness.empty()) report.witness = "complexity of the link does not drop";
  return report;
}

}  // namespace chhs
