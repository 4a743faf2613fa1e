#include "chhs/flag_complex.hpp"

#include <algorithm>

#include "chhs/errors.hpp"

namespace chhs {

FlagComplex FlagComplex::build(std::vector<std::string> vertices,
                               const std::vector<std::pair<std::string, std::string>>& edges,
                               std::size_t maximal_cap) {
  if (vertices.empty()) throw Error(ErrorKind::BadParameters, "a complex needs at least one vertex");
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[i - 1]) throw Error(ErrorKind::ParseError, "duplicate vertex label '" + vertices[i] + "'");
  }
  FlagComplex x;
  x.labels_ = std::move(vertices);
  for (std::size_t i = 0; i < x.labels_.size(); ++i) x.index_.emplace(x.labels_[i], static_cast<Vertex>(i));
  x.adj_.assign(x.labels_.size(), VertexSet(x.labels_.size()));
  for (const auto& [a, b] : edges) {
    const Vertex u = x.index_of(a);
    const Vertex v = x.index_of(b);
    if (u == v) throw Error(ErrorKind::LoopEdge, "loop at '" + a + "'");
    if (x.adj_[u].contains(v)) throw Error(ErrorKind::DuplicateEdge, "edge '" + a + "'-'" + b + "' listed twice");
    x.adj_[u].insert(v);
    x.adj_[v].insert(u);
  }
  x.finish(maximal_cap);
  return x;
}

void FlagComplex::finish(std::size_t maximal_cap) {
  maximal_sets_ = maximal_cliques(adj_, all(), maximal_cap);
  maximal_.clear();
  maximal_lookup_.clear();
  containing_.assign(vertex_count(), {});
  dimension_ = -1;
  for (std::size_t i = 0; i < maximal_sets_.size(); ++i) {
    maximal_.push_back(maximal_sets_[i].to_vector());
    maximal_lookup_.emplace(maximal_sets_[i], i);
    dimension_ = std::max(dimension_, static_cast<int>(maximal_.back().size()) - 1);
    for (Vertex v : maximal_.back()) containing_[v].push_back(i);
  }
}

Vertex FlagComplex::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + std::string(label) + "'");
  return it->second;
}

std::optional<Vertex> FlagComplex::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<Vertex, Vertex>> FlagComplex::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    adj_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

std::optional<std::size_t> FlagComplex::maximal_index(const VertexSet& s) const {
  auto it = maximal_lookup_.find(s);
  if (it == maximal_lookup_.end()) return std::nullopt;
  return it->second;
}

VertexSet FlagComplex::set_of(const Simplex& s) const {
  VertexSet out(vertex_count());
  for (Vertex v : s) {
    if (v >= vertex_count()) throw Error(ErrorKind::NotASimplex, "vertex index out of range");
    out.insert(v);
  }
  return out;
}

Simplex FlagComplex::simplex_from_labels(const std::vector<std::string>& labels) const {
  VertexSet s(vertex_count());
  for (const auto& l : labels) {
    const auto v = find(l);
    if (!v) throw Error(ErrorKind::NotASimplex, "vertex '" + l + "' is not in the complex");
    if (s.contains(*v)) throw Error(ErrorKind::NotASimplex, "vertex '" + l + "' repeated");
    s.insert(*v);
  }
  if (!is_simplex(s)) throw Error(ErrorKind::NotASimplex, "vertices {" + key(s) + "} are not pairwise adjacent");
  return s.to_vector();
}

std::string FlagComplex::key(const VertexSet& s) const {
  std::string out;
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out += '|';
    out += labels_[v];
    first = false;
  });
  return out;
}

std::string FlagComplex::key(const Simplex& s) const {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += '|';
    out += labels_[s[i]];
  }
  return out;
}

Simplex FlagComplex::parse_key(std::string_view key) const {
  std::vector<std::string> parts;
  if (!key.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto bar = key.find('|', start);
      parts.emplace_back(key.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
  }
  return simplex_from_labels(parts);
}

std::vector<std::string> FlagComplex::label_list(const VertexSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](Vertex v) { out.push_back(labels_[v]); });
  return out;
}

VertexSet FlagComplex::link_of_set(const VertexSet& s) const {
  VertexSet out = all();
  s.for_each([&](Vertex v) { out &= adj_[v]; });
  out -= s;
  return out;
}

VertexSet FlagComplex::link(const Simplex& s) const {
  const VertexSet set = set_of(s);
  if (set.count() != s.size() || !is_simplex(set)) throw Error(ErrorKind::NotASimplex, "{" + key(set) + "} is not a simplex");
  return link_of_set(set);
}

VertexSet FlagComplex::link(const VertexSet& s) const {
  if (!is_simplex(s)) throw Error(ErrorKind::NotASimplex, "{" + key(s) + "} is not a simplex");
  return link_of_set(s);
}

VertexSet FlagComplex::star(const VertexSet& s) const { return link(s) | s; }

VertexSet FlagComplex::saturation(const VertexSet& s) const {
  const VertexSet lk = link(s);
  // Every simplex with link lk lies in Lk(lk); a clique there has link
  // containing lk, so it suffices to test maximal ones and take unions.
  const VertexSet candidates = link_of_set(lk);
  VertexSet out(vertex_count());
  for_each_maximal_clique(adj_, candidates, [&](const VertexSet& m) {
    if (link_of_set(m) == lk) out |= m;
    return true;
  });
  return out;
}

FlagComplex FlagComplex::induced(const VertexSet& subset) const {
  if (subset.empty()) throw Error(ErrorKind::BadParameters, "induced subcomplex on no vertices");
  FlagComplex x;
  x.labels_ = label_list(subset);
  const auto local = subset.to_vector();
  for (std::size_t i = 0; i < local.size(); ++i) x.index_.emplace(x.labels_[i], static_cast<Vertex>(i));
  x.adj_.assign(local.size(), VertexSet(local.size()));
  for (std::size_t i = 0; i < local.size(); ++i) {
    for (std::size_t j = i + 1; j < local.size(); ++j) {
      if (adj_[local[i]].contains(local[j])) {
        x.adj_[i].insert(static_cast<Vertex>(j));
        x.adj_[j].insert(static_cast<Vertex>(i));
      }
    }
  }
  x.finish(kDefaultMaximalCap);
  return x;
}

FlagComplex join(const FlagComplex& a, const FlagComplex& b) {
  std::vector<std::string> vertices = a.labels();
  for (const auto& l : b.labels()) {
    if (a.find(l)) throw Error(ErrorKind::BadParameters, "join factors share vertex '" + l + "'");
    vertices.push_back(l);
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : a.edges()) edges.emplace_back(a.label(u), a.label(v));
  for (const auto& [u, v] : b.edges()) edges.emplace_back(b.label(u), b.label(v));
  for (const auto& u : a.labels()) {
    for (const auto& v : b.labels()) edges.emplace_back(u, v);
  }
  return FlagComplex::build(std::move(vertices), edges);
}

int longest_chain(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) { return a.count() < b.count(); });
  std::vector<int> best(sets.size(), 1);
  int result = sets.empty() ? 0 : 1;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (best[j] + 1 > best[i] && sets[j].count() < sets[i].count() && sets[j].is_subset_of(sets[i])) {
        best[i] = best[j] + 1;
      }
    }
    result = std::max(result, best[i]);
  }
  return result;
}

Census take_census(const FlagComplex& x, std::size_t simplex_cap) {
  Census census;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> by_link;
  std::vector<SimplexClass> found;
  bool have_empty_link = false;
  for_each_clique(x.adjacency(), x.all(), [&](const VertexSet& clique, const VertexSet&) {
    if (++census.simplex_count > simplex_cap) {
      throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(simplex_cap) + " simplices");
    }
    census.dimension = std::max(census.dimension, static_cast<int>(clique.count()) - 1);
    VertexSet lk = x.link_of_set(clique);
    if (lk.empty()) {
      have_empty_link = true;
      return;
    }
    auto [it, inserted] = by_link.try_emplace(lk, found.size());
    if (inserted) {
      found.push_back(SimplexClass{clique.to_vector(), lk, clique, 1});
      return;
    }
    SimplexClass& cls = found[it->second];
    cls.saturation |= clique;
    ++cls.members;
    const Simplex candidate = clique.to_vector();
    if (candidate.size() < cls.representative.size() ||
        (candidate.size() == cls.representative.size() && candidate < cls.representative)) {
      cls.representative = candidate;
    }
  });
  std::sort(found.begin(), found.end(), [](const SimplexClass& a, const SimplexClass& b) {
    if (a.representative.size() != b.representative.size()) return a.representative.size() < b.representative.size();
    return a.representative < b.representative;
  });
  census.classes = std::move(found);
  for (const auto& c : census.classes) census.distinct_links.push_back(c.link);
  if (have_empty_link) census.distinct_links.push_back(x.none());
  census.complexity = longest_chain(census.distinct_links);
  return census;
}

std::vector<SimplexClass> simplex_classes(const FlagComplex& x) { return take_census(x).classes; }

Complexity complexity(const FlagComplex& x) {
  const Census c = take_census(x);
  return Complexity{c.complexity, c.dimension};
}

}  // namespace chhs
