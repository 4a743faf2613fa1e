#include "chhs/cliques.hpp"

#include <algorithm>

#include "chhs/errors.hpp"

namespace chhs {
namespace {

bool expand(const Adjacency& adj, VertexSet& r, VertexSet p, VertexSet x,
            const std::function<bool(const VertexSet&)>& visit) {
  if (p.empty()) {
    if (x.empty()) return visit(r);
    return true;
  }
  Vertex pivot = 0;
  std::size_t best = 0;
  bool have = false;
  const VertexSet px = p | x;
  px.for_each([&](Vertex u) {
    const std::size_t c = (p & adj[u]).count();
    if (!have || c > best) {
      pivot = u;
      best = c;
      have = true;
    }
  });
  const VertexSet branch = p - adj[pivot];
  bool keep_going = true;
  branch.for_each([&](Vertex v) {
    if (!keep_going) return;
    r.insert(v);
    keep_going = expand(adj, r, p & adj[v], x & adj[v], visit);
    r.erase(v);
    p.erase(v);
    x.insert(v);
  });
  return keep_going;
}

void cliques_rec(const Adjacency& adj, VertexSet& clique, const VertexSet& common, Vertex start,
                 const std::function<void(const VertexSet&, const VertexSet&)>& visit) {
  visit(clique, common);
  common.for_each([&](Vertex v) {
    if (v < start) return;
    clique.insert(v);
    VertexSet next = common & adj[v];
    cliques_rec(adj, clique, next, v + 1, visit);
    clique.erase(v);
  });
}

}  // namespace

void for_each_maximal_clique(const Adjacency& adj, const VertexSet& within,
                             const std::function<bool(const VertexSet&)>& visit) {
  VertexSet r(within.universe());
  expand(adj, r, within, VertexSet(within.universe()), visit);
}

std::vector<VertexSet> maximal_cliques(const Adjacency& adj, const VertexSet& within, std::size_t cap) {
  std::vector<VertexSet> out;
  bool overflow = false;
  for_each_maximal_clique(adj, within, [&](const VertexSet& c) {
    if (out.size() >= cap) {
      overflow = true;
      return false;
    }
    out.push_back(c);
    return true;
  });
  if (overflow) {
    throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " maximal cliques");
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.lex_compare(b) < 0; });
  return out;
}

void for_each_clique(const Adjacency& adj, const VertexSet& within,
                     const std::function<void(const VertexSet&, const VertexSet&)>& visit) {
  VertexSet clique(within.universe());
  cliques_rec(adj, clique, within, 0, visit);
}

std::vector<VertexSet> cliques_by_size(const Adjacency& adj, const VertexSet& within, std::size_t cap) {
  std::vector<VertexSet> out;
  for_each_clique(adj, within, [&](const VertexSet& c, const VertexSet&) {
    if (out.size() >= cap) throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " cliques");
    out.push_back(c);
  });
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    const auto ca = a.count();
    const auto cb = b.count();
    if (ca != cb) return ca < cb;
    return a.lex_compare(b) < 0;
  });
  return out;
}

bool is_clique(const Adjacency& adj, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && (s - adj[v]).count() != 1) ok = false;
  });
  return ok;
}

}  // namespace chhs
