#include "chhs/thm_a.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>

#include "chhs/errors.hpp"
#include "chhs/projections.hpp"

namespace chhs {
namespace {

constexpr std::size_t kExampleLimit = 200;

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t a) {
  while (parent[a] != a) {
    parent[a] = parent[parent[a]];
    a = parent[a];
  }
  return a;
}

void unite(std::vector<std::size_t>& parent, std::size_t a, std::size_t b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

std::size_t count_roots(std::vector<std::size_t>& parent) {
  std::size_t roots = 0;
  for (std::size_t i = 0; i < parent.size(); ++i) roots += find_root(parent, i) == i;
  return roots;
}

std::string edge_text(const FlagComplex& x, Vertex a, Vertex b) { return x.label(a) + "-" + x.label(b); }

}  // namespace

bool almost_maximal_class(const FlagComplex& x, const VertexSet& link) {
  bool found = false;
  link.for_each([&](Vertex v) {
    if (!x.neighbors(v).intersects(link)) found = true;
  });
  return found;
}

JoinDecomposition join_decomposition(const FlagComplex& x, const IndexSet& index, std::size_t delta_cls,
                                     std::size_t sigma_cls) {
  JoinDecomposition out;
  out.delta_cls = delta_cls;
  out.sigma_cls = sigma_cls;
  const VertexSet& ld = index.link(delta_cls);
  const VertexSet inter = ld & index.link(sigma_cls);
  VertexSet factors(x.vertex_count());
  inter.for_each([&](Vertex v) {
    if ((inter - x.neighbors(v)).count() == 1) factors.insert(v);
  });
  for (const VertexSet& pi_prime : cliques_by_size(x.adjacency(), factors, kDefaultSimplexCap)) {
    const VertexSet rest = inter - pi_prime;
    std::optional<VertexSet> found;
    for_each_maximal_clique(x.adjacency(), ld & x.link_of_set(rest), [&](const VertexSet& m) {
      if ((ld & x.link_of_set(m)) == rest) {
        found = m;
        return false;
      }
      return true;
    });
    if (found) {
      out.holds = true;
      out.pi = *found;
      out.pi_prime = pi_prime;
      return out;
    }
  }
  out.pi = x.none();
  out.pi_prime = x.none();
  return out;
}

ThmAReport check_thm_a_conditions(const FlagComplex& x, const IndexSet& index, const LinkEdgeMap& extra) {
  const std::size_t n = index.size();
  const std::size_t nv = x.vertex_count();
  for (const auto& [cls, edges] : extra) {
    if (cls >= n) throw Error(ErrorKind::EdgeOutsideLink, "class " + std::to_string(cls) + " does not exist");
    for (const auto& [a, b] : edges) {
      if (a >= nv || b >= nv || !index.link(cls).contains(a) || !index.link(cls).contains(b) || a == b) {
        throw Error(ErrorKind::EdgeOutsideLink,
                    (a < nv && b < nv ? edge_text(x, a, b) : std::string("edge")) + " is not inside the link of {" +
                        x.key(x.set_of(index.representative(cls))) + "}");
      }
    }
  }

  ThmAReport report;
  report.links.resize(n);
  std::exception_ptr failure;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long ci = 0; ci < count; ++ci) {
    const std::size_t c = static_cast<std::size_t>(ci);
    try {
      LinkHyperbolicity& h = report.links[c];
      h.cls = c;
      const VertexSet& link = index.link(c);
      const VertexSet outside = x.all() - index.saturation(c);
      std::vector<std::pair<Vertex, Vertex>> link_edges;
      std::vector<std::pair<Vertex, Vertex>> ambient_edges;
      for (const auto& [a, b] : x.edges()) {
        if (link.contains(a) && link.contains(b)) link_edges.emplace_back(a, b);
        if (outside.contains(a) && outside.contains(b)) ambient_edges.emplace_back(a, b);
      }
      if (auto it = extra.find(c); it != extra.end()) {
        for (const auto& [a, b] : it->second) {
          link_edges.emplace_back(std::min(a, b), std::max(a, b));
          ambient_edges.emplace_back(std::min(a, b), std::max(a, b));
        }
      }
      const MetricGraph lg = MetricGraph::from_edges(nv, link, link_edges);
      const MetricGraph ambient = MetricGraph::from_edges(nv, outside, ambient_edges);
      if (auto pair = lg.separated_pair()) {
        h.delta = Rational::infinity();
        h.delta_witness = pair;
      } else {
        h.delta = gromov_delta(lg);
      }
      const QiReport qi = qi_constants(ambient, lg);
      h.lambda = qi.lambda;
      h.lambda_witness = qi.witness;
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (const LinkHyperbolicity& h : report.links) {
    if (h.delta.is_infinite() || h.lambda.is_infinite()) report.condition_a = false;
  }

  std::vector<std::optional<JoinDecomposition>> first_failure(n);
  std::vector<std::vector<JoinDecomposition>> examples(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long di = 0; di < count; ++di) {
    const std::size_t d = static_cast<std::size_t>(di);
    for (std::size_t s = 0; s < n; ++s) {
      JoinDecomposition j = join_decomposition(x, index, d, s);
      if (!j.holds) {
        first_failure[d] = j;
        break;
      }
      if (index.link(d).intersects(index.link(s))) examples[d].push_back(std::move(j));
    }
  }
  for (std::size_t d = 0; d < n; ++d) {
    report.pairs_checked += examples[d].size();
    if (first_failure[d] && !report.b_failure) {
      report.b_failure = first_failure[d];
      report.condition_b = false;
    }
  }
  if (report.pairs_checked <= kExampleLimit) {
    for (auto& row : examples) {
      for (auto& j : row) report.b_examples.push_back(std::move(j));
    }
  }

  for (std::size_t c = 0; c < n; ++c) {
    const VertexSet& link = index.link(c);
    const MetricGraph lg = MetricGraph::induced(x.adjacency(), link);
    if (lg.connected()) continue;
    if (almost_maximal_class(x, link)) {
      report.exempt_classes.push_back(c);
    } else if (!report.c_failure) {
      report.c_failure = c;
      report.condition_c = false;
    }
  }
  return report;
}

void validate_permutation(const Permutation& p, std::size_t n) {
  if (p.size() != n) {
    throw Error(ErrorKind::NotAPermutation,
                "expected " + std::to_string(n) + " images, got " + std::to_string(p.size()));
  }
  std::vector<bool> seen(n, false);
  for (Vertex v : p) {
    if (v >= n || seen[v]) throw Error(ErrorKind::NotAPermutation, "image list is not a bijection");
    seen[v] = true;
  }
}

VertexSet apply_permutation(const Permutation& p, const VertexSet& s) {
  VertexSet out(s.universe());
  s.for_each([&](Vertex v) { out.insert(p[v]); });
  return out;
}

namespace {

std::optional<std::pair<Vertex, Vertex>> simplicial_failure(const FlagComplex& x, const Permutation& p) {
  for (Vertex a = 0; a < x.vertex_count(); ++a) {
    for (Vertex b = a + 1; b < x.vertex_count(); ++b) {
      if (x.adjacent(a, b) != x.adjacent(p[a], p[b])) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> maximal_image(const FlagComplex& x, const Permutation& p) {
  std::vector<std::size_t> out(x.maximal_sets().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto idx = x.maximal_index(apply_permutation(p, x.maximal_sets()[i]));
    if (!idx) throw std::logic_error("simplicial permutation moved a maximal simplex off the list");
    out[i] = *idx;
  }
  return out;
}

}  // namespace

XGraph build_w_from_link_edges(const FlagComplex& x, const IndexSet& index, const LinkEdgeMap& assignments,
                               const std::vector<Permutation>& generators) {
  const std::size_t nv = x.vertex_count();
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [cls, pairs] : assignments) {
    if (cls >= index.size()) throw Error(ErrorKind::NotAlmostMaximal, "class " + std::to_string(cls) + " does not exist");
    const VertexSet& link = index.link(cls);
    const std::string where = "{" + x.key(x.set_of(index.representative(cls))) + "}";
    if (!almost_maximal_class(x, link)) {
      throw Error(ErrorKind::NotAlmostMaximal, where + " is not a codimension-1 face of a maximal simplex");
    }
    for (const auto& [a, b] : pairs) {
      for (Vertex v : {a, b}) {
        if (v >= nv || !link.contains(v)) {
          throw Error(ErrorKind::EndpointOutsideLink,
                      (v < nv ? x.label(v) : std::to_string(v)) + " is not in the link of " + where);
        }
        if (x.neighbors(v).intersects(link)) {
          throw Error(ErrorKind::NotAlmostMaximal, "joining " + where + " with " + x.label(v) + " is not maximal");
        }
      }
    }
    const VertexSet pool = index.saturation(cls) & x.link_of_set(link);
    for_each_clique(x.adjacency(), pool, [&](const VertexSet& member, const VertexSet&) {
      if (x.link_of_set(member) != link) return;
      for (const auto& [a, b] : pairs) {
        if (a == b) continue;
        VertexSet sa = member;
        sa.insert(a);
        VertexSet sb = member;
        sb.insert(b);
        const auto ia = x.maximal_index(sa);
        const auto ib = x.maximal_index(sb);
        if (!ia || !ib) throw std::logic_error("join with an isolated link vertex is not maximal");
        edges.emplace(std::min(*ia, *ib), std::max(*ia, *ib));
      }
    });
  }
  if (!generators.empty()) {
    std::vector<std::vector<std::size_t>> images;
    for (const Permutation& p : generators) {
      validate_permutation(p, nv);
      if (auto bad = simplicial_failure(x, p)) {
        throw Error(ErrorKind::ActionNotSimplicial, "edge relation changes on " + edge_text(x, bad->first, bad->second));
      }
      images.push_back(maximal_image(x, p));
    }
    std::vector<std::pair<std::size_t, std::size_t>> frontier(edges.begin(), edges.end());
    while (!frontier.empty()) {
      std::vector<std::pair<std::size_t, std::size_t>> next;
      for (const auto& [a, b] : frontier) {
        for (const auto& img : images) {
          auto e = std::make_pair(std::min(img[a], img[b]), std::max(img[a], img[b]));
          if (edges.insert(e).second) next.push_back(e);
        }
      }
      frontier = std::move(next);
    }
  }
  return XGraph(x, std::vector<std::pair<std::size_t, std::size_t>>(edges.begin(), edges.end()));
}

ActionReport check_action(const Instance& inst, const std::vector<Permutation>& generators) {
  const FlagComplex& x = inst.complex();
  const IndexSet& index = inst.index();
  const std::size_t nv = x.vertex_count();
  const std::size_t nm = x.maximal_sets().size();
  const std::size_t nc = index.size();
  for (const Permutation& p : generators) validate_permutation(p, nv);

  ActionReport report;
  std::vector<std::size_t> vparent(nv), mparent(nm), cparent(nc);
  std::iota(vparent.begin(), vparent.end(), 0);
  std::iota(mparent.begin(), mparent.end(), 0);
  std::iota(cparent.begin(), cparent.end(), 0);
  bool all_simplicial = true;
  std::vector<std::vector<std::size_t>> mimages(generators.size());
  std::vector<std::vector<std::size_t>> cimages(generators.size());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const Permutation& p = generators[g];
    GeneratorCheck check;
    for (Vertex v = 0; v < nv; ++v) unite(vparent, v, p[v]);
    if (auto bad = simplicial_failure(x, p)) {
      check.simplicial = false;
      check.simplicial_witness = bad;
      check.preserves_w = false;
      check.equivariant = false;
      all_simplicial = false;
      report.generators.push_back(check);
      continue;
    }
    mimages[g] = maximal_image(x, p);
    for (const auto& [a, b] : inst.w().edges()) {
      if (!inst.w().adjacent(mimages[g][a], mimages[g][b])) {
        check.preserves_w = false;
        check.w_witness = std::make_pair(a, b);
        break;
      }
    }
    cimages[g].resize(nc);
    for (std::size_t c = 0; c < nc; ++c) {
      const auto img = index.class_of_link(apply_permutation(p, index.link(c)));
      if (!img) throw std::logic_error("simplicial permutation moved a link off the class list");
      cimages[g][c] = *img;
    }
    report.generators.push_back(check);
  }

  if (all_simplicial) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      for (std::size_t i = 0; i < nm; ++i) unite(mparent, i, mimages[g][i]);
      for (std::size_t c = 0; c < nc; ++c) unite(cparent, c, cimages[g][c]);
    }
    report.maximal_orbits = count_roots(mparent);
    report.class_orbits = count_roots(cparent);
  }
  report.vertex_orbits = count_roots(vparent);

  bool need_projections = false;
  for (const GeneratorCheck& c : report.generators) need_projections |= c.preserves_w;
  if (need_projections) {
    const ProjectionSystem proj(inst);
    for (std::size_t g = 0; g < generators.size(); ++g) {
      GeneratorCheck& check = report.generators[g];
      if (!check.preserves_w) continue;
      for (std::size_t c = 0; c < nc && check.equivariant; ++c) {
        for (std::size_t w = 0; w < nm; ++w) {
          if (proj.pi(cimages[g][c], mimages[g][w]) != apply_permutation(generators[g], proj.pi(c, w))) {
            check.equivariant = false;
            check.equivariance_witness = std::make_pair(c, w);
            break;
          }
        }
      }
    }
  }
  for (const GeneratorCheck& c : report.generators) {
    report.pass = report.pass && c.simplicial && c.preserves_w && c.equivariant;
  }
  return report;
}

}  // namespace chhs
