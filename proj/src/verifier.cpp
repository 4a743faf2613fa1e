#include "chhs/verifier.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <unordered_map>

#include "chhs/errors.hpp"
#include "chhs/projections.hpp"

namespace chhs {
namespace {

bool qualifies(Dist diameter, const Rational& threshold) {
  return diameter == kInfDist || Rational(diameter) >= threshold;
}

/// Caches shared by the pairs of one row of the condition-3 scan.
struct Condition3Scratch {
  std::unordered_map<VertexSet, VertexSet, VertexSetHash> union_by_intersection;
  // (sigma, union) -> links of the joins with maximal admissible simplices
  std::map<std::pair<std::size_t, std::vector<std::uint64_t>>, std::vector<VertexSet>> joins;
};

const VertexSet& qualifying_union(const Instance& inst, const std::vector<std::size_t>& qualifying,
                                  const VertexSet& intersection, Condition3Scratch& scratch) {
  auto it = scratch.union_by_intersection.find(intersection);
  if (it != scratch.union_by_intersection.end()) return it->second;
  VertexSet u(intersection.universe());
  for (std::size_t g : qualifying) {
    const VertexSet& lg = inst.index().link(g);
    if (lg.is_subset_of(intersection)) u |= lg;
  }
  return scratch.union_by_intersection.emplace(intersection, std::move(u)).first->second;
}

const std::vector<VertexSet>& admissible_join_links(const Instance& inst, std::size_t sigma, const VertexSet& u,
                                                    Condition3Scratch& scratch) {
  auto key = std::make_pair(sigma, u.words());
  auto it = scratch.joins.find(key);
  if (it != scratch.joins.end()) return it->second;
  const FlagComplex& x = inst.complex();
  const VertexSet& ls = inst.index().link(sigma);
  const VertexSet candidates = ls & x.link_of_set(u);
  std::vector<VertexSet> links;
  for_each_maximal_clique(x.adjacency(), candidates, [&](const VertexSet& m) {
    links.push_back(ls & x.link_of_set(m));
    return true;
  });
  return scratch.joins.emplace(std::move(key), std::move(links)).first->second;
}

std::vector<std::size_t> qualifying_classes(const std::vector<Dist>& diameters, const Rational& threshold) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < diameters.size(); ++c) {
    if (qualifies(diameters[c], threshold)) out.push_back(c);
  }
  return out;
}

}  // namespace

Rational ceil_half(const Rational& r) {
  if (r.is_infinite()) return r;
  return Rational::half((r * Rational(2)).ceil());
}

Condition3Outcome check_condition3(const Instance& inst, const std::vector<Dist>& diameters, const Rational& threshold) {
  const IndexSet& index = inst.index();
  const std::size_t n = index.size();
  const std::vector<std::size_t> qualifying = qualifying_classes(diameters, threshold);
  std::vector<std::size_t> first_failure(n, n);
  std::vector<std::size_t> nonvacuous(n, 0);
  const long long count = static_cast<long long>(n);
#pragma omp parallel
  {
    Condition3Scratch scratch;
#pragma omp for schedule(dynamic, 4)
    for (long long di = 0; di < count; ++di) {
      const std::size_t delta = static_cast<std::size_t>(di);
      const VertexSet& ld = index.link(delta);
      for (std::size_t sigma = 0; sigma < n; ++sigma) {
        const VertexSet& ls = index.link(sigma);
        const VertexSet inter = ld & ls;
        if (inter.empty()) continue;
        const VertexSet& u = qualifying_union(inst, qualifying, inter, scratch);
        if (u.empty()) continue;
        ++nonvacuous[delta];
        if (ls.is_subset_of(ld)) continue;
        bool found = false;
        for (const VertexSet& joined : admissible_join_links(inst, sigma, u, scratch)) {
          if (joined.is_subset_of(ld)) {
            found = true;
            break;
          }
        }
        if (!found) {
          first_failure[delta] = sigma;
          break;
        }
      }
    }
  }
  Condition3Outcome out;
  out.threshold = threshold;
  for (std::size_t delta = 0; delta < n; ++delta) {
    out.nonvacuous_pairs += nonvacuous[delta];
    if (first_failure[delta] < n && !out.witness) {
      Condition3Witness w;
      w.delta_cls = delta;
      w.sigma_cls = first_failure[delta];
      const VertexSet inter = index.link(delta) & index.link(w.sigma_cls);
      for (std::size_t g : qualifying) {
        if (index.link(g).is_subset_of(inter)) w.gammas.push_back(g);
      }
      out.witness = std::move(w);
      out.holds = false;
    }
  }
  return out;
}

std::optional<VertexSet> condition3_certificate(const Instance& inst, const std::vector<Dist>& diameters,
                                                const Rational& threshold, std::size_t delta_cls, std::size_t sigma_cls) {
  const IndexSet& index = inst.index();
  const FlagComplex& x = inst.complex();
  const VertexSet& ld = index.link(delta_cls);
  const VertexSet& ls = index.link(sigma_cls);
  const VertexSet inter = ld & ls;
  VertexSet u(x.vertex_count());
  for (std::size_t g : qualifying_classes(diameters, threshold)) {
    if (index.link(g).is_subset_of(inter)) u |= index.link(g);
  }
  const VertexSet candidates = ls & x.link_of_set(u);
  for (const VertexSet& pi : cliques_by_size(x.adjacency(), candidates, kDefaultSimplexCap)) {
    if ((ls & x.link_of_set(pi)).is_subset_of(ld)) return pi;
  }
  return std::nullopt;
}

Condition4Result check_condition4(const Instance& inst) {
  const FlagComplex& x = inst.complex();
  const XGraph& w = inst.w();
  const std::size_t n = x.vertex_count();
  std::vector<std::size_t> checked(n, 0);
  std::vector<std::optional<Condition4Witness>> witness(n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long vi = 0; vi < count; ++vi) {
    const Vertex v = static_cast<Vertex>(vi);
    for (Vertex u = v + 1; u < n && !witness[v]; ++u) {
      if (x.adjacent(v, u)) continue;
      std::vector<VertexSet> supports;
      for (std::size_t a : x.maximal_containing(v)) {
        for (std::size_t b : x.maximal_containing(u)) {
          if (w.adjacent(a, b)) supports.push_back(x.maximal_sets()[a] & x.maximal_sets()[b]);
        }
      }
      if (supports.empty()) continue;
      ++checked[v];
      const VertexSet common = x.neighbors(v) & x.neighbors(u);
      for_each_maximal_clique(x.adjacency(), common, [&](const VertexSet& clique) {
        for (const VertexSet& s : supports) {
          if (clique.is_subset_of(s)) return true;
        }
        witness[v] = Condition4Witness{clique, v, u};
        return false;
      });
    }
  }
  Condition4Result out;
  for (Vertex v = 0; v < n; ++v) {
    out.pairs_checked += checked[v];
    if (witness[v] && !out.witness) {
      out.witness = witness[v];
      out.holds = false;
    }
  }
  return out;
}

VerificationReport verify_chhs(const Instance& inst, const VerifyOptions& options) {
  const IndexSet& index = inst.index();
  const std::size_t n = index.size();
  VerificationReport report;
  report.complexity_n = index.complexity();
  report.dimension = index.dimension();
  report.classes.resize(n);

  const MetricGraph aug = inst.augmented_metric();
  const bool run_super = inst.complex().vertex_count() <= options.diagnostic_vertex_cap;
  std::vector<Dist> super_values(n, 0);
  std::exception_ptr failure;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long ci = 0; ci < count; ++ci) {
    const std::size_t c = static_cast<std::size_t>(ci);
    try {
      ClassMetrics& m = report.classes[c];
      m.cls = c;
      const MetricGraph y = inst.y_space(c);
      const MetricGraph cm = inst.c_space(c);
      m.diameter_c = cm.diameter();
      if (auto pair = cm.separated_pair()) {
        m.delta_c = Rational::infinity();
        m.delta_witness = pair;
      } else {
        m.delta_c = gromov_delta(cm, options.delta_cap);
      }
      const QiReport qi = qi_constants(y, cm);
      m.lambda = qi.lambda;
      m.lambda_witness = qi.witness;
      m.y_connected = y.connected();
      if (y.size() <= options.diagnostic_vertex_cap && m.y_connected && y.size() > 0) {
        m.delta_y = gromov_delta(y, options.delta_cap);
      }
      if (run_super) super_values[c] = sat_avoiding_stats(aug, y, cm, index.link(c)).super;
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  if (run_super) report.super_bgi = *std::max_element(super_values.begin(), super_values.end());

  report.delta2 = Rational(0);
  for (const ClassMetrics& m : report.classes) {
    const Rational worst = max(m.delta_c, m.lambda);
    if (worst.is_infinite() && !report.condition2_class) {
      report.condition2_class = m.cls;
      report.condition2_pair = m.delta_c.is_infinite() ? m.delta_witness : m.lambda_witness;
    }
    report.delta2 = max(report.delta2, worst);
  }
  report.condition2 = report.delta2.is_finite();

  std::vector<Dist> diameters(n);
  for (std::size_t c = 0; c < n; ++c) diameters[c] = report.classes[c].diameter_c;
  std::vector<Dist> finite_diameters;
  for (Dist d : diameters) {
    if (d != kInfDist) finite_diameters.push_back(d);
  }
  std::sort(finite_diameters.begin(), finite_diameters.end());
  finite_diameters.erase(std::unique(finite_diameters.begin(), finite_diameters.end()), finite_diameters.end());

  const Rational start = report.condition2 ? ceil_half(report.delta2) : Rational(0);
  std::vector<Rational> candidates{start};
  for (Dist d : finite_diameters) {
    const Rational next = Rational(d) + Rational(1, 2);
    if (next > start) candidates.push_back(next);
  }
  std::optional<Rational> passing;
  for (const Rational& t : candidates) {
    Condition3Outcome outcome = check_condition3(inst, diameters, t);
    const bool holds = outcome.holds;
    report.condition3 = std::move(outcome);
    if (holds) {
      passing = t;
      break;
    }
  }
  if (passing) {
    report.monotone_recheck = check_condition3(inst, diameters, *passing + Rational(1)).holds;
    if (report.condition2) {
      report.delta_star = passing;
    } else {
      report.delta3 = passing;
    }
    if (report.condition3.nonvacuous_pairs <= 200) {
      for (std::size_t d = 0; d < n; ++d) {
        for (std::size_t s = 0; s < n; ++s) {
          const VertexSet inter = index.link(d) & index.link(s);
          bool nonvacuous = false;
          for (std::size_t g = 0; g < n && !nonvacuous; ++g) {
            nonvacuous = qualifies(diameters[g], *passing) && index.link(g).is_subset_of(inter);
          }
          if (!nonvacuous || inter.empty()) continue;
          if (auto pi = condition3_certificate(inst, diameters, *passing, d, s)) {
            report.certificates.push_back(Condition3Certificate{d, s, *pi});
          }
        }
      }
    }
  }

  report.condition4 = check_condition4(inst);
  report.pass = report.condition2 && report.delta_star.has_value() && report.condition4.holds;

  if (report.pass && options.lemma_checks) {
    LemmaChecks& lemmas = report.lemmas;
    lemmas.ran = true;
    const FlagComplex& x = inst.complex();
    for (std::size_t c = 0; c < n; ++c) {
      const VertexSet rep = x.set_of(index.representative(c));
      const auto c_edges = inst.c_space(c).edges();
      if (c_edges != inst.c0_edges(rep)) {
        lemmas.c0_equals_c = false;
        if (lemmas.detail.empty()) lemmas.detail = "C0 differs from C at {" + x.key(rep) + "}";
      }
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (!qualifies(diameters[s], *report.delta_star)) continue;
      for (std::size_t d = 0; d < n; ++d) {
        if (!index.nested(s, d)) continue;
        const VertexSet& ld = index.link(d);
        const VertexSet& ls = index.link(s);
        bool found = false;
        for_each_maximal_clique(x.adjacency(), ld & x.link_of_set(ls), [&](const VertexSet& m) {
          found = (ld & x.link_of_set(m)) == ls;
          return !found;
        });
        if (!found) {
          lemmas.sc_nesting = false;
          if (lemmas.detail.empty()) lemmas.detail = "nested pair without a join form at classes " + std::to_string(s) + "," + std::to_string(d);
        }
      }
    }
    if (aug.connected()) {
      for (const ClassMetrics& m : report.classes) {
        if (!m.y_connected) {
          lemmas.y_connected = false;
          if (lemmas.detail.empty()) lemmas.detail = "Y disconnected for class " + std::to_string(m.cls);
        }
      }
    }
  }
  return report;
}

}  // namespace chhs
