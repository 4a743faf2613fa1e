#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chhs/cli.hpp"
#include "chhs/errors.hpp"
#include "chhs/generators.hpp"
#include "chhs/hhs_constants.hpp"
#include "chhs/instance_io.hpp"
#include "chhs/kernels.hpp"
#include "chhs/relations.hpp"
#include "chhs/thm_a.hpp"
#include "chhs/verifier.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace chhs;
using Clock = std::chrono::steady_clock;

namespace {

const WRule kRules[] = {WRule::None, WRule::Complete, WRule::SharedCodim1Face};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first = what;
  }
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome from(const Tally& t, const std::string& summary) {
  if (t.failures == 0) return {true, summary};
  return {false, std::to_string(t.failures) + "/" + std::to_string(t.checks) + " failed; first: " + t.first};
}

/// Verified instances shared by several criteria.
struct Verified {
  std::size_t entry = 0;
  WRule rule = WRule::None;
  bool pass = false;
  bool condition4 = false;
};

std::vector<Verified> verify_corpus(const std::vector<corpus::Entry>& entries) {
  std::vector<Verified> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (WRule rule : kRules) {
      const Instance inst(entries[i].x, apply_w_rule(entries[i].x, rule));
      VerifyOptions options;
      options.diagnostic_vertex_cap = 0;
      const auto r = verify_chhs(inst, options);
      out.push_back({i, rule, r.pass, r.condition4.holds});
    }
  }
  return out;
}

std::string tag(const corpus::Entry& e, WRule rule) { return e.name + "/" + to_string(rule); }

Outcome identity_suite(const std::vector<corpus::Entry>& entries) {
  const auto t0 = Clock::now();
  Tally t;
  std::size_t simplices = 0;
  for (const auto& e : entries) {
    const FlagComplex& x = e.x;
    t.expect(complexity(x).dim + 2 <= complexity(x).n, e.name + ": dim + 2 > complexity");
    for_each_clique(x.adjacency(), x.all(), [&](const VertexSet& delta, const VertexSet& common) {
      ++simplices;
      const VertexSet lk = x.link_of_set(delta);
      t.expect(lk == common, e.name + ": link differs from common neighbourhood at {" + x.key(delta) + "}");
      t.expect(x.link_of_set(x.saturation(delta)) == lk, e.name + ": Lk(Sat) != Lk at {" + x.key(delta) + "}");
      t.expect(x.link_of_set(x.link_of_set(lk)) == lk, e.name + ": triple link at {" + x.key(delta) + "}");
      // covering inclusions; longer inclusions follow by transitivity
      lk.for_each([&](Vertex v) {
        VertexSet bigger = delta;
        bigger.insert(v);
        t.expect(x.link_of_set(bigger).is_subset_of(lk), e.name + ": link not antitone at {" + x.key(bigger) + "}");
      });
    });
  }
  const double secs = seconds_since(t0);
  t.expect(secs < 300.0, "runtime " + std::to_string(secs) + " s");
  t.expect(entries.size() >= 200, "corpus has only " + std::to_string(entries.size()) + " complexes");
  std::ostringstream s;
  s << entries.size() << " complexes, " << simplices << " simplices, " << t.checks << " checks, " << secs << " s";
  return from(t, s.str());
}

Outcome proj_defined(const std::vector<corpus::Entry>& entries) {
  Tally t;
  for (const auto& e : entries) {
    for (WRule rule : kRules) {
      const Instance inst(e.x, apply_w_rule(e.x, rule));
      for (std::size_t c = 0; c < inst.index().size(); ++c) {
        const MetricGraph y = inst.y_space(c);
        for (const VertexSet& m : e.x.maximal_sets()) {
          const VertexSet part = m & y.vertex_set();
          t.expect(!part.empty() && y.set_diameter(part) <= 1,
                   tag(e, rule) + ": class " + std::to_string(c) + " at {" + e.x.key(m) + "}");
        }
      }
    }
  }
  return from(t, std::to_string(t.checks) + " (maximal, class) pairs over 3 W rules");
}

Outcome c0_equals_c(const std::vector<corpus::Entry>& entries, const std::vector<Verified>& verified) {
  Tally t;
  std::size_t instances = 0;
  for (const Verified& v : verified) {
    if (!v.condition4) continue;
    ++instances;
    const auto& e = entries[v.entry];
    const Instance inst(e.x, apply_w_rule(e.x, v.rule));
    for_each_clique(e.x.adjacency(), e.x.all(), [&](const VertexSet& delta, const VertexSet& common) {
      if (common.empty()) return;
      t.expect(inst.c_space(delta, LinkVariant::C0) == inst.c_space(delta, LinkVariant::C),
               tag(e, v.rule) + ": C0 != C at {" + e.x.key(delta) + "}");
    });
  }
  t.expect(instances > 0, "no instance satisfies condition 4");
  return from(t, std::to_string(t.checks) + " simplices over " + std::to_string(instances) + " condition-4 instances");
}

Outcome relation_theorems(const std::vector<corpus::Entry>& entries) {
  Tally t;
  for (const auto& e : entries) {
    const IndexSet idx(e.x);
    RelationTable table;
    try {
      table = relation_table(idx);
    } catch (const std::logic_error& err) {
      t.expect(false, e.name + ": " + err.what());
      continue;
    }
    const auto violations = relation_axiom_violations(idx);
    t.expect(violations.empty(), e.name + ": " + (violations.empty() ? "" : violations.front()));
    const std::size_t n = table.n;
    for (std::size_t a = 0; a < n; ++a) {
      t.expect(idx.nested(a, 0), e.name + ": class not below the top class");
      t.expect(a == 0 || !idx.nested(0, a), e.name + ": second maximum");
      t.expect(!idx.orthogonal(a, a), e.name + ": orthogonal to itself");
      for (std::size_t b = 0; b < n; ++b) {
        const bool nab = idx.nested(a, b);
        if (nab && idx.nested(b, a)) t.expect(a == b, e.name + ": nesting not antisymmetric");
        t.expect(idx.orthogonal(a, b) == idx.orthogonal(b, a), e.name + ": orthogonality not symmetric");
        t.expect(!(idx.orthogonal(a, b) && (nab || idx.nested(b, a))), e.name + ": orthogonal and nested");
        for (std::size_t u = 0; u < n; ++u) {
          if (nab && idx.nested(b, u)) t.expect(idx.nested(a, u), e.name + ": nesting not transitive");
          if (nab && idx.orthogonal(b, u)) t.expect(idx.orthogonal(a, u), e.name + ": nested class loses orthogonality");
        }
      }
    }
  }
  return from(t, std::to_string(t.checks) + " relation checks");
}

Outcome iota_suite(const std::vector<corpus::Entry>& entries, const std::vector<Verified>& verified) {
  Tally t;
  std::size_t instances = 0;
  std::set<std::size_t> seen;
  for (const Verified& v : verified) {
    if (!v.pass || !seen.insert(v.entry).second) continue;
    ++instances;
    const auto& e = entries[v.entry];
    const IndexSet idx(e.x);
    for_each_clique(e.x.adjacency(), e.x.all(), [&](const VertexSet& delta, const VertexSet& common) {
      if (delta.empty() || common.empty()) return;
      const IotaReport r = iota_star(e.x, idx, delta);
      t.expect(r.ok(), e.name + ": {" + e.x.key(delta) + "} " + r.witness);
    });
  }
  t.expect(instances > 0, "no corpus instance passes verification");
  return from(t, std::to_string(t.checks) + " simplices over " + std::to_string(instances) + " passing complexes");
}

Outcome coned_filtration(const std::vector<corpus::Entry>& entries) {
  Tally t;
  for (const auto& e : entries) {
    for (WRule rule : kRules) {
      const Instance inst(e.x, apply_w_rule(e.x, rule));
      t.expect(inst.coned_intermediate(e.x.none(), 0) == inst.augmented_metric(), tag(e, rule) + ": Y^0 of the empty simplex");
      for (std::size_t c = 0; c < inst.index().size(); ++c) {
        const VertexSet rep = e.x.set_of(inst.index().representative(c));
        const int level = inst.index().colevel(c);
        std::vector<MetricGraph> levels;
        for (int k = 0; k <= level; ++k) levels.push_back(inst.coned_intermediate(rep, k));
        t.expect(levels.back() == inst.y_space(c), tag(e, rule) + ": top level differs from Y at class " + std::to_string(c));
        for (int k = 0; k < level; ++k) {
          bool monotone = levels[k + 1].vertices() == levels[k].vertices();
          for (auto [a, b] : levels[k + 1].edges()) monotone = monotone && levels[k].has_edge(a, b);
          t.expect(monotone, tag(e, rule) + ": level " + std::to_string(k + 1) + " adds edges at class " + std::to_string(c));
        }
      }
    }
  }
  return from(t, std::to_string(t.checks) + " filtration checks");
}

Outcome known_verdicts() {
  Tally t;
  std::ostringstream s;
  {
    const auto oct = gen_octahedron(3);
    const auto r = verify_chhs(Instance(oct, XGraph::complete(oct)));
    t.expect(r.pass, "octahedron does not pass");
    t.expect(r.delta_star && *r.delta_star == Rational(1), "octahedron threshold is not 1");
    t.expect(r.complexity_n == 4, "octahedron complexity is not 4");
    s << "octahedron PASS (threshold " << (r.delta_star ? r.delta_star->to_display() : "-") << ", n " << r.complexity_n << ")";
  }
  {
    const auto x = corpus::two_edges();
    const Instance inst(x, XGraph::empty(x));
    const auto r = verify_chhs(inst);
    t.expect(!r.pass && !r.condition2, "two edges do not fail condition 2");
    t.expect(r.condition2_class == std::optional<std::size_t>(0), "condition 2 witness class is not the top class");
    t.expect(r.condition2_pair && inst.augmented_metric().dist(r.condition2_pair->first, r.condition2_pair->second) == kInfDist,
             "condition 2 witness pair is not separated");
    if (r.condition2_pair) {
      s << "; two edges FAIL(2) at " << x.label(r.condition2_pair->first) << "," << x.label(r.condition2_pair->second);
    }
  }
  {
    const auto x = corpus::glued_squares_with_pendant();
    const IndexSet idx(x);
    const auto r = check_thm_a_conditions(x, idx);
    const auto a = idx.class_of(x, x.set_of({x.index_of("a")}));
    const auto c = idx.class_of(x, x.set_of({x.index_of("c")}));
    t.expect(!r.condition_b, "glued squares pass the join condition");
    t.expect(r.b_failure && r.b_failure->delta_cls == a && r.b_failure->sigma_cls == c, "join-condition witness is not ({a},{c})");
    s << "; glued squares FAIL(B) at ({a},{c})";
  }
  return from(t, s.str());
}

Outcome metric_oracles(const std::vector<corpus::Entry>& entries) {
  Tally t;
  for (std::size_t n = 1; n <= 30; ++n) {
    t.expect(gromov_delta(shortest_path_metric(gen_path(n).adjacency())) == Rational(0), "path " + std::to_string(n));
  }
  t.expect(gromov_delta(shortest_path_metric(gen_cycle(4).adjacency())) == Rational(1), "4-cycle");
  for (std::size_t n = 2; n <= 20; ++n) {
    Adjacency adj(n, VertexSet::full(n));
    for (Vertex v = 0; v < n; ++v) adj[v].erase(v);
    t.expect(gromov_delta(shortest_path_metric(adj)) == Rational(0), "complete graph " + std::to_string(n));
  }
  std::size_t graphs = 0;
  auto compare = [&](const std::string& name, const Adjacency& adj, const oracle::Graph& g) {
    if (adj.size() > 60) return;
    ++graphs;
    const auto twice = oracle::naive_twice_delta(oracle::bfs_all(g));
    const MetricGraph m = shortest_path_metric(adj);
    if (twice < 0) {
      bool threw = false;
      try {
        gromov_delta(m);
      } catch (const Error& err) {
        threw = err.kind() == ErrorKind::Disconnected;
      }
      t.expect(threw, name + ": disconnected graph not rejected");
    } else {
      t.expect(gromov_delta(m) == Rational::half(twice), name + ": four-point constant differs from the oracle");
    }
  };
  for (const auto& e : entries) {
    compare(e.name, e.x.adjacency(), oracle::graph_of(e.x));
    const auto aug = build_augmented(e.x, apply_w_rule(e.x, WRule::SharedCodim1Face));
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b, origin] : aug.edges) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    compare(e.name + "+W", aug.adj, oracle::graph_from_edges(static_cast<int>(e.x.vertex_count()), edges));
  }
  return from(t, std::to_string(graphs) + " graphs agree with the quadruple loop");
}

Outcome constant_coherence(const std::vector<corpus::Entry>& entries, const std::vector<Verified>& verified) {
  Tally t;
  std::size_t instances = 0;
  const std::vector<Dist> thresholds{2, 3, 4, 5, 6};
  for (const Verified& v : verified) {
    if (!v.pass) continue;
    ++instances;
    const auto& e = entries[v.entry];
    const std::string name = tag(e, v.rule);
    const Instance inst(e.x, apply_w_rule(e.x, v.rule));
    const ProjectionSystem ps(inst);
    const HHSConstants h = hhs_constants(ps);
    t.expect(h.kappa0 != kInfDist, name + ": kappa0 infinite");
    t.expect(h.bgi.e != kInfDist, name + ": E infinite");
    t.expect(h.xi != kInfDist, name + ": xi infinite");
    t.expect(h.alpha != kInfDist, name + ": alpha infinite");
    for (const auto& th : h.theta_u) t.expect(th.bound != kInfDist, name + ": theta_u infinite");

    const PairDistances pd = pair_distances(ps);
    const auto fits = distance_formula_fit(pd, thresholds);
    for (const auto& f : fits) {
      const std::string at = name + " s=" + std::to_string(f.s);
      t.expect(f.k.is_finite() && f.c.is_finite() && f.k >= Rational(1) && f.c >= Rational(0), at + ": invalid (K,C)");
      if (!f.k.is_finite() || !f.c.is_finite()) continue;
      std::size_t bad = 0;
      for (std::size_t i = 0; i < pd.pairs.size(); ++i) {
        const auto [x, y] = pd.pairs[i];
        const Dist dw = ps.w_metric().dist(static_cast<Vertex>(x), static_cast<Vertex>(y));
        std::int64_t sum = 0;
        bool infinite = dw == kInfDist;
        for (std::size_t c = 0; c < ps.class_count(); ++c) {
          const Dist d = ps.d(c, ps.pi(c, x), ps.pi(c, y));
          if (d == kInfDist) {
            infinite = true;
          } else if (d >= f.s) {
            sum += d;
          }
        }
        if (infinite) {
          ++bad;
          continue;
        }
        const Rational r_sum(sum);
        const Rational r_dw(dw);
        if (r_sum / f.k - f.c > r_dw || r_dw > f.k * r_sum + f.c) ++bad;
      }
      t.expect(bad == 0 && f.violations == 0, at + ": " + std::to_string(bad) + " pairs outside the fit");
    }
    for (std::size_t w = 0; w < ps.w_count(); ++w) {
      t.expect(realize_tuple(ps, coordinate_tuple(ps, w)).theta <= h.xi, name + ": realization above xi");
    }
  }
  t.expect(instances > 0, "no passing instance");
  return from(t, std::to_string(instances) + " passing instances, " + std::to_string(t.checks) + " checks");
}

Outcome amalgam_ball() {
  Tally t;
  const Amalgam a = gen_amalgam(s3_amalgam_spec(3));
  const FlagComplex& x = a.x;
  const std::set<std::string> interior(a.interior.begin(), a.interior.end());
  std::size_t g_count = 0;
  std::size_t coset_count = 0;
  for (const std::string& label : a.interior) {
    const VertexSet v = x.set_of({x.index_of(label)});
    const VertexSet lk = x.link(v);
    if (label.rfind("g:", 0) == 0) {
      ++g_count;
      bool single_edge = lk.count() == 2;
      if (single_edge) {
        const auto ends = lk.to_vector();
        single_edge = x.adjacent(ends[0], ends[1]);
      }
      t.expect(single_edge, label + ": link is not a single edge");
    } else if (label.rfind("A:", 0) == 0) {
      ++coset_count;
      t.expect(lk.count() == a.order_a + a.index_c_in_a,
               label + ": link has " + std::to_string(lk.count()) + " vertices, expected 9");
    }
  }
  std::set<std::set<std::string>> triples;
  for (const std::string& label : a.interior) {
    if (label.rfind("g:", 0) != 0) continue;
    const VertexSet lk = x.link(x.set_of({x.index_of(label)}));
    std::set<std::string> triple{label};
    for (const auto& l : x.label_list(lk)) triple.insert(l);
    triples.insert(triple);
  }
  std::set<std::set<std::string>> interior_maximal;
  for (const VertexSet& m : x.maximal_sets()) {
    const auto labels = x.label_list(m);
    bool inside = true;
    for (const auto& l : labels) inside = inside && interior.count(l) > 0;
    if (inside) interior_maximal.insert(std::set<std::string>(labels.begin(), labels.end()));
  }
  for (const auto& m : interior_maximal) {
    int g = 0, ca = 0, cb = 0;
    for (const auto& l : m) {
      g += l.rfind("g:", 0) == 0;
      ca += l.rfind("A:", 0) == 0;
      cb += l.rfind("B:", 0) == 0;
    }
    t.expect(m.size() == 3 && g == 1 && ca == 1 && cb == 1 && triples.count(m), "interior maximal simplex is not a {g, gA, gB} triple");
  }
  for (const auto& tr : triples) t.expect(interior_maximal.count(tr) > 0, "a {g, gA, gB} triple is not an interior maximal simplex");
  t.expect(g_count > 0 && coset_count > 0, "empty interior");
  std::ostringstream s;
  s << g_count << " interior group vertices, " << coset_count << " interior A-cosets, " << interior_maximal.size()
    << " interior maximal simplices";
  return from(t, s.str());
}

Outcome performance() {
  Tally t;
  std::ostringstream s;
  std::uint64_t seed = 1;
  FlagComplex x = gen_random_flag(150, 0.1, seed);
  while (x.maximal_simplices().size() > 2000) x = gen_random_flag(150, 0.1, ++seed);
  const Instance inst(x, apply_w_rule(x, WRule::SharedCodim1Face));
  auto t0 = Clock::now();
  const auto r = verify_chhs(inst);
  const double verify_secs = seconds_since(t0);
  t.expect(verify_secs < 60.0, "verification took " + std::to_string(verify_secs) + " s");
  s << "verify 150 vertices/" << x.maximal_simplices().size() << " maximal (" << (r.pass ? "PASS" : "FAIL") << ") "
    << verify_secs << " s";

  FlagComplex big = gen_random_flag(300, 0.05, 1);
  const MetricGraph m = shortest_path_metric(big.adjacency());
  t.expect(m.connected(), "300-vertex graph is disconnected");
  t0 = Clock::now();
  const Rational delta = gromov_delta(m, 300);
  const double delta_secs = seconds_since(t0);
  t.expect(delta_secs < 120.0, "delta kernel took " + std::to_string(delta_secs) + " s");
  s << "; delta on 300 vertices = " << delta.to_display() << " in " << delta_secs << " s (" << omp_get_max_threads()
    << " threads)";
  return from(t, s.str());
}

Outcome determinism() {
  Tally t;
  std::vector<std::string> documents;
  documents.push_back(run({"gen", "octahedron", "--size", "3", "--w-rule", "complete"}).out);
  documents.push_back(run({"gen", "random_flag", "--size", "20", "--prob", "0.3", "--seed", "5", "--w-rule",
                           "shared_codim1_face"})
                          .out);
  documents.push_back(run({"gen", "amalgam", "--radius", "2"}).out);
  documents.push_back(emit_instance(corpus::two_edges(), XGraph::empty(corpus::two_edges())));
  const std::vector<std::string> commands{"inspect", "verify-chhs", "verify-thm-a", "projections",
                                          "constants", "distance-formula", "realize"};
  std::size_t compared = 0;
  for (const auto& doc : documents) {
    for (const auto& cmd : commands) {
      const auto first = run({cmd, "--seed", "7", "--threads", "1"}, doc);
      const auto second = run({cmd, "--seed", "7", "--threads", "1"}, doc);
      const auto wide = run({cmd, "--seed", "7", "--threads", "8"}, doc);
      ++compared;
      t.expect(first.out == second.out && first.exit_code == second.exit_code, cmd + ": two runs differ");
      t.expect(first.out == wide.out && first.exit_code == wide.exit_code, cmd + ": 1 and 8 threads differ");
    }
  }
  omp_set_num_threads(omp_get_num_procs());
  return from(t, std::to_string(compared) + " reports identical across runs and thread counts {1, 8}");
}

}  // namespace

int main() {
  const auto entries = corpus::build();
  const auto verified = verify_corpus(entries);
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, [&] { return identity_suite(entries); }},
      {2, [&] { return proj_defined(entries); }},
      {3, [&] { return c0_equals_c(entries, verified); }},
      {4, [&] { return relation_theorems(entries); }},
      {5, [&] { return iota_suite(entries, verified); }},
      {6, [&] { return coned_filtration(entries); }},
      {7, [&] { return known_verdicts(); }},
      {8, [&] { return metric_oracles(entries); }},
      {9, [&] { return constant_coherence(entries, verified); }},
      {10, [&] { return amalgam_ball(); }},
      {11, [&] { return performance(); }},
      {12, [&] { return determinism(); }},
  };
  int failed = 0;
  for (const auto& [number, check] : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("criterion %2d: %s  %s  [%.2f s]\n", number, o.pass ? "PASS" : "FAIL", o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
