#include "chhs/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "chhs/errors.hpp"

namespace chhs {

int FiniteGroup::identity() const {
  for (int e = 0; e < size(); ++e) {
    bool ok = true;
    for (int x = 0; x < size() && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) return e;
  }
  throw Error(ErrorKind::BadParameters, "multiplication table has no identity");
}

int FiniteGroup::inverse(int a) const {
  const int e = identity();
  for (int x = 0; x < size(); ++x) {
    if (mul(a, x) == e) return x;
  }
  throw Error(ErrorKind::BadParameters, "element without inverse");
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string padded(std::size_t i, std::size_t n) {
  std::size_t width = 2;
  for (std::size_t m = n > 0 ? n - 1 : 0; m >= 100; m /= 10) ++width;
  std::string s = std::to_string(i);
  return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

}  // namespace

FiniteGroup symmetric_group(int n) {
  if (n < 1) throw Error(ErrorKind::BadParameters, "symmetric group needs n >= 1");
  const auto perms = all_permutations(n);
  FiniteGroup g;
  g.table.assign(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> comp(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
      g.table[a][b] = permutation_index(comp);
    }
  }
  return g;
}

int permutation_index(const std::vector<int>& perm) {
  const auto perms = all_permutations(static_cast<int>(perm.size()));
  const auto it = std::find(perms.begin(), perms.end(), perm);
  if (it == perms.end()) throw Error(ErrorKind::BadParameters, "not a permutation");
  return static_cast<int>(it - perms.begin());
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw Error(ErrorKind::BadParameters, "cyclic group needs n >= 1");
  FiniteGroup g;
  g.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  }
  return g;
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators) {
  std::set<int> members{g.identity()};
  std::vector<int> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int s : generators) {
        if (members.insert(g.mul(x, s)).second) next.push_back(g.mul(x, s));
      }
    }
    frontier = std::move(next);
  }
  return {members.begin(), members.end()};
}

namespace {

struct Factor {
  bool in_a = true;
  int rep = 0;
  auto operator<=>(const Factor&) const = default;
};

struct NormalForm {
  std::vector<Factor> factors;
  int c = 0;
  auto operator<=>(const NormalForm&) const = default;
};

/// Left transversal of an embedded subgroup: x = rep(x) * embed(c(x)).
struct Transversal {
  const FiniteGroup* group = nullptr;
  std::vector<int> rep;
  std::vector<int> c_part;
  int identity = 0;
};

Transversal make_transversal(const FiniteGroup& g, const std::vector<int>& embed) {
  Transversal t;
  t.group = &g;
  t.identity = g.identity();
  t.rep.assign(g.size(), -1);
  t.c_part.assign(g.size(), -1);
  std::vector<int> back(g.size(), -1);
  for (std::size_t i = 0; i < embed.size(); ++i) back[embed[i]] = static_cast<int>(i);
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_partition(order.begin(), order.end(), [&](int x) { return x == t.identity; });
  for (int x : order) {
    if (t.rep[x] != -1) continue;
    for (int ce : embed) {
      const int y = g.mul(x, ce);
      t.rep[y] = x;
      t.c_part[y] = back[ce];
    }
  }
  return t;
}

struct AmalgamArithmetic {
  const AmalgamSpec& spec;
  Transversal ta;
  Transversal tb;

  NormalForm times(const NormalForm& g, bool in_a, int element) const {
    const Transversal& t = in_a ? ta : tb;
    const std::vector<int>& embed = in_a ? spec.c_in_a : spec.c_in_b;
    const FiniteGroup& grp = in_a ? spec.a : spec.b;
    NormalForm out = g;
    int x = grp.mul(embed[g.c], element);
    if (!out.factors.empty() && out.factors.back().in_a == in_a) {
      x = grp.mul(out.factors.back().rep, x);
      out.factors.pop_back();
    }
    if (t.rep[x] != t.identity) out.factors.push_back(Factor{in_a, t.rep[x]});
    out.c = t.c_part[x];
    return out;
  }
};

std::string seq_text(const std::vector<Factor>& f) {
  if (f.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += '.';
    s += (f[i].in_a ? 'a' : 'b') + std::to_string(f[i].rep);
  }
  return s;
}

std::vector<Factor> coset_key(const NormalForm& g, bool a_side) {
  std::vector<Factor> key = g.factors;
  if (!key.empty() && key.back().in_a == a_side) key.pop_back();
  return key;
}

void check_embedding(const FiniteGroup& c, const FiniteGroup& g, const std::vector<int>& embed, const char* name) {
  if (embed.size() != static_cast<std::size_t>(c.size())) {
    throw Error(ErrorKind::InvalidEmbedding, std::string("embedding into ") + name + " has the wrong length");
  }
  std::set<int> seen;
  for (int v : embed) {
    if (v < 0 || v >= g.size() || !seen.insert(v).second) {
      throw Error(ErrorKind::InvalidEmbedding, std::string("embedding into ") + name + " is not injective");
    }
  }
  for (int x = 0; x < c.size(); ++x) {
    for (int y = 0; y < c.size(); ++y) {
      if (embed[c.mul(x, y)] != g.mul(embed[x], embed[y])) {
        throw Error(ErrorKind::InvalidEmbedding, std::string("embedding into ") + name + " is not a homomorphism");
      }
    }
  }
}

}  // namespace

AmalgamSpec s3_amalgam_spec(int radius) {
  AmalgamSpec spec;
  spec.a = symmetric_group(3);
  spec.b = symmetric_group(3);
  spec.c = cyclic_group(2);
  const int e = permutation_index({0, 1, 2});
  const int swap = permutation_index({1, 0, 2});
  spec.c_in_a = {e, swap};
  spec.c_in_b = {e, swap};
  spec.radius = radius;
  return spec;
}

Amalgam gen_amalgam(const AmalgamSpec& spec) {
  check_embedding(spec.c, spec.a, spec.c_in_a, "A");
  check_embedding(spec.c, spec.b, spec.c_in_b, "B");
  if (spec.radius < 1) throw Error(ErrorKind::BadParameters, "radius must be >= 1");
  AmalgamArithmetic arith{spec, make_transversal(spec.a, spec.c_in_a), make_transversal(spec.b, spec.c_in_b)};

  std::set<int> c_in_b(spec.c_in_b.begin(), spec.c_in_b.end());
  std::set<int> c_in_a(spec.c_in_a.begin(), spec.c_in_a.end());
  std::vector<std::pair<bool, int>> moves;
  for (int x = 0; x < spec.a.size(); ++x) {
    if (x != spec.a.identity()) moves.emplace_back(true, x);
  }
  for (int x = 0; x < spec.b.size(); ++x) {
    if (!c_in_b.count(x)) moves.emplace_back(false, x);
  }

  NormalForm one;
  one.c = spec.c.identity();
  std::map<NormalForm, int> ball{{one, 0}};
  std::vector<NormalForm> frontier{one};
  for (int r = 1; r <= spec.radius; ++r) {
    std::vector<NormalForm> next;
    for (const NormalForm& g : frontier) {
      for (const auto& [in_a, x] : moves) {
        NormalForm h = arith.times(g, in_a, x);
        if (ball.emplace(h, r).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }

  auto g_label = [](const NormalForm& g) { return "g:" + seq_text(g.factors) + ":c" + std::to_string(g.c); };
  auto a_label = [](const NormalForm& g) { return "A:" + seq_text(coset_key(g, true)); };
  auto b_label = [](const NormalForm& g) { return "B:" + seq_text(coset_key(g, false)); };

  std::set<std::string> vertices;
  std::set<std::string> interior;
  std::map<std::string, std::vector<Factor>> a_keys;
  std::map<std::string, std::vector<Factor>> b_keys;
  std::vector<std::pair<std::string, std::string>> edges;
  Amalgam out;
  for (const auto& [g, len] : ball) {
    const std::string gl = g_label(g);
    const std::string al = a_label(g);
    const std::string bl = b_label(g);
    vertices.insert({gl, al, bl});
    a_keys.emplace(al, coset_key(g, true));
    b_keys.emplace(bl, coset_key(g, false));
    out.group_vertices.push_back(gl);
    edges.emplace_back(gl, al);
    edges.emplace_back(gl, bl);
    if (len <= spec.radius - 1) interior.insert({gl, al, bl});
  }
  for (const auto& [bl, q] : b_keys) {
    std::vector<Factor> p = q;
    if (q.empty() || q.back().in_a) {
      if (!p.empty()) p.pop_back();
      const std::string al = "A:" + seq_text(p);
      if (a_keys.count(al)) edges.emplace_back(al, bl);
    }
  }
  for (const auto& [al, p] : a_keys) {
    if (p.empty() || p.back().in_a) continue;
    std::vector<Factor> q = p;
    q.pop_back();
    const std::string bl = "B:" + seq_text(q);
    if (b_keys.count(bl)) edges.emplace_back(al, bl);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.x = FlagComplex::build(std::vector<std::string>(vertices.begin(), vertices.end()), edges);
  out.interior.assign(interior.begin(), interior.end());
  std::sort(out.group_vertices.begin(), out.group_vertices.end());
  for (const auto& [k, v] : a_keys) out.a_cosets.push_back(k);
  for (const auto& [k, v] : b_keys) out.b_cosets.push_back(k);
  out.order_a = static_cast<std::size_t>(spec.a.size());
  out.index_c_in_a = static_cast<std::size_t>(spec.a.size() / spec.c.size());

  std::vector<std::pair<bool, int>> w_moves;
  for (int x = 0; x < spec.a.size(); ++x) {
    if (!c_in_a.count(x)) w_moves.emplace_back(true, x);
  }
  for (int x = 0; x < spec.b.size(); ++x) {
    if (!c_in_b.count(x)) w_moves.emplace_back(false, x);
  }
  for (int x = 0; x < spec.c.size(); ++x) {
    if (x != spec.c.identity()) w_moves.emplace_back(true, spec.c_in_a[x]);
  }
  auto triangle = [&](const NormalForm& g) {
    return out.x.maximal_index(out.x.set_of(out.x.simplex_from_labels({g_label(g), a_label(g), b_label(g)})));
  };
  std::set<std::pair<std::size_t, std::size_t>> w_edges;
  for (const auto& [g, len] : ball) {
    const auto from = triangle(g);
    for (const auto& [in_a, x] : w_moves) {
      const NormalForm h = arith.times(g, in_a, x);
      if (!ball.count(h)) continue;
      const auto to = triangle(h);
      if (from && to && *from != *to) w_edges.emplace(std::min(*from, *to), std::max(*from, *to));
    }
  }
  out.w = XGraph(out.x, std::vector<std::pair<std::size_t, std::size_t>>(w_edges.begin(), w_edges.end()));
  return out;
}

Blowup gen_blowup(const BlowupSpec& spec) {
  std::set<std::string> used(spec.base_vertices.begin(), spec.base_vertices.end());
  if (used.size() != spec.base_vertices.size()) throw Error(ErrorKind::OverlappingBlobs, "repeated base vertex");
  Blowup out;
  std::vector<std::string> vertices = spec.base_vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, std::vector<std::string>> members;
  for (const std::string& base : spec.base_vertices) {
    out.collapse[base] = base;
    members[base].push_back(base);
  }
  for (const auto& [base, blob] : spec.blobs) {
    if (!members.count(base)) throw Error(ErrorKind::OverlappingBlobs, "blob attached to unknown vertex " + base);
    for (const std::string& v : blob) {
      if (!used.insert(v).second) throw Error(ErrorKind::OverlappingBlobs, v + " appears twice");
      vertices.push_back(v);
      out.collapse[v] = base;
      members[base].push_back(v);
      edges.emplace_back(base, v);
    }
  }
  for (const auto& [a, b] : spec.base_edges) {
    if (!members.count(a) || !members.count(b)) {
      throw Error(ErrorKind::UnknownVertex, "base edge " + a + "-" + b + " uses an undeclared vertex");
    }
    for (const std::string& u : members[a]) {
      for (const std::string& v : members[b]) edges.emplace_back(u, v);
    }
  }
  out.x = FlagComplex::build(vertices, edges);
  std::set<std::pair<std::string, std::string>> base;
  for (const auto& [a, b] : spec.base_edges) base.emplace(std::min(a, b), std::max(a, b));
  for (const auto& [u, v] : out.x.edges()) {
    const std::string& a = out.collapse[out.x.label(u)];
    const std::string& b = out.collapse[out.x.label(v)];
    if (a != b && !base.count({std::min(a, b), std::max(a, b)})) out.collapse_is_morphism = false;
  }
  return out;
}

WRule parse_w_rule(const std::string& name) {
  if (name == "none") return WRule::None;
  if (name == "complete") return WRule::Complete;
  if (name == "shared_codim1_face") return WRule::SharedCodim1Face;
  throw Error(ErrorKind::BadParameters, "unknown W rule " + name);
}

std::string to_string(WRule rule) {
  switch (rule) {
    case WRule::None: return "none";
    case WRule::Complete: return "complete";
    case WRule::SharedCodim1Face: return "shared_codim1_face";
  }
  return "none";
}

XGraph apply_w_rule(const FlagComplex& x, WRule rule) {
  if (rule == WRule::None) return XGraph::empty(x);
  if (rule == WRule::Complete) return XGraph::complete(x);
  const auto& sets = x.maximal_sets();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      const std::size_t k = sets[a].count();
      if (sets[b].count() == k && (sets[a] & sets[b]).count() + 1 == k) edges.emplace_back(a, b);
    }
  }
  return XGraph(x, edges);
}

FlagComplex gen_path(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::BadParameters, "path needs at least one vertex");
  std::vector<std::string> v;
  std::vector<std::pair<std::string, std::string>> e;
  for (std::size_t i = 0; i < n; ++i) v.push_back("p" + padded(i, n));
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(v[i], v[i + 1]);
  return FlagComplex::build(v, e);
}

FlagComplex gen_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::BadParameters, "cycle needs at least three vertices");
  std::vector<std::string> v;
  std::vector<std::pair<std::string, std::string>> e;
  for (std::size_t i = 0; i < n; ++i) v.push_back("c" + padded(i, n));
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(v[i], v[(i + 1) % n]);
  return FlagComplex::build(v, e);
}

FlagComplex gen_discrete(std::size_t n, const std::string& prefix) {
  if (n < 1) throw Error(ErrorKind::BadParameters, "discrete complex needs at least one vertex");
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i + 1));
  return FlagComplex::build(v, {});
}

FlagComplex gen_octahedron(std::size_t k) {
  if (k < 1) throw Error(ErrorKind::BadParameters, "octahedron needs k >= 1");
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= k; ++i) {
    v.push_back("x" + std::to_string(i));
    v.push_back("y" + std::to_string(i));
  }
  std::vector<std::pair<std::string, std::string>> e;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (i / 2 != j / 2) e.emplace_back(v[i], v[j]);
    }
  }
  return FlagComplex::build(v, e);
}

FlagComplex gen_random_flag(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1 || !(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::BadParameters, "random flag needs n >= 1 and p in [0,1]");
  std::mt19937_64 engine(seed);
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("r" + padded(i, n));
  std::vector<std::pair<std::string, std::string>> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      if (u < p) e.emplace_back(v[i], v[j]);
    }
  }
  return FlagComplex::build(v, e);
}

}  // namespace chhs
