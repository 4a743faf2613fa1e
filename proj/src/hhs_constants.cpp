#include "chhs/hhs_constants.hpp"

#include <algorithm>
#include <random>

#include "chhs/errors.hpp"

namespace chhs {
namespace {

constexpr std::size_t kFamilyLimit = 4096;

Dist add(Dist a, Dist b) {
  if (a == kInfDist || b == kInfDist) return kInfDist;
  const std::int64_t s = static_cast<std::int64_t>(a) + b;
  return s >= kInfDist ? kInfDist : static_cast<Dist>(s);
}

Rational as_rational(Dist d) { return d == kInfDist ? Rational::infinity() : Rational(d); }

/// diam in C(cls) of a possibly empty union; an empty union has diameter 0.
Dist union_diameter(const ProjectionSystem& ps, std::size_t cls, const VertexSet& a, const VertexSet& b) {
  const VertexSet u = a | b;
  if (u.empty()) return 0;
  return ps.c_metric(cls).set_diameter(u);
}

template <typename Coord>
Dist consistency_of(const ProjectionSystem& ps, const Coord& coord) {
  const IndexSet& index = ps.instance().index();
  const std::size_t n = index.size();
  Dist worst = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      const Relation r = index.relation(u, v);
      Dist term = 0;
      if (r == Relation::Transverse && u < v) {
        term = std::min(ps.d(u, coord(u), ps.rho_set(v, u)), ps.d(v, coord(v), ps.rho_set(u, v)));
      } else if (r == Relation::NestedIn) {
        term = std::min(ps.d(v, coord(v), ps.rho_set(u, v)), ps.d(u, coord(u), ps.rho_map_image(v, u, coord(v))));
      }
      worst = std::max(worst, term);
    }
  }
  return worst;
}

}  // namespace

Dist thresholded(Dist d, Dist s) { return d >= s ? d : 0; }

Tuple coordinate_tuple(const ProjectionSystem& ps, std::size_t w) {
  Tuple t;
  for (std::size_t c = 0; c < ps.class_count(); ++c) t.coords.push_back(ps.pi(c, w));
  return t;
}

Dist tuple_consistency(const ProjectionSystem& ps, const Tuple& t) {
  Dist worst = consistency_of(ps, [&](std::size_t c) -> const VertexSet& { return t.coords[c]; });
  for (std::size_t c = 0; c < t.coords.size(); ++c) worst = std::max(worst, ps.diam(c, t.coords[c]));
  return worst;
}

Realization realize_tuple(const ProjectionSystem& ps, const Tuple& t) {
  Realization best;
  best.theta = kInfDist;
  bool first = true;
  for (std::size_t x = 0; x < ps.w_count(); ++x) {
    Dist worst = 0;
    for (std::size_t c = 0; c < ps.class_count() && worst <= best.theta; ++c) {
      worst = std::max(worst, ps.d(c, ps.pi(c, x), t.coords[c]));
    }
    if (first || worst < best.theta) {
      best.vertex = x;
      best.theta = worst;
      first = false;
    }
  }
  best.kappa = tuple_consistency(ps, t);
  return best;
}

Dist consistency_constant(const ProjectionSystem& ps) {
  const long long count = static_cast<long long>(ps.w_count());
  Dist worst = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(max : worst)
  for (long long wi = 0; wi < count; ++wi) {
    const std::size_t w = static_cast<std::size_t>(wi);
    worst = std::max(worst, consistency_of(ps, [&](std::size_t c) -> const VertexSet& { return ps.pi(c, w); }));
  }
  return worst;
}

Dist projection_diameter_bound(const ProjectionSystem& ps) {
  const IndexSet& index = ps.instance().index();
  const std::size_t n = ps.class_count();
  Dist worst = 0;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t w = 0; w < ps.w_count(); ++w) worst = std::max(worst, ps.diam(c, ps.pi(c, w)));
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      const Relation r = index.relation(s, t);
      if (r == Relation::Transverse || r == Relation::NestedIn) {
        const VertexSet& set = ps.rho_set(s, t);
        if (!set.empty()) worst = std::max(worst, ps.diam(t, set));
      } else if (r == Relation::Contains) {
        for (Vertex p : ps.c_metric(s).vertices()) {
          if (auto value = ps.rho_map_at(s, t, p); value && !value->empty()) {
            worst = std::max(worst, ps.diam(t, *value));
          }
        }
      }
    }
  }
  return worst;
}

Dist rho_coherence(const ProjectionSystem& ps) {
  const IndexSet& index = ps.instance().index();
  const std::size_t n = ps.class_count();
  const long long count = static_cast<long long>(n);
  Dist worst = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(max : worst)
  for (long long ui = 0; ui < count; ++ui) {
    const std::size_t u = static_cast<std::size_t>(ui);
    for (std::size_t v = 0; v < n; ++v) {
      if (index.relation(u, v) != Relation::NestedIn) continue;
      for (std::size_t w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        const Relation vw = index.relation(v, w);
        const bool applies = vw == Relation::NestedIn || (vw == Relation::Transverse && !index.orthogonal(w, u));
        if (!applies) continue;
        const Relation uw = index.relation(u, w);
        if (uw != Relation::NestedIn && uw != Relation::Transverse) continue;
        worst = std::max(worst, ps.d(w, ps.rho_set(u, w), ps.rho_set(v, w)));
      }
    }
  }
  return worst;
}

BgiConstants bgi_constants(const ProjectionSystem& ps) {
  const Instance& inst = ps.instance();
  const IndexSet& index = inst.index();
  const std::size_t n = ps.class_count();
  if (!ps.augmented_metric().connected()) {
    throw Error(ErrorKind::Disconnected, "the augmented graph is disconnected");
  }
  BgiConstants out;
  const long long count = static_cast<long long>(n);
  Dist e = 0;
  Dist c_super = 0;
  Dist c_strong = 0;
  std::size_t pairs = 0;
  std::size_t nested = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(max : e, c_super, c_strong) reduction(+ : pairs, nested)
  for (long long wi = 0; wi < count; ++wi) {
    const std::size_t w = static_cast<std::size_t>(wi);
    const MetricGraph& cw = ps.c_metric(w);
    const std::size_t m = cw.size();
    const auto& verts = cw.vertices();
    const SatAvoidingStats stats = sat_avoiding_stats(ps.augmented_metric(), ps.y_metric(w), cw, index.link(w));
    c_super = std::max(c_super, stats.super);
    c_strong = std::max(c_strong, stats.strong);
    pairs += stats.pairs;
    for (std::size_t v = 0; v < n; ++v) {
      if (!index.strictly_nested(v, w)) continue;
      ++nested;
      const VertexSet& target = ps.rho_set(v, w);
      std::vector<Dist> f(m);
      std::vector<VertexSet> image(m, VertexSet(inst.complex().vertex_count()));
      for (std::size_t i = 0; i < m; ++i) {
        f[i] = target.empty() ? kInfDist : cw.distance_to(verts[i], target);
        if (auto value = ps.rho_map_at(w, v, verts[i])) image[i] = *value;
      }
      std::vector<std::size_t> order(m);
      std::vector<Dist> best(m);
      for (std::size_t src = 0; src < m; ++src) {
        const Dist* row = cw.local_row(src);
        order.clear();
        for (std::size_t i = 0; i < m; ++i) {
          if (row[i] != kInfDist) order.push_back(i);
        }
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return row[a] < row[b]; });
        for (std::size_t i : order) {
          if (i == src) {
            best[i] = f[i];
            continue;
          }
          Dist b = -1;
          cw.local_adjacency()[i].for_each([&](Vertex p) {
            if (row[p] != kInfDist && row[p] + 1 == row[i]) b = std::max(b, std::min(best[p], f[i]));
          });
          best[i] = b;
        }
        for (std::size_t i : order) {
          if (i < src) continue;
          e = std::max(e, std::min(union_diameter(ps, v, image[src], image[i]), best[i]));
        }
      }
    }
  }
  out.e = e;
  out.c_super = c_super;
  out.c_strong = c_strong;
  out.vacuous = pairs == 0;
  out.nested_pairs = nested;
  return out;
}

Rational large_links_lambda(const ProjectionSystem& ps, Dist threshold) {
  const IndexSet& index = ps.instance().index();
  const std::size_t n = ps.class_count();
  const std::size_t nw = ps.w_count();
  std::vector<Rational> per_class(n, Rational(1));
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long wi = 0; wi < count; ++wi) {
    const std::size_t w = static_cast<std::size_t>(wi);
    std::vector<std::size_t> below;
    for (std::size_t t = 0; t < n; ++t) {
      if (index.strictly_nested(t, w)) below.push_back(t);
    }
    Rational lambda(1);
    for (std::size_t x = 0; x < nw && lambda.is_finite(); ++x) {
      for (std::size_t y = x + 1; y < nw && lambda.is_finite(); ++y) {
        const Dist d = ps.dw(w, x, y);
        if (d == kInfDist) continue;
        std::vector<std::size_t> far;
        for (std::size_t t : below) {
          if (ps.dw(t, x, y) >= threshold) far.push_back(t);
        }
        std::size_t m = 0;
        Dist reach = 0;
        for (std::size_t t : far) {
          bool dominated = false;
          for (std::size_t o : far) dominated = dominated || index.strictly_nested(t, o);
          if (dominated) continue;
          ++m;
          const VertexSet& rho = ps.rho_set(t, w);
          reach = std::max(reach, std::max(ps.d(w, ps.pi(w, x), rho), ps.d(w, ps.pi(w, y), rho)));
        }
        const Rational denom(static_cast<std::int64_t>(d) + 1);
        lambda = max(lambda, Rational(static_cast<std::int64_t>(m)) / denom);
        lambda = max(lambda, as_rational(reach) / denom);
      }
    }
    per_class[w] = lambda;
  }
  Rational out(1);
  for (const Rational& r : per_class) out = max(out, r);
  return out;
}

Dist uniqueness_bound(const ProjectionSystem& ps, Dist kappa, std::size_t* pairs) {
  const std::size_t nw = ps.w_count();
  Dist bound = 0;
  std::size_t counted = 0;
  for (std::size_t x = 0; x < nw; ++x) {
    for (std::size_t y = x + 1; y < nw; ++y) {
      bool close = true;
      for (std::size_t c = 0; c < ps.class_count() && close; ++c) close = ps.dw(c, x, y) <= kappa;
      if (!close) continue;
      ++counted;
      bound = std::max(bound, ps.w_metric().dist(static_cast<Vertex>(x), static_cast<Vertex>(y)));
    }
  }
  if (pairs) *pairs = counted;
  return bound;
}

PartialRealization partial_realization(const ProjectionSystem& ps, std::size_t family_cap, std::size_t tuple_cap) {
  const Instance& inst = ps.instance();
  const FlagComplex& x = inst.complex();
  const IndexSet& index = inst.index();
  const std::size_t n = ps.class_count();
  PartialRealization out;

  std::vector<std::vector<std::size_t>> families;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    for (std::size_t c = from; c < n; ++c) {
      if (families.size() >= kFamilyLimit) {
        out.exhaustive = false;
        return;
      }
      bool ok = true;
      for (std::size_t o : current) ok = ok && index.orthogonal(o, c);
      if (!ok) continue;
      current.push_back(c);
      families.push_back(current);
      if (current.size() < family_cap) extend(c + 1);
      current.pop_back();
    }
  };
  extend(0);

  // deviation of a realization point from the family's points and rho targets
  auto deviation = [&](const std::vector<std::size_t>& fam, const std::vector<Vertex>& points) {
    VertexSet p = x.none();
    for (Vertex v : points) p.insert(v);
    std::size_t w = 0;
    for (std::size_t m : x.maximal_containing(points.front())) {
      if (p.is_subset_of(x.maximal_sets()[m])) {
        w = m;
        break;
      }
    }
    Dist worst = 0;
    for (std::size_t j = 0; j < fam.size(); ++j) {
      const std::size_t v = fam[j];
      worst = std::max(worst, ps.d(v, ps.pi(v, w), VertexSet::of(x.vertex_count(), {points[j]})));
      for (std::size_t t = 0; t < n; ++t) {
        const Relation r = index.relation(v, t);
        if (r == Relation::NestedIn || r == Relation::Transverse) {
          worst = std::max(worst, ps.d(t, ps.pi(t, w), ps.rho_set(v, t)));
        }
      }
    }
    return worst;
  };

  std::vector<Dist> per_family(families.size(), 0);
  std::vector<std::size_t> per_count(families.size(), 0);
  std::vector<char> truncated(families.size(), 0);
  const long long count = static_cast<long long>(families.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long fi = 0; fi < count; ++fi) {
    const auto& fam = families[static_cast<std::size_t>(fi)];
    std::vector<std::vector<Vertex>> choices;
    for (std::size_t c : fam) choices.push_back(index.link(c).to_vector());
    std::vector<std::size_t> pos(fam.size(), 0);
    std::vector<Vertex> points(fam.size());
    std::size_t done = 0;
    Dist worst = 0;
    while (true) {
      if (done == tuple_cap) {
        truncated[fi] = 1;
        break;
      }
      for (std::size_t j = 0; j < fam.size(); ++j) points[j] = choices[j][pos[j]];
      worst = std::max(worst, deviation(fam, points));
      ++done;
      std::size_t j = 0;
      while (j < fam.size() && ++pos[j] == choices[j].size()) pos[j++] = 0;
      if (j == fam.size()) break;
    }
    per_family[fi] = worst;
    per_count[fi] = done;
  }
  for (std::size_t i = 0; i < families.size(); ++i) {
    out.alpha = std::max(out.alpha, per_family[i]);
    out.tuples += per_count[i];
    if (truncated[i]) out.exhaustive = false;
  }
  return out;
}

HHSConstants hhs_constants(const ProjectionSystem& ps, const ConstantsOptions& options) {
  HHSConstants out;
  out.xi = projection_diameter_bound(ps);
  out.kappa0 = consistency_constant(ps);
  out.kappa_rho = rho_coherence(ps);
  if (ps.augmented_metric().connected()) {
    out.bgi = bgi_constants(ps);
  } else {
    out.bgi.e = out.bgi.c_super = out.bgi.c_strong = kInfDist;
    out.bgi.vacuous = false;
  }
  out.e_ll = std::max({out.bgi.e, out.xi, out.kappa0});
  out.lambda_ll = large_links_lambda(ps, out.e_ll);
  const PartialRealization pr = partial_realization(ps, options.alpha_family_cap, options.alpha_tuple_cap);
  out.alpha = pr.alpha;
  out.alpha_exhaustive = pr.exhaustive;
  out.alpha_tuples = pr.tuples;
  for (Dist kappa : options.kappa_grid) {
    ThetaEntry entry;
    entry.kappa = kappa;
    entry.bound = uniqueness_bound(ps, kappa, &entry.pairs);
    out.theta_u.push_back(entry);
  }

  const std::size_t nw = ps.w_count();
  std::vector<Tuple> tuples;
  for (std::size_t w = 0; w < nw; ++w) tuples.push_back(coordinate_tuple(ps, w));
  std::mt19937_64 engine(options.seed);
  for (std::size_t i = 0; i < options.synthetic_tuples && nw > 0; ++i) {
    const std::size_t a = engine() % nw;
    const std::size_t b = engine() % nw;
    Tuple t = coordinate_tuple(ps, a);
    for (std::size_t c = 0; c < ps.class_count(); ++c) {
      if (engine() >> 63) t.coords[c] = ps.pi(c, b);
    }
    tuples.push_back(std::move(t));
  }
  std::vector<Dist> theta(tuples.size(), 0);
  const long long count = static_cast<long long>(tuples.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) theta[i] = realize_tuple(ps, tuples[i]).theta;
  for (Dist t : theta) out.theta_real = std::max(out.theta_real, t);
  out.realized_tuples = tuples.size();
  return out;
}

PairDistances pair_distances(const ProjectionSystem& ps) {
  PairDistances pd;
  const std::size_t nw = ps.w_count();
  for (std::size_t x = 0; x < nw; ++x) {
    for (std::size_t y = x + 1; y < nw; ++y) {
      pd.pairs.emplace_back(x, y);
      pd.w.push_back(ps.w_metric().dist(static_cast<Vertex>(x), static_cast<Vertex>(y)));
    }
  }
  pd.by_class.assign(ps.class_count(), std::vector<Dist>(pd.pairs.size()));
  const long long count = static_cast<long long>(ps.class_count());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long ci = 0; ci < count; ++ci) {
    const std::size_t c = static_cast<std::size_t>(ci);
    for (std::size_t i = 0; i < pd.pairs.size(); ++i) pd.by_class[c][i] = ps.dw(c, pd.pairs[i].first, pd.pairs[i].second);
  }
  return pd;
}

namespace {

std::vector<Dist> thresholded_sums(const PairDistances& pd, Dist s, const Perturbation* h) {
  std::vector<Dist> sums(pd.pairs.size(), 0);
  for (std::size_t c = 0; c < pd.by_class.size(); ++c) {
    for (std::size_t i = 0; i < pd.pairs.size(); ++i) {
      const Dist d = h ? (*h)(c, i, pd.by_class[c][i]) : pd.by_class[c][i];
      sums[i] = add(sums[i], thresholded(d, s));
    }
  }
  return sums;
}

std::vector<DistanceFormulaFit> fit_all(const PairDistances& pd, const std::vector<Dist>& thresholds,
                                        const Perturbation* h) {
  for (Dist d : pd.w) {
    if (d == kInfDist) throw Error(ErrorKind::Disconnected, "W is disconnected");
  }
  std::vector<DistanceFormulaFit> out;
  for (Dist s : thresholds) {
    const std::vector<Dist> sums = thresholded_sums(pd, s, h);
    DistanceFormulaFit fit;
    fit.s = s;
    fit.pairs = pd.pairs.size();
    Dist c = 0;
    for (std::size_t i = 0; i < sums.size(); ++i) {
      if (sums[i] == 0) c = std::max(c, pd.w[i]);
    }
    fit.c = Rational(c);
    Rational k(1);
    for (std::size_t i = 0; i < sums.size() && k.is_finite(); ++i) {
      if (sums[i] == 0) continue;
      if (sums[i] == kInfDist) {
        k = Rational::infinity();
        break;
      }
      const Rational sum(sums[i]);
      k = max(k, Rational(pd.w[i] - c) / sum);
      if (pd.w[i] + c == 0) {
        k = Rational::infinity();
      } else {
        k = max(k, sum / Rational(static_cast<std::int64_t>(pd.w[i]) + c));
      }
    }
    fit.k = k;
    fit.violations = fit_violations(pd, s, fit.k, fit.c, h);
    out.push_back(fit);
  }
  return out;
}

}  // namespace

std::size_t fit_violations(const PairDistances& pd, Dist s, const Rational& k, const Rational& c,
                           const Perturbation* h) {
  const std::vector<Dist> sums = thresholded_sums(pd, s, h);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    const Rational d(pd.w[i]);
    if (sums[i] == kInfDist) {
      bad += k.is_finite();
      continue;
    }
    const Rational sum(sums[i]);
    const Rational upper = k.is_infinite() ? (sums[i] > 0 ? Rational::infinity() : c) : k * sum + c;
    const Rational lower = (k.is_infinite() ? Rational(0) : sum / k) - c;
    if (d > upper || lower > d) ++bad;
  }
  return bad;
}

std::vector<DistanceFormulaFit> distance_formula_fit(const PairDistances& pd, const std::vector<Dist>& thresholds) {
  return fit_all(pd, thresholds, nullptr);
}

std::vector<DistanceFormulaFit> distance_formula_fit(const PairDistances& pd, const std::vector<Dist>& thresholds,
                                                     const Perturbation& h, const Rational& lambda) {
  if (lambda.is_infinite() || lambda < Rational(1)) {
    throw Error(ErrorKind::InvalidPerturbation, "lambda must be a finite value >= 1");
  }
  for (std::size_t c = 0; c < pd.by_class.size(); ++c) {
    for (std::size_t i = 0; i < pd.pairs.size(); ++i) {
      const Dist d = pd.by_class[c][i];
      const Dist v = h(c, i, d);
      if ((d == kInfDist) != (v == kInfDist)) {
        throw Error(ErrorKind::InvalidPerturbation, "perturbed value changes finiteness at class " + std::to_string(c));
      }
      if (d == kInfDist) continue;
      const Rational rd(d);
      const Rational rv(v);
      if (rv < rd / lambda - lambda || rv > lambda * rd + lambda) {
        throw Error(ErrorKind::InvalidPerturbation,
                    "value " + std::to_string(v) + " outside the band of " + std::to_string(d) + " at class " +
                        std::to_string(c));
      }
    }
  }
  return fit_all(pd, thresholds, &h);
}

}  // namespace chhs
