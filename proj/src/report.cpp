#include "chhs/report.hpp"

#include <sstream>

#include "chhs/relations.hpp"

namespace chhs {

Json report_header(const std::string& command) {
  Json h;
  h["command"] = command;
  h["format_version"] = 1;
  Json c;
  c["delta"] = "four-point condition over all quadruples; delta is half the largest gap between the two largest pair sums";
  c["colevel"] = "length of the longest strictly nested chain of classes from the class up to the top class";
  c["join"] = "the join with an empty simplex is the identity";
  c["coordinate_distance"] = "diameter in C of the union of the two coordinate sets; inf when either is empty";
  c["projection"] = "slack-1 closest-point set in Y, union over the reachable points of a set";
  c["threshold_grid"] = "condition 3 thresholds scanned on half-integers: the ceiling of delta2 and d+1/2 for finite class diameters d";
  c["rationals"] = "p/q strings, inf for infinity";
  c["large_links"] = "greedy list of maximal far domains; lambda is an upper bound for the optimal constant";
  c["distance_formula"] = "C minimized first, then K, over unordered pairs of W-vertices";
  h["conventions"] = c;
  return h;
}

Json dist_json(Dist d) {
  if (d == kInfDist) return "inf";
  return d;
}

Json rational_json(const Rational& r) { return r.to_string(); }

Json set_json(const FlagComplex& x, const VertexSet& s) { return x.label_list(s); }

Json class_json(const Instance& inst, std::size_t cls) {
  Json j;
  j["index"] = cls;
  j["representative"] = inst.complex().key(inst.index().representative(cls));
  return j;
}

namespace {

Json pair_json(const FlagComplex& x, const std::optional<std::pair<Vertex, Vertex>>& p) {
  if (!p) return nullptr;
  return Json::array({x.label(p->first), x.label(p->second)});
}

char relation_char(Relation r) {
  switch (r) {
    case Relation::Equal: return '=';
    case Relation::NestedIn: return '<';
    case Relation::Contains: return '>';
    case Relation::Orthogonal: return 'o';
    case Relation::Transverse: return 't';
  }
  return '?';
}

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    if (j.empty()) out << path << ": {}\n";
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array()) {
    if (j.empty()) out << path << ": []\n";
    bool scalars = true;
    for (const Json& v : j) scalars = scalars && !v.is_structured();
    if (scalars && !j.empty()) {
      out << path << ": ";
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? " " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      out << "\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

Json inspect_json(const Instance& inst) {
  const FlagComplex& x = inst.complex();
  const IndexSet& index = inst.index();
  Json j;
  j["vertex_count"] = x.vertex_count();
  j["edge_count"] = x.edges().size();
  j["dimension"] = index.dimension();
  j["complexity"] = index.complexity();
  Json maximal = Json::array();
  for (const VertexSet& s : x.maximal_sets()) maximal.push_back(x.key(s));
  j["maximal_simplices"] = maximal;
  j["w_edge_count"] = inst.w().edges().size();
  std::size_t w_only = 0;
  for (const auto& e : inst.augmented().edges) w_only += std::get<2>(e) == EdgeOrigin::W;
  j["augmented_edge_count"] = inst.augmented().edges.size();
  j["augmented_w_only_edges"] = w_only;
  j["simplex_count"] = index.census().simplex_count;
  Json classes = Json::array();
  for (std::size_t c = 0; c < index.size(); ++c) {
    Json k = class_json(inst, c);
    k["link"] = set_json(x, index.link(c));
    k["saturation"] = set_json(x, index.saturation(c));
    k["members"] = index.at(c).members;
    k["colevel"] = index.colevel(c);
    classes.push_back(k);
  }
  j["classes"] = classes;
  const RelationTable table = relation_table(index);
  Json rows = Json::array();
  for (std::size_t a = 0; a < table.n; ++a) {
    std::string row;
    for (std::size_t b = 0; b < table.n; ++b) row += relation_char(table.at(a, b));
    rows.push_back(row);
  }
  j["relations"] = rows;
  j["relation_legend"] = "= equal, < nested in, > contains, o orthogonal, t transverse";
  return j;
}

Json verification_json(const Instance& inst, const VerificationReport& r) {
  const FlagComplex& x = inst.complex();
  Json j;
  j["verdict"] = r.pass ? "PASS" : "FAIL";
  j["complexity"] = r.complexity_n;
  j["dimension"] = r.dimension;
  j["delta_star"] = r.delta_star ? rational_json(*r.delta_star) : Json("FAIL");
  Json table = Json::array();
  for (const ClassMetrics& m : r.classes) {
    Json row = class_json(inst, m.cls);
    row["delta_c"] = rational_json(m.delta_c);
    row["lambda"] = rational_json(m.lambda);
    row["diameter_c"] = dist_json(m.diameter_c);
    row["y_connected"] = m.y_connected;
    row["delta_y"] = m.delta_y ? rational_json(*m.delta_y) : Json(nullptr);
    table.push_back(row);
  }
  j["classes"] = table;

  Json c2;
  c2["holds"] = r.condition2;
  c2["delta2"] = rational_json(r.delta2);
  if (r.condition2_class) {
    c2["witness"] = {{"class", class_json(inst, *r.condition2_class)}, {"pair", pair_json(x, r.condition2_pair)}};
  }
  j["condition2"] = c2;

  Json c3;
  c3["holds"] = r.delta_star.has_value() || r.delta3.has_value();
  c3["threshold"] = rational_json(r.condition3.threshold);
  c3["nonvacuous_pairs"] = r.condition3.nonvacuous_pairs;
  c3["monotone_recheck"] = r.monotone_recheck;
  if (r.delta3) c3["delta3"] = rational_json(*r.delta3);
  if (r.condition3.witness) {
    const Condition3Witness& w = *r.condition3.witness;
    Json gammas = Json::array();
    for (std::size_t g : w.gammas) gammas.push_back(class_json(inst, g));
    c3["witness"] = {{"delta", class_json(inst, w.delta_cls)}, {"sigma", class_json(inst, w.sigma_cls)}, {"gammas", gammas}};
  }
  Json certs = Json::array();
  for (const Condition3Certificate& c : r.certificates) {
    certs.push_back({{"delta", class_json(inst, c.delta_cls)}, {"sigma", class_json(inst, c.sigma_cls)}, {"pi", set_json(x, c.pi)}});
  }
  c3["certificates"] = certs;
  j["condition3"] = c3;

  Json c4;
  c4["holds"] = r.condition4.holds;
  c4["pairs_checked"] = r.condition4.pairs_checked;
  if (r.condition4.witness) {
    const Condition4Witness& w = *r.condition4.witness;
    c4["witness"] = {{"simplex", set_json(x, w.simplex)}, {"v", x.label(w.v)}, {"w", x.label(w.w)}};
  }
  j["condition4"] = c4;

  Json lemmas;
  lemmas["ran"] = r.lemmas.ran;
  lemmas["c0_equals_c"] = r.lemmas.c0_equals_c;
  lemmas["sc_nesting"] = r.lemmas.sc_nesting;
  lemmas["y_connected"] = r.lemmas.y_connected;
  lemmas["detail"] = r.lemmas.detail;
  j["lemma_checks"] = lemmas;
  j["super_bgi"] = r.super_bgi ? dist_json(*r.super_bgi) : Json(nullptr);
  return j;
}

Json thm_a_json(const Instance& inst, const ThmAReport& r) {
  const FlagComplex& x = inst.complex();
  Json j;
  j["verdict"] = r.pass() ? "PASS" : "FAIL";
  Json a;
  a["holds"] = r.condition_a;
  Json rows = Json::array();
  for (const LinkHyperbolicity& h : r.links) {
    Json row = class_json(inst, h.cls);
    row["delta"] = rational_json(h.delta);
    row["delta_witness"] = pair_json(x, h.delta_witness);
    row["lambda"] = rational_json(h.lambda);
    row["lambda_witness"] = pair_json(x, h.lambda_witness);
    rows.push_back(row);
  }
  a["links"] = rows;
  j["condition_a"] = a;

  auto decomposition = [&](const JoinDecomposition& d) {
    Json k;
    k["delta"] = class_json(inst, d.delta_cls);
    k["sigma"] = class_json(inst, d.sigma_cls);
    k["holds"] = d.holds;
    k["intersection"] = set_json(x, inst.index().link(d.delta_cls) & inst.index().link(d.sigma_cls));
    if (d.holds) {
      k["pi"] = set_json(x, d.pi);
      k["pi_prime"] = set_json(x, d.pi_prime);
    }
    return k;
  };
  Json b;
  b["holds"] = r.condition_b;
  b["pairs_with_intersection"] = r.pairs_checked;
  if (r.b_failure) b["witness"] = decomposition(*r.b_failure);
  Json ex = Json::array();
  for (const JoinDecomposition& d : r.b_examples) ex.push_back(decomposition(d));
  b["decompositions"] = ex;
  j["condition_b"] = b;

  Json c;
  c["holds"] = r.condition_c;
  Json exempt = Json::array();
  for (std::size_t e : r.exempt_classes) exempt.push_back(class_json(inst, e));
  c["exempt"] = exempt;
  if (r.c_failure) c["witness"] = class_json(inst, *r.c_failure);
  j["condition_c"] = c;
  return j;
}

Json action_json(const Instance& inst, const ActionReport& r) {
  const FlagComplex& x = inst.complex();
  Json j;
  j["verdict"] = r.pass ? "PASS" : "FAIL";
  j["vertex_orbits"] = r.vertex_orbits;
  j["maximal_simplex_orbits"] = r.maximal_orbits;
  j["class_orbits"] = r.class_orbits;
  Json gens = Json::array();
  for (const GeneratorCheck& g : r.generators) {
    Json k;
    k["simplicial"] = g.simplicial;
    k["simplicial_witness"] = pair_json(x, g.simplicial_witness);
    k["preserves_w"] = g.preserves_w;
    if (g.w_witness) {
      k["w_witness"] = Json::array({x.key(x.maximal_sets()[g.w_witness->first]), x.key(x.maximal_sets()[g.w_witness->second])});
    }
    k["equivariant"] = g.equivariant;
    if (g.equivariance_witness) {
      k["equivariance_witness"] = {{"class", class_json(inst, g.equivariance_witness->first)},
                                   {"w_vertex", x.key(x.maximal_sets()[g.equivariance_witness->second])}};
    }
    gens.push_back(k);
  }
  j["generators"] = gens;
  return j;
}

Json projections_json(const ProjectionSystem& ps) {
  const Instance& inst = ps.instance();
  const FlagComplex& x = inst.complex();
  const IndexSet& index = inst.index();
  Json j;
  Json pi = Json::array();
  for (std::size_t c = 0; c < ps.class_count(); ++c) {
    Json row = class_json(inst, c);
    Json values = Json::object();
    for (std::size_t w = 0; w < ps.w_count(); ++w) values[x.key(x.maximal_sets()[w])] = set_json(x, ps.pi(c, w));
    row["values"] = values;
    pi.push_back(row);
  }
  j["pi"] = pi;
  Json rho = Json::array();
  for (std::size_t s = 0; s < ps.class_count(); ++s) {
    for (std::size_t t = 0; t < ps.class_count(); ++t) {
      const Relation r = index.relation(s, t);
      if (r == Relation::Equal || r == Relation::Orthogonal) continue;
      Json k;
      k["source"] = class_json(inst, s);
      k["target"] = class_json(inst, t);
      k["relation"] = std::string(to_string(r));
      const RhoValue v = ps.rho(s, t);
      if (v.is_map) {
        Json m = Json::object();
        for (const auto& [p, img] : v.map) m[x.label(p)] = img ? set_json(x, *img) : Json("empty");
        k["map"] = m;
      } else {
        k["set"] = set_json(x, v.set);
      }
      rho.push_back(k);
    }
  }
  j["rho"] = rho;
  return j;
}

Json constants_json(const HHSConstants& c) {
  Json j;
  j["xi"] = dist_json(c.xi);
  j["kappa0"] = dist_json(c.kappa0);
  j["kappa_rho"] = dist_json(c.kappa_rho);
  j["E"] = dist_json(c.bgi.e);
  j["C_super"] = dist_json(c.bgi.c_super);
  j["C_strong"] = dist_json(c.bgi.c_strong);
  j["bgi_vacuous"] = c.bgi.vacuous;
  j["bgi_nested_pairs"] = c.bgi.nested_pairs;
  j["E_large_links"] = dist_json(c.e_ll);
  j["lambda_LL"] = rational_json(c.lambda_ll);
  j["lambda_LL_is_upper_bound"] = true;
  j["alpha"] = dist_json(c.alpha);
  j["alpha_exhaustive"] = c.alpha_exhaustive;
  j["alpha_tuples"] = c.alpha_tuples;
  Json theta = Json::array();
  for (const ThetaEntry& t : c.theta_u) {
    theta.push_back({{"kappa", dist_json(t.kappa)}, {"bound", dist_json(t.bound)}, {"pairs", t.pairs}});
  }
  j["theta_u"] = theta;
  j["theta_realization"] = dist_json(c.theta_real);
  j["realized_tuples"] = c.realized_tuples;
  return j;
}

Json fits_json(const std::vector<DistanceFormulaFit>& fits) {
  Json out = Json::array();
  for (const DistanceFormulaFit& f : fits) {
    out.push_back({{"s", dist_json(f.s)},
                   {"K", rational_json(f.k)},
                   {"C", rational_json(f.c)},
                   {"pairs", f.pairs},
                   {"violations", f.violations}});
  }
  return out;
}

Json realization_json(const ProjectionSystem& ps, const Realization& r) {
  const FlagComplex& x = ps.instance().complex();
  Json j;
  j["vertex"] = x.key(x.maximal_sets()[r.vertex]);
  j["theta"] = dist_json(r.theta);
  j["tuple_consistency"] = dist_json(r.kappa);
  return j;
}

std::string render(const Json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

}  // namespace chhs
