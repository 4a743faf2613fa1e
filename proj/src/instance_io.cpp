#include "chhs/instance_io.hpp"

#include <algorithm>

#include "chhs/errors.hpp"
#include "json.hpp"

namespace chhs {
namespace {

using nlohmann::json;

const json& require_array(const json& doc, const char* field) {
  const json& v = doc.at(field);
  if (!v.is_array()) throw Error(ErrorKind::ParseError, std::string("\"") + field + "\" must be a list");
  return v;
}

std::string require_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw Error(ErrorKind::ParseError, where + " must be a string");
  return v.get<std::string>();
}

std::pair<std::string, std::string> string_pair(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw Error(ErrorKind::ParseError, where + " must be a 2-element list");
  return {require_string(v[0], where), require_string(v[1], where)};
}

std::size_t maximal_by_key(const FlagComplex& x, const std::string& key) {
  Simplex s;
  try {
    s = x.parse_key(key);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnknownVertex) throw;
    throw Error(ErrorKind::NotMaximalSimplex, "\"" + key + "\" is not a maximal simplex");
  }
  const auto idx = x.maximal_index(x.set_of(s));
  if (!idx) throw Error(ErrorKind::NotMaximalSimplex, "\"" + key + "\" is not a maximal simplex");
  return *idx;
}

Vertex vertex_by_label(const FlagComplex& x, const std::string& label) {
  const auto v = x.find(label);
  if (!v) throw Error(ErrorKind::UnknownVertex, "\"" + label + "\" is not a declared vertex");
  return *v;
}

VertexSet simplex_by_key(const FlagComplex& x, const std::string& key) { return x.set_of(x.parse_key(key)); }

json edge_list(const FlagComplex& x, std::vector<std::pair<Vertex, Vertex>> edges) {
  for (auto& [a, b] : edges) {
    if (b < a) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  json out = json::array();
  for (const auto& [a, b] : edges) out.push_back(json::array({x.label(a), x.label(b)}));
  return out;
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "document must be an object");
  if (!doc.contains("vertices")) throw Error(ErrorKind::ParseError, "missing \"vertices\"");

  std::vector<std::string> vertices;
  for (const json& v : require_array(doc, "vertices")) {
    std::string label = require_string(v, "vertex label");
    if (label.empty() || label.find('|') != std::string::npos) {
      throw Error(ErrorKind::ParseError, "vertex label \"" + label + "\" is empty or contains '|'");
    }
    vertices.push_back(std::move(label));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (doc.contains("edges")) {
    for (const json& e : require_array(doc, "edges")) edges.push_back(string_pair(e, "edge"));
  }

  ParsedInstance out;
  out.x = FlagComplex::build(vertices, edges);
  const FlagComplex& x = out.x;

  std::vector<std::pair<std::size_t, std::size_t>> w_edges;
  if (doc.contains("w_edges")) {
    for (const json& e : require_array(doc, "w_edges")) {
      const auto [a, b] = string_pair(e, "w_edge");
      w_edges.emplace_back(maximal_by_key(x, a), maximal_by_key(x, b));
    }
  }
  out.w = XGraph(x, w_edges);

  if (doc.contains("action")) {
    std::vector<Permutation> action;
    for (const json& m : require_array(doc, "action")) {
      if (!m.is_object()) throw Error(ErrorKind::ParseError, "each action entry must be a label map");
      Permutation p(x.vertex_count());
      for (Vertex v = 0; v < x.vertex_count(); ++v) p[v] = v;
      for (const auto& [from, to] : m.items()) {
        p[vertex_by_label(x, from)] = vertex_by_label(x, require_string(to, "action image"));
      }
      validate_permutation(p, x.vertex_count());
      action.push_back(std::move(p));
    }
    out.action = std::move(action);
  }

  if (doc.contains("link_edges")) {
    const json& le = doc.at("link_edges");
    if (!le.is_object()) throw Error(ErrorKind::ParseError, "\"link_edges\" must be a map");
    std::vector<LinkEdgeEntry> entries;
    for (const auto& [key, list] : le.items()) {
      LinkEdgeEntry entry;
      entry.simplex = simplex_by_key(x, key);
      if (!list.is_array()) throw Error(ErrorKind::ParseError, "link edge list must be a list");
      for (const json& e : list) {
        const auto [a, b] = string_pair(e, "link edge");
        entry.edges.emplace_back(vertex_by_label(x, a), vertex_by_label(x, b));
      }
      entries.push_back(std::move(entry));
    }
    out.link_edges = std::move(entries);
  }

  if (doc.contains("tuple")) {
    const json& t = doc.at("tuple");
    if (!t.is_object()) throw Error(ErrorKind::ParseError, "\"tuple\" must be a map");
    std::vector<std::pair<VertexSet, VertexSet>> tuple;
    for (const auto& [key, list] : t.items()) {
      VertexSet coords = x.none();
      if (!list.is_array()) throw Error(ErrorKind::ParseError, "tuple coordinates must be a list");
      for (const json& v : list) coords.insert(vertex_by_label(x, require_string(v, "tuple vertex")));
      tuple.emplace_back(simplex_by_key(x, key), coords);
    }
    out.tuple = std::move(tuple);
  }
  return out;
}

LinkEdgeMap resolve_link_edges(const Instance& inst, const std::vector<LinkEdgeEntry>& entries) {
  LinkEdgeMap out;
  for (const LinkEdgeEntry& e : entries) {
    if (inst.complex().is_maximal(e.simplex)) {
      throw Error(ErrorKind::MaximalSimplex, "{" + inst.complex().key(e.simplex) + "} is maximal");
    }
    auto& list = out[inst.class_of(e.simplex)];
    for (auto [a, b] : e.edges) {
      if (b < a) std::swap(a, b);
      if (std::find(list.begin(), list.end(), std::make_pair(a, b)) == list.end()) list.emplace_back(a, b);
    }
  }
  for (auto& [c, list] : out) std::sort(list.begin(), list.end());
  return out;
}

std::string emit_instance(const FlagComplex& x, const XGraph& w, const std::optional<std::vector<Permutation>>& action,
                          const std::optional<std::vector<LinkEdgeEntry>>& link_edges) {
  json doc;
  doc["vertices"] = x.labels();
  doc["edges"] = edge_list(x, x.edges());
  json wl = json::array();
  std::vector<std::pair<std::string, std::string>> keys;
  for (const auto& [a, b] : w.edges()) {
    std::string ka = x.key(x.maximal_sets()[a]);
    std::string kb = x.key(x.maximal_sets()[b]);
    if (kb < ka) std::swap(ka, kb);
    keys.emplace_back(std::move(ka), std::move(kb));
  }
  std::sort(keys.begin(), keys.end());
  for (const auto& [a, b] : keys) wl.push_back(json::array({a, b}));
  doc["w_edges"] = wl;
  if (action) {
    json list = json::array();
    for (const Permutation& p : *action) {
      json m = json::object();
      for (Vertex v = 0; v < x.vertex_count(); ++v) m[x.label(v)] = x.label(p[v]);
      list.push_back(m);
    }
    doc["action"] = list;
  }
  if (link_edges) {
    json m = json::object();
    for (const LinkEdgeEntry& e : *link_edges) {
      json& slot = m[x.key(e.simplex)];
      if (slot.is_null()) slot = json::array();
      for (const json& edge : edge_list(x, e.edges)) slot.push_back(edge);
    }
    doc["link_edges"] = m;
  }
  return doc.dump(2) + "\n";
}

}  // namespace chhs
