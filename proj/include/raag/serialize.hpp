// raagkit — computing in right-angled Artin groups and their extension graphs.
// JSON and DOT serialization.  All JSON uses insertion-ordered objects so
// output is byte-identical across runs; all numbers are exact (integers or
// num/den pairs).  This is the only header that touches the JSON library.
//
// Distributed under the MIT license; see LICENSE at the repository root.

#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "raag/ext_graph.hpp"
#include "raag/graph.hpp"
#include "raag/lemma_suite.hpp"
#include "raag/rational.hpp"
#include "raag/syllables.hpp"
#include "raag/translation.hpp"
#include "raag/word.hpp"

namespace raag {

using json = nlohmann::ordered_json;

// -- Graphs ------------------------------------------------------------------

inline json graph_to_json(const SimplicialGraph& g) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < g.n(); ++v) j["vertices"].push_back(g.name(v));
  j["edges"] = json::array();
  for (int a = 0; a < g.n(); ++a)
    for (int b : g.neighbors(a))
      if (a < b) j["edges"].push_back({g.name(a), g.name(b)});
  return j;
}

inline SimplicialGraph graph_from_json(const json& j,
                                       bool require_connected = true) {
  if (!j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs 'vertices' and 'edges'");
  std::vector<std::string> names;
  for (const auto& v : j.at("vertices")) names.push_back(v.get<std::string>());
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("each edge must be a two-element array");
    edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  }
  return SimplicialGraph(names, edges, require_connected);
}

inline SimplicialGraph load_graph_file(const std::string& path,
                                       bool require_connected = true) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  json j;
  in >> j;
  return graph_from_json(j, require_connected);
}

// Family string ("path:4", "cycle:7", "star:3", "gamma:2") or a path to a
// JSON graph file.
inline SimplicialGraph resolve_graph(const std::string& spec) {
  if (spec.find(':') != std::string::npos &&
      spec.find('/') == std::string::npos &&
      spec.rfind(".json") == std::string::npos)
    return make_family(spec);
  if (spec.rfind(".json") != std::string::npos) return load_graph_file(spec);
  return make_family(spec);
}

inline std::string graph_to_dot(const SimplicialGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) out << "  \"" << g.name(v) << "\";\n";
  for (int a = 0; a < g.n(); ++a)
    for (int b : g.neighbors(a))
      if (a < b)
        out << "  \"" << g.name(a) << "\" -- \"" << g.name(b) << "\";\n";
  out << "}\n";
  return out.str();
}

inline json girth_to_json(const Girth& g) {
  if (g.is_infinite()) return json("infinite");
  return json(g.value());
}

inline json metrics_to_json(const GraphMetrics& m) {
  json j;
  j["girth"] = girth_to_json(m.girth);
  j["max_degree"] = m.max_degree;
  j["diameter"] = m.diameter;
  j["is_tree"] = m.is_tree;
  j["bipartite"] = m.bipartite;
  return j;
}

// -- Elements ----------------------------------------------------------------

inline json element_to_json(const Element& x) {
  json arr = json::array();
  for (const Syllable& s : x.syllables()) {
    json one;
    one["v"] = x.graph().name(s.v);
    one["e"] = s.e;
    arr.push_back(std::move(one));
  }
  return arr;
}

inline json rational_to_json(const Rational& r) {
  json j;
  j["num"] = r.num();
  j["den"] = r.den();
  return j;
}

inline json classification_to_json(const Classification& c) {
  const SimplicialGraph& g = c.reduced.graph();
  json j;
  j["type"] = c.loxodromic ? "loxodromic" : "elliptic";
  j["reduced"] = c.reduced.str();
  j["conjugator"] = c.conjugator.str();
  json w;
  if (c.loxodromic) {
    json tree = json::array();
    for (auto [a, b] : c.complement_tree_edges)
      tree.push_back({g.name(a), g.name(b)});
    w["complement_spanning_tree"] = std::move(tree);
    json nd = json::array();
    for (auto [out, s] : c.non_domination) {
      json one;
      one["outside"] = g.name(out);
      one["missed"] = g.name(s);
      nd.push_back(std::move(one));
    }
    w["non_domination"] = std::move(nd);
  } else if (c.small_support) {
    w["small_support"] = true;
  } else if (c.join) {
    json a = json::array(), b = json::array();
    for (int v : c.join->first) a.push_back(g.name(v));
    for (int v : c.join->second) b.push_back(g.name(v));
    w["join"] = json::object({{"left", a}, {"right", b}});
  } else if (c.dominating_vertex) {
    w["dominating_vertex"] = g.name(*c.dominating_vertex);
  }
  j["witness"] = std::move(w);
  return j;
}

// -- Extension-graph pieces --------------------------------------------------

inline json ext_subgraph_to_json(const ExtSubgraph& s) {
  json j;
  j["provenance"] = s.provenance;
  j["distance_exact"] = s.distance_exact;
  json verts = json::array();
  for (const ExtVertex& v : s.vertices) verts.push_back(v.str());
  j["vertices"] = std::move(verts);
  json edges = json::array();
  for (size_t a = 0; a < s.adj.size(); ++a)
    for (int b : s.adj[a])
      if (static_cast<int>(a) < b)
        edges.push_back({static_cast<long long>(a), b});
  j["edges"] = std::move(edges);
  return j;
}

inline std::string ext_subgraph_to_dot(const ExtSubgraph& s) {
  std::ostringstream out;
  out << "graph ext {\n";
  for (size_t v = 0; v < s.vertices.size(); ++v)
    out << "  n" << v << " [label=\"" << s.vertices[v].str() << "\"];\n";
  for (size_t a = 0; a < s.adj.size(); ++a)
    for (int b : s.adj[a])
      if (static_cast<int>(a) < b) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

// -- Translation lengths -----------------------------------------------------

inline json tau_to_json(const TauResult& t) {
  json j;
  j["tau"] = rational_to_json(t.value);
  j["method"] = tau_method_name(t.method);
  j["exact"] = t.exact;
  j["reduced"] = t.reduced.str();
  j["conjugator"] = t.conjugator.str();
  json cert;
  if (t.girth6) {
    cert["witness"] = t.girth6->witness;
    cert["power"] = t.girth6->power;
    cert["distance"] = t.girth6->distance;
    cert["pivot"] = t.girth6->pivot;
    cert["chain"] = t.girth6->chain;
  } else if (t.tree) {
    cert["basepoint"] = t.tree->basepoint;
    cert["d1"] = t.tree->d1;
    cert["d2"] = t.tree->d2;
  } else if (t.syllable2) {
    cert["v1"] = t.syllable2->v1;
    cert["v2"] = t.syllable2->v2;
    cert["graph_distance"] = t.syllable2->graph_distance;
  } else if (t.bounds) {
    cert["basepoint"] = t.bounds->basepoint;
    json ub = json::array();
    for (const auto& [n, r] : t.bounds->upper_bounds) {
      json one;
      one["power"] = n;
      one["bound"] = rational_to_json(r);
      ub.push_back(std::move(one));
    }
    cert["upper_bounds"] = std::move(ub);
    cert["best_power"] = t.bounds->best_power;
  }
  j["certificate"] = std::move(cert);
  return j;
}

inline json spectrum_to_json(const SpectrumReport& r) {
  json j;
  json b;
  b["max_syllables"] = r.budget.max_syllables;
  b["exponents"] = r.budget.exponents;
  b["injective_support"] = r.budget.injective_support;
  j["budget"] = std::move(b);
  j["classes"] = r.entries.size();
  j["elements_enumerated"] = r.elements_enumerated;
  j["all_even"] = r.all_even;
  j["all_integer"] = r.all_integer;
  j["max_denominator"] = r.max_denominator;
  if (r.min_positive)
    j["min_positive"] = rational_to_json(*r.min_positive);
  else
    j["min_positive"] = nullptr;
  j["has_inexact"] = r.has_inexact;
  json entries = json::array();
  for (const SpectrumEntry& e : r.entries) {
    json one;
    one["representative"] = e.representative.str();
    one["tau"] = rational_to_json(e.tau.value);
    one["method"] = tau_method_name(e.tau.method);
    one["exact"] = e.tau.exact;
    entries.push_back(std::move(one));
  }
  j["entries"] = std::move(entries);
  return j;
}

// -- Check reports -----------------------------------------------------------

inline json reports_to_json(const std::vector<OracleReport>& reports) {
  json arr = json::array();
  int failures = 0;
  for (const OracleReport& r : reports) {
    json one;
    one["check"] = r.check;
    one["instance"] = r.instance;
    one["expected"] = r.expected;
    one["computed"] = r.computed;
    one["pass"] = r.pass;
    arr.push_back(std::move(one));
    if (!r.pass) ++failures;
  }
  json j;
  j["total"] = reports.size();
  j["failures"] = failures;
  j["reports"] = std::move(arr);
  return j;
}

}  // namespace raag
