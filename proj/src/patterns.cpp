#include "qgadget/patterns.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qgadget/error.hpp"

namespace qgadget {

namespace detail {
extern const char* const kEmbeddedPatterns;
}

namespace {

using nlohmann::json;

json poly_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [mono, c] : p.terms()) terms.push_back({{"coeff", c}, {"vars", mono}});
  return terms;
}

Polynomial poly_from_json(const json& j) {
  Polynomial p;
  for (const auto& t : j) p.add_term(t.at("vars").get<std::vector<Var>>(), t.at("coeff").get<Coeff>());
  return p;
}

json edges_to_json(const std::vector<GadgetGraph::Edge>& edges) {
  json out = json::array();
  for (const auto& [a, b] : edges) out.push_back({a, b});
  return out;
}

std::vector<GadgetGraph::Edge> edges_from_json(const json& j) {
  std::vector<GadgetGraph::Edge> out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<Var>(), e.at(1).get<Var>());
  return out;
}

}  // namespace

PatternStore PatternStore::from_json(std::string_view text) {
  PatternStore store;
  try {
    json doc = json::parse(text);
    for (const auto& j : doc.at("patterns")) {
      ResolvedPattern p;
      p.graph_name = j.at("graph_name").get<std::string>();
      p.graph = GadgetGraph(p.graph_name, j.at("logical").get<std::vector<Var>>(),
                            j.at("aux").get<std::vector<Var>>());
      for (const auto& [a, b] : edges_from_json(j.at("edges"))) p.graph.add_edge(a, b);
      p.removed_edges = edges_from_json(j.at("removed_edges"));
      p.target_sign = j.at("target_sign").get<int>();
      p.degree = j.at("degree").get<int>();
      p.quadratic = poly_from_json(j.at("quadratic"));
      p.coeff_bound = j.value("coeff_bound", Coeff{4});
      p.provenance = j.value("provenance", std::string{});
      store.put(std::move(p));
    }
  } catch (const json::exception& e) {
    throw Error(std::string("pattern store: malformed JSON: ") + e.what());
  }
  return store;
}

PatternStore PatternStore::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("pattern store '" + path +
                "' not found; run `qgadget synth --resolve K6-4e` and `qgadget synth --resolve "
                "K6-e` to create it");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::string PatternStore::to_json() const {
  json arr = json::array();
  for (const auto& p : patterns_) {
    std::vector<GadgetGraph::Edge> edges(p.graph.edges.begin(), p.graph.edges.end());
    arr.push_back({{"graph_name", p.graph_name},
                   {"logical", p.graph.logical},
                   {"aux", p.graph.aux},
                   {"edges", edges_to_json(edges)},
                   {"removed_edges", edges_to_json(p.removed_edges)},
                   {"target_sign", p.target_sign},
                   {"degree", p.degree},
                   {"quadratic", poly_to_json(p.quadratic)},
                   {"coeff_bound", p.coeff_bound},
                   {"provenance", p.provenance}});
  }
  return json{{"patterns", arr}}.dump(2) + "\n";
}

void PatternStore::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write pattern store '" + path + "'");
  out << to_json();
}

const ResolvedPattern* PatternStore::find(std::string_view graph_name) const {
  for (const auto& p : patterns_)
    if (p.graph_name == graph_name) return &p;
  return nullptr;
}

const ResolvedPattern& PatternStore::require(std::string_view graph_name) const {
  if (const auto* p = find(graph_name)) return *p;
  throw Error("no resolved pattern for " + std::string(graph_name) +
              "; run `qgadget synth --resolve " + std::string(graph_name) + "` first");
}

void PatternStore::put(ResolvedPattern p) {
  for (auto& q : patterns_) {
    if (q.graph_name == p.graph_name) {
      q = std::move(p);
      return;
    }
  }
  patterns_.push_back(std::move(p));
}

const PatternStore& default_patterns() {
  static const PatternStore store = PatternStore::from_json(detail::kEmbeddedPatterns);
  return store;
}

}  // namespace qgadget
