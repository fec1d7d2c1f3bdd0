#include "qgadget/gadget_graph.hpp"

#include <algorithm>
#include <numeric>

#include "qgadget/patterns.hpp"

namespace qgadget {

namespace {

GadgetGraph::Edge ordered(const Var& a, const Var& b) {
  return a < b ? GadgetGraph::Edge{a, b} : GadgetGraph::Edge{b, a};
}

std::vector<std::pair<int, int>> complete_edges(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

struct FixedEntry {
  const char* name;
  int n_logical;
  int n_aux;
  std::vector<std::pair<int, int>> edges;
};

const std::vector<FixedEntry>& fixed_entries() {
  static const std::vector<FixedEntry> entries = [] {
    std::vector<FixedEntry> e;
    e.push_back({"Propeller", 3, 1, {{0, 3}, {1, 3}, {2, 3}}});
    e.push_back({"Coat-Hanger", 3, 1, {{0, 3}, {1, 3}, {2, 3}, {1, 2}}});
    auto k4e = complete_edges(4);
    k4e.erase(std::find(k4e.begin(), k4e.end(), std::pair{0, 1}));
    e.push_back({"K4-e", 3, 1, k4e});
    e.push_back({"K4", 3, 1, complete_edges(4)});
    e.push_back({"K5-2aux", 3, 2, complete_edges(5)});
    e.push_back({"X", 4, 1, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}});
    e.push_back({"K5-1aux", 4, 1, complete_edges(5)});
    e.push_back({"K6", 4, 2, complete_edges(6)});
    // Two K4 cliques {x1,x2,a1,a3} and {x3,x4,a2,a3} sharing a3.
    std::vector<std::pair<int, int>> dk4;
    for (auto clique : {std::vector<int>{0, 1, 4, 6}, std::vector<int>{2, 3, 5, 6}}) {
      for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j) dk4.emplace_back(clique[i], clique[j]);
    }
    e.push_back({"Double-K4", 4, 3, dk4});
    return e;
  }();
  return entries;
}

}  // namespace

GadgetGraph::GadgetGraph(std::string name_, std::vector<Var> logical_, std::vector<Var> aux_)
    : name(std::move(name_)), logical(std::move(logical_)), aux(std::move(aux_)) {}

std::vector<Var> GadgetGraph::vertices() const {
  std::vector<Var> v = logical;
  v.insert(v.end(), aux.begin(), aux.end());
  return v;
}

bool GadgetGraph::is_aux(const Var& v) const {
  return std::find(aux.begin(), aux.end(), v) != aux.end();
}

bool GadgetGraph::has_vertex(const Var& v) const {
  return is_aux(v) || std::find(logical.begin(), logical.end(), v) != logical.end();
}

bool GadgetGraph::has_edge(const Var& a, const Var& b) const {
  return edges.count(ordered(a, b)) > 0;
}

void GadgetGraph::add_edge(const Var& a, const Var& b) {
  if (a == b) throw Error("gadget graph: self-loop on '" + a + "'");
  if (!has_vertex(a) || !has_vertex(b)) {
    throw Error("gadget graph: edge (" + a + ", " + b + ") references an undeclared vertex");
  }
  edges.insert(ordered(a, b));
}

void GadgetGraph::remove_edge(const Var& a, const Var& b) { edges.erase(ordered(a, b)); }

void GadgetGraph::validate() const {
  auto vs = vertices();
  auto sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error("gadget graph '" + name + "': duplicate vertex");
  }
  if (vs.size() > 32) throw Error("gadget graph '" + name + "': too many vertices");
  for (const auto& [a, b] : edges) {
    if (a == b) throw Error("gadget graph '" + name + "': self-loop on '" + a + "'");
    if (!has_vertex(a) || !has_vertex(b)) {
      throw Error("gadget graph '" + name + "': edge references undeclared vertex");
    }
  }
}

std::vector<std::uint32_t> GadgetGraph::adjacency() const {
  auto vs = vertices();
  std::vector<std::uint32_t> adj(vs.size(), 0);
  auto index = [&](const Var& v) {
    return static_cast<int>(std::find(vs.begin(), vs.end(), v) - vs.begin());
  };
  for (const auto& [a, b] : edges) {
    int i = index(a), j = index(b);
    adj[i] |= 1u << j;
    adj[j] |= 1u << i;
  }
  return adj;
}

std::vector<std::pair<int, int>> GadgetGraph::dense_edges() const {
  auto adj = adjacency();
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(adj.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(adj.size()); ++j)
      if (adj[i] >> j & 1u) out.emplace_back(i, j);
  return out;
}

GadgetGraph make_gadget_graph(std::string name, int n_logical, int n_aux,
                              const std::vector<std::pair<int, int>>& dense_edges) {
  std::vector<Var> logical, aux;
  for (int i = 1; i <= n_logical; ++i) logical.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n_aux; ++i) aux.push_back("a" + std::to_string(i));
  GadgetGraph g(std::move(name), logical, aux);
  auto vs = g.vertices();
  for (auto [i, j] : dense_edges) {
    if (i < 0 || j < 0 || i >= static_cast<int>(vs.size()) || j >= static_cast<int>(vs.size())) {
      throw Error("gadget graph: dense edge index out of range");
    }
    g.add_edge(vs[i], vs[j]);
  }
  return g;
}

std::vector<std::pair<int, int>> canonical_edges(const GadgetGraph& g) {
  const int nl = static_cast<int>(g.logical.size());
  const int na = static_cast<int>(g.aux.size());
  auto edges = g.dense_edges();
  std::vector<int> lp(nl), ap(na);
  std::iota(lp.begin(), lp.end(), 0);
  std::vector<std::pair<int, int>> best;
  bool first = true;
  do {
    std::iota(ap.begin(), ap.end(), 0);
    do {
      std::vector<std::pair<int, int>> mapped;
      mapped.reserve(edges.size());
      auto map = [&](int v) { return v < nl ? lp[v] : nl + ap[v - nl]; };
      for (auto [i, j] : edges) {
        int a = map(i), b = map(j);
        mapped.emplace_back(std::min(a, b), std::max(a, b));
      }
      std::sort(mapped.begin(), mapped.end());
      if (first || mapped < best) {
        best = std::move(mapped);
        first = false;
      }
    } while (std::next_permutation(ap.begin(), ap.end()));
  } while (std::next_permutation(lp.begin(), lp.end()));
  return best;
}

bool colored_isomorphic(const GadgetGraph& a, const GadgetGraph& b) {
  if (a.logical.size() != b.logical.size() || a.aux.size() != b.aux.size() ||
      a.edges.size() != b.edges.size()) {
    return false;
  }
  return canonical_edges(a) == canonical_edges(b);
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"Propeller", "Coat-Hanger", "K4-e",    "K4",
                                                 "K5-2aux",   "X",           "K5-1aux", "K6-4e",
                                                 "K6-e",      "K6",          "Double-K4"};
  return names;
}

bool is_catalog_name(std::string_view name) {
  const auto& names = catalog_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

bool catalog_requires_pattern(std::string_view name) { return name == "K6-4e" || name == "K6-e"; }

GadgetGraph catalog_graph(std::string_view name) { return catalog_graph(name, default_patterns()); }

GadgetGraph catalog_graph(std::string_view name, const PatternStore& patterns) {
  if (catalog_requires_pattern(name)) {
    GadgetGraph g = patterns.require(name).graph;
    g.name = std::string(name);
    return g;
  }
  for (const auto& e : fixed_entries()) {
    if (name == e.name) return make_gadget_graph(e.name, e.n_logical, e.n_aux, e.edges);
  }
  std::string known;
  for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
  throw Error("unknown catalog graph '" + std::string(name) + "' (known: " + known + ")");
}

std::optional<std::string> classify_graph(const GadgetGraph& g) {
  return classify_graph(g, default_patterns());
}

std::optional<std::string> classify_graph(const GadgetGraph& g, const PatternStore& patterns) {
  auto code = canonical_edges(g);
  for (const auto& name : catalog_names()) {
    if (catalog_requires_pattern(name) && patterns.find(name) == nullptr) continue;
    GadgetGraph entry = catalog_graph(name, patterns);
    if (entry.logical.size() != g.logical.size() || entry.aux.size() != g.aux.size() ||
        entry.edges.size() != g.edges.size()) {
      continue;
    }
    if (canonical_edges(entry) == code) return name;
  }
  return std::nullopt;
}

const std::vector<CatalogAccounting>& catalog_accounting() {
  static const std::vector<CatalogAccounting> rows = {
      {"Propeller", 3, 1, 0, 1, 0, 1, {"NTR-KZFD", "NTR-ABCG-2"}},
      {"Coat-Hanger", 3, 1, 1, 2, 0, 1, {"PTR-GBP"}},
      {"K4-e", 3, 1, 1, 2, 0, 1, {"NTR-GBP", "NTR-ABCG"}},
      {"K4", 3, 1, 2, 3, 0, 1, {"PTR-Ishikawa", "NTR-RBL-(3->2)", "PTR-BCR-1,2,3,4", "PTR-KZ"}},
      {"K5-2aux", 3, 2, 3, 5, 1, 2, {"PTR-RBL"}},
      {"X", 4, 1, 0, 1, 0, 1, {"NTR-KZFD", "NTR-ABCG-2"}},
      {"K5-1aux", 4, 1, 3, 4, 1, 2, {"PTR-BCR-2", "PTR-BCR-4", "NTR-LHZ"}},
      {"K6-4e", 4, 2, 1, 3, 0, 2, {"PTR-BG"}},
      {"K6-e", 4, 2, 5, 7, 2, 4, {"PTR-Ishikawa"}},
      {"K6", 4, 2, 8, 10, 2, 4, {"PTR-BCR-3"}},
      {"Double-K4", 4, 3, 5, 8, 1, 4, {"PTR-LZL"}},
  };
  return rows;
}

const CatalogAccounting& accounting_for(std::string_view graph) {
  for (const auto& r : catalog_accounting()) {
    if (r.graph == graph) return r;
  }
  throw Error("no accounting row for graph '" + std::string(graph) + "'");
}

}  // namespace qgadget
