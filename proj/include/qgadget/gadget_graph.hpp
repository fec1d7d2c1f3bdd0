#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgadget/polynomial.hpp"

namespace qgadget {

class PatternStore;

// Two-colored graph of a gadget's quadratic couplings. Logical vertices come
// first in every dense indexing, auxiliaries after.
struct GadgetGraph {
  using Edge = std::pair<Var, Var>;  // first < second

  std::string name;
  std::vector<Var> logical;
  std::vector<Var> aux;
  std::set<Edge> edges;

  GadgetGraph() = default;
  GadgetGraph(std::string name, std::vector<Var> logical, std::vector<Var> aux);

  std::vector<Var> vertices() const;
  std::size_t vertex_count() const { return logical.size() + aux.size(); }
  bool is_aux(const Var& v) const;
  bool has_vertex(const Var& v) const;
  bool has_edge(const Var& a, const Var& b) const;

  // Throws on self-loops or undeclared endpoints.
  void add_edge(const Var& a, const Var& b);
  void remove_edge(const Var& a, const Var& b);
  void validate() const;

  // Dense adjacency: bit j of row i set iff vertices i and j are adjacent.
  std::vector<std::uint32_t> adjacency() const;
  std::vector<std::pair<int, int>> dense_edges() const;
};

// Builds a graph on logical x1..xL and aux a1..aA from dense edge pairs.
GadgetGraph make_gadget_graph(std::string name, int n_logical, int n_aux,
                              const std::vector<std::pair<int, int>>& dense_edges);

bool colored_isomorphic(const GadgetGraph& a, const GadgetGraph& b);

// Canonical code under color-preserving relabelling: the lexicographically
// smallest sorted dense edge list over all logical and aux permutations.
std::vector<std::pair<int, int>> canonical_edges(const GadgetGraph& g);

// The gadget-graph catalog. K6-4e and K6-e have no fixed wiring; their edge
// sets come from the resolved patterns in a PatternStore.
const std::vector<std::string>& catalog_names();
bool is_catalog_name(std::string_view name);
bool catalog_requires_pattern(std::string_view name);
GadgetGraph catalog_graph(std::string_view name);
GadgetGraph catalog_graph(std::string_view name, const PatternStore& patterns);

// Catalog name of a color-preserving isomorphic entry, or nullopt.
std::optional<std::string> classify_graph(const GadgetGraph& g);
std::optional<std::string> classify_graph(const GadgetGraph& g, const PatternStore& patterns);

// Auxiliary-qubit accounting as printed in the source tables. Note that the
// K5-2aux Pegasus row prints embedding 1 with total 2.
struct CatalogAccounting {
  std::string graph;
  int degree;
  int quadratization_aux;
  int chimera_embedding_aux;
  int chimera_total_aux;
  int pegasus_embedding_aux;
  int pegasus_total_aux;
  std::vector<std::string> example_gadgets;
};

const std::vector<CatalogAccounting>& catalog_accounting();
const CatalogAccounting& accounting_for(std::string_view graph);

}  // namespace qgadget
