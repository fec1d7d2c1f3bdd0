#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qgadget/gadget_graph.hpp"
#include "qgadget/polynomial.hpp"

namespace qgadget {

// A concrete wiring for a pattern-dependent catalog graph (K6-4e, K6-e)
// together with the synthesized gadget that witnesses it.
struct ResolvedPattern {
  std::string graph_name;
  GadgetGraph graph;
  std::vector<GadgetGraph::Edge> removed_edges;
  int target_sign = 1;
  int degree = 4;
  Polynomial quadratic;
  Coeff coeff_bound = 4;
  std::string provenance;
};

class PatternStore {
 public:
  PatternStore() = default;

  static PatternStore from_json(std::string_view text);
  // Throws if the file is missing, pointing at `qgadget synth --resolve`.
  static PatternStore load(const std::string& path);

  std::string to_json() const;
  void save(const std::string& path) const;

  const ResolvedPattern* find(std::string_view graph_name) const;
  const ResolvedPattern& require(std::string_view graph_name) const;
  void put(ResolvedPattern p);
  const std::vector<ResolvedPattern>& patterns() const { return patterns_; }

 private:
  std::vector<ResolvedPattern> patterns_;
};

// Patterns compiled into the library from data/catalog_patterns.json.
const PatternStore& default_patterns();

}  // namespace qgadget
