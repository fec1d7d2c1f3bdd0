#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgadget/gadget_graph.hpp"
#include "qgadget/hardware.hpp"

namespace qgadget {

// guest vertex -> chain of host vertex indices (sorted).
struct Embedding {
  std::map<Var, std::vector<int>> chains;

  std::size_t host_vertex_count() const;
  // Sum of chain lengths minus the number of guest vertices.
  int aux_count() const;
  std::size_t max_chain_len() const;
};

struct EmbedLimits {
  int max_aux = 8;
  int max_chain_len = 2;
  std::uint64_t node_budget = 20'000'000;
};

inline constexpr std::size_t kMaxGuestVertices = 8;
inline constexpr std::size_t kMaxHostVertices = 512;
inline constexpr int kMaxChainLen = 4;

struct EmbedViolation {
  std::string condition;  // "missing chain", "chains not disjoint", "chain disconnected", "edge not covered"
  std::string witness;
};

// nullopt means the embedding is valid. Throws on chains naming vertices
// that exist in neither graph.
std::optional<EmbedViolation> validate_embedding(const GadgetGraph& guest, const HostGraph& host,
                                                 const Embedding& e);

enum class EmbedStatus { found, infeasible, budget_exhausted };
std::string to_string(EmbedStatus s);

struct EmbedResult {
  EmbedStatus status = EmbedStatus::infeasible;
  std::optional<Embedding> embedding;
  std::uint64_t nodes = 0;
};

// Exact backtracking search. `infeasible` is a proof that no embedding meets
// the limits; `budget_exhausted` means the node budget ran out first.
EmbedResult embed_search(const GadgetGraph& guest, const HostGraph& host, const EmbedLimits& limits);

struct MinAuxResult {
  std::optional<int> min_aux;
  std::optional<Embedding> embedding;
  // Every budget below min_aux (or up to max_aux when none) was refuted.
  bool complete = true;
  std::uint64_t nodes = 0;
  std::string report;
};

// Iterative deepening on the aux budget 0, 1, ..., limits.max_aux.
MinAuxResult min_aux(const GadgetGraph& guest, const HostGraph& host, const EmbedLimits& limits);

// Same search for larger guests (at most 24 vertices), used to place whole
// quadratized polynomials. Each aux budget 0, 1, ... gets the full node budget
// and an exhausted level moves on to the next one (clearing `complete`), so
// the result is the first embedding found.
MinAuxResult embed_large(const GadgetGraph& guest, const HostGraph& host,
                         const EmbedLimits& limits);

// Interaction graph of a quadratic polynomial; `aux` variables are colored aux.
GadgetGraph interaction_graph(const Polynomial& q2, const std::vector<Var>& aux = {},
                              std::string name = "interaction");

}  // namespace qgadget
