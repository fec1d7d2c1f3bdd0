#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qgadget/gadget.hpp"
#include "qgadget/gadget_graph.hpp"
#include "qgadget/patterns.hpp"

namespace qgadget {

struct SynthesisProblem {
  SignedMonomial target;  // +-1 times the product of the template's logical vertices
  GadgetGraph template_graph;
  Coeff coeff_bound = 4;
  bool require_all_edges = true;
};

// certificate: branch over minimizer certificates with exact LP pruning.
// grid: brute force over every coefficient vector in [-C, C]^k (k <= 10).
enum class SynthesisMethod { certificate, grid };

struct SynthesisStats {
  std::uint64_t nodes = 0;
  std::uint64_t feasibility_calls = 0;
  std::uint64_t leaves = 0;
  std::uint64_t candidates = 0;  // integer points or grid vectors checked
  std::uint64_t pivots = 0;
};

struct SynthesisResult {
  std::optional<Gadget> gadget;
  // certificate[s] = lexicographically smallest minimizing aux assignment for
  // logical assignment s (bit i = logical i; bit j = aux j).
  std::vector<std::uint32_t> certificate;
  SynthesisStats stats;
};

SynthesisResult synthesize(const SynthesisProblem& problem,
                           SynthesisMethod method = SynthesisMethod::certificate);

// Number of free coefficients of a template: constant, one per vertex, one per edge.
std::size_t coefficient_count(const GadgetGraph& g);

struct ResolveOptions {
  Coeff coeff_bound = 4;
  // Candidate patterns are tried by ascending rank, then by canonical code.
  // The default rank is the minimum embedding aux count on one Chimera cell
  // (chains up to 3), ties broken by that on pegasus(2) (chains up to 2).
  std::function<int(const GadgetGraph&)> rank;
};

struct ResolvedCandidate {
  GadgetGraph graph;
  int rank = 0;
  bool feasible = false;
};

// Enumerates color-inequivalent ways of deleting `removed_edges` edges from
// K6 on 4 logical + 2 aux vertices and returns the first one that admits an
// exact gadget with every remaining edge nonzero.
ResolvedPattern resolve_catalog_pattern(int removed_edges, int target_sign,
                                        const ResolveOptions& options = {},
                                        std::vector<ResolvedCandidate>* tried = nullptr);

// The candidate patterns in try order, without synthesizing.
std::vector<ResolvedCandidate> catalog_pattern_candidates(int removed_edges,
                                                          const ResolveOptions& options = {});

}  // namespace qgadget
