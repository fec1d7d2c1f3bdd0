#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qgadget/embed.hpp"
#include "qgadget/hardware.hpp"
#include "qgadget/polynomial.hpp"

namespace qgadget {

// Host vertex index -> bit.
using HostAssignment = std::map<int, int>;

// QUBO over host qubits. Quadratic keys are host edges (a < b).
struct Qubo {
  std::vector<int> variables;  // sorted host indices, including zero-weight chain members
  std::map<int, Coeff> linear;
  std::map<std::pair<int, int>, Coeff> quadratic;
  Coeff offset = 0;

  Coeff energy(const HostAssignment& x) const;
};

// 1 + sum of |coefficients| of q2 (the constant included).
Coeff default_chain_strength(const Polynomial& q2);

// Linear terms go to the first chain member, each quadratic term to the first
// covering host edge, and every edge of a BFS spanning tree of each chain gets
// the penalty lambda * (x + y - 2xy).
Qubo assemble_qubo(const Polynomial& q2, const Embedding& e, const HostGraph& host,
                   std::optional<Coeff> chain_strength = std::nullopt);

struct SolveResult {
  HostAssignment assignment;
  Coeff energy = 0;
};

inline constexpr std::size_t kMaxExactVars = 24;

// Exhaustive minimum; ties go to the lexicographically smallest assignment
// (variables in ascending host order, first variable most significant).
SolveResult solve_exact(const Qubo& q);

struct Schedule {
  // Unset temperatures are derived from the coefficients: the hot end accepts
  // any single flip with probability 1/2, the cold end accepts a unit uphill
  // step with probability 1/100.
  std::optional<double> beta_initial;
  std::optional<double> beta_final;
  std::uint64_t sweeps = 1000;
  std::uint64_t seed = 1;
};

// Single-flip Metropolis over a geometric beta schedule. Restarts run in
// parallel with seeds derived from the schedule seed; the lowest energy wins,
// ties going to the lowest restart index.
SolveResult solve_sa(const Qubo& q, const Schedule& schedule, int restarts = 1);

struct UnembedResult {
  Assignment logical;
  int broken_chains = 0;
};

// Majority vote per chain; ties resolve to 1.
UnembedResult unembed(const HostAssignment& x, const Embedding& e);

}  // namespace qgadget
