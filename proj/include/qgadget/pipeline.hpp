#pragma once

#include <optional>

#include "qgadget/anneal.hpp"
#include "qgadget/embed.hpp"
#include "qgadget/hardware.hpp"
#include "qgadget/quadratize.hpp"

namespace qgadget {

enum class Solver { exact, sa };

struct PipelineOptions {
  Hardware hardware = Hardware::pegasus;
  // Defaults to pegasus(2) or chimera(2,2,4) to match `hardware`.
  std::optional<HostGraph> host;
  int max_chain_len = 3;
  std::uint64_t node_budget = 10'000'000;  // per aux level
  std::optional<Coeff> chain_strength;
  Solver solver = Solver::exact;
  Schedule schedule;
  int restarts = 8;
};

struct PipelineResult {
  QuadratizationResult quadratization;
  GadgetGraph guest;
  Embedding embedding;
  Qubo qubo;
  SolveResult solve;
  UnembedResult unembedded;
  Assignment assignment;  // restricted to the input polynomial's variables
  Coeff value = 0;        // input polynomial at `assignment`
};

HostGraph default_host(Hardware hw);

// quadratize -> embed -> assemble -> solve -> unembed.
PipelineResult run_pipeline(const Polynomial& p, const PipelineOptions& options = {});

// Brute-force minimum of p over its variables (at most 24).
Coeff brute_force_minimum(const Polynomial& p);

}  // namespace qgadget
