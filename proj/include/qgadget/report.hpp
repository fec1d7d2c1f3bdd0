#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgadget/gadget.hpp"
#include "qgadget/hardware.hpp"
#include "qgadget/patterns.hpp"

namespace qgadget {

struct TableRow {
  std::string graph;
  Hardware hardware = Hardware::chimera;
  std::string host;
  int max_chain_len = 2;
  int quadratization_aux = 0;
  std::optional<int> embedding_aux;  // computed minimum on `host`
  std::optional<int> total_aux;
  int published_embedding_aux = 0;
  int published_total_aux = 0;
  bool complete = true;  // false if the node budget cut the proof short
  std::uint64_t nodes = 0;
  bool match = false;        // computed total equals the published total
  bool improvement = false;  // computed total is smaller
  bool exceeds = false;      // computed total is larger, or nothing was found
};

struct TableReport {
  std::vector<TableRow> rows;
  bool ok() const;  // no row exceeds its published total
};

struct TablesOptions {
  const PatternStore* patterns = nullptr;  // defaults to the embedded store
  std::uint64_t node_budget = 50'000'000;
  bool parallel = true;
};

// Host and chain limit used for a catalog graph on Chimera: one cell for the
// cubic graphs and X, K5-1aux, K6-4e; a 2x2 block for K6-e, K6, Double-K4.
HostGraph chimera_host_for(const std::string& graph);
inline constexpr int kChimeraChainLimit = 3;
inline constexpr int kPegasusChainLimit = 2;

TableReport run_tables_report(const TablesOptions& options = {});
std::string format_tables(const TableReport& report, bool context = false);
const std::vector<std::string>& context_citations();

struct FactorResult {
  int n = 0;
  int p = 0;
  int q = 0;
  int logical_variables = 0;
  int quadratized_variables = 0;
  int host_qubits = 0;
  Coeff energy = 0;
};

// Binary multiplication with odd factors p = 1 + 2p1 + 4p2, q = 1 + 2q1 + 4q2;
// the objective (n - pq)^2 is quartic in p1, p2, q1, q2.
Polynomial factoring_polynomial(int n);
FactorResult run_factor_demo(int n);

}  // namespace qgadget
