#pragma once

#include <string>
#include <vector>

#include "qgadget/gadget.hpp"
#include "qgadget/polynomial.hpp"

namespace qgadget {

class PatternStore;

struct QuadratizePolicy {
  Hardware hardware = Hardware::chimera;
  // Only objective supported: minimize total auxiliary qubits.
  std::string objective = "min-total-aux";
};

struct LedgerRecord {
  Monomial monomial;
  Coeff coefficient = 0;
  std::string gadget;
  std::string catalog_graph;
  std::vector<Var> aux;
  int quadratization_aux = 0;
  int expected_total_aux = 0;
};

struct QuadratizationLedger {
  std::vector<LedgerRecord> records;
  int total_aux = 0;
  int expected_total_aux = 0;
};

struct QuadratizationResult {
  Polynomial quadratic;
  QuadratizationLedger ledger;
};

// Replaces each degree-3/4 term with a fresh, |c|-scaled recommended gadget.
// Terms of degree <= 2 pass through unchanged. Degree > 4 is rejected.
QuadratizationResult quadratize(const Polynomial& p, const QuadratizePolicy& policy = {});
QuadratizationResult quadratize(const Polynomial& p, const QuadratizePolicy& policy,
                                const PatternStore& patterns);

// Brute-force check of min over aux of the quadratization against p.
bool verify_quadratization(const Polynomial& original, const QuadratizationResult& result);

}  // namespace qgadget
