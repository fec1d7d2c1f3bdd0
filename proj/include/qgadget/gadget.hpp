#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgadget/gadget_graph.hpp"
#include "qgadget/polynomial.hpp"

namespace qgadget {

class PatternStore;

enum class Hardware { chimera, pegasus };

std::string_view to_string(Hardware h);
Hardware parse_hardware(std::string_view s);

// coefficient * prod(vars). Catalog targets have coefficient +1 or -1; scaled
// gadgets carry the scaled coefficient.
struct SignedMonomial {
  Coeff coefficient = 1;
  std::vector<Var> vars;

  int sign() const { return coefficient < 0 ? -1 : 1; }
  std::size_t degree() const { return vars.size(); }
  Polynomial polynomial() const { return Polynomial::term(coefficient, vars); }
};

SignedMonomial standard_target(int sign, int degree);  // over x1..xd

// A quadratic polynomial over the target's variables plus auxiliaries,
// claimed to reproduce the target under minimization over the auxiliaries.
struct Gadget {
  SignedMonomial target;
  Polynomial quadratic;
  std::vector<Var> aux;
  std::string provenance;

  const std::vector<Var>& logical() const { return target.vars; }
  std::vector<Var> variables() const;  // logical then aux
  Gadget scaled(Coeff factor) const;
};

// Enumeration limit for verify_gadget and other brute-force oracles.
inline constexpr std::size_t kMaxEnumerationVars = 24;

struct VerifyReport {
  bool exact = true;
  // First logical assignment (bit i = logical i) where the minimum differs.
  std::optional<std::uint32_t> witness;
  Coeff expected = 0;
  Coeff minimum = 0;
};

VerifyReport verify_gadget_report(const Gadget& g);
bool verify_gadget(const Gadget& g);

// Vertices are the gadget's logical and aux variables; an edge marks a nonzero
// quadratic coefficient. Linear and constant terms are ignored.
GadgetGraph extract_graph(const Gadget& g);

struct RegistryEntry {
  std::string name;
  int sign;
  int degree;
  std::string catalog_graph;  // empty when the graph is uncatalogued
  std::string formula;
  bool synthesized = false;
};

std::vector<RegistryEntry> registry_entries();
std::vector<RegistryEntry> registry_entries(const PatternStore& patterns);

Gadget builtin_gadget(std::string_view name, int sign, int degree);
Gadget builtin_gadget(std::string_view name, int sign, int degree, const PatternStore& patterns);

struct Recommendation {
  std::string gadget;
  std::string catalog_graph;
  int quadratization_aux;
  int expected_total_aux;
};

// Gadget minimizing total auxiliary qubits (quadratization plus embedding) for
// a single term, ties broken toward fewer quadratization auxiliaries.
Recommendation recommend(int sign, int degree, Hardware hardware);

}  // namespace qgadget
