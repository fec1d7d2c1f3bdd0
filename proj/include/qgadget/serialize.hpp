#pragma once

#include <string>

#include "qgadget/anneal.hpp"
#include "qgadget/embed.hpp"
#include "qgadget/gadget.hpp"
#include "qgadget/hardware.hpp"
#include "qgadget/quadratize.hpp"
#include "qgadget/report.hpp"
#include "qgadget/synth.hpp"

namespace qgadget {

// All functions return pretty-printed JSON text.
std::string polynomial_json(const Polynomial& p);
std::string quadratization_json(const QuadratizationResult& r);
std::string registry_json(const std::vector<RegistryEntry>& entries);
std::string gadget_json(const Gadget& g);
std::string synthesis_json(const SynthesisResult& r);
std::string host_json(const HostGraph& g);
std::string embedding_json(const Embedding& e, const HostGraph& host);
std::string min_aux_json(const MinAuxResult& r, const HostGraph& host);
std::string qubo_json(const Qubo& q, const HostGraph& host);
std::string solve_json(const SolveResult& s, const UnembedResult& u, const HostGraph& host);
std::string tables_json(const TableReport& r, bool context = false);
std::string factor_json(const FactorResult& r);

// `guest: [label, label]` lines.
std::string embedding_text(const Embedding& e, const HostGraph& host);

}  // namespace qgadget
