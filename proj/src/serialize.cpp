#include "qgadget/serialize.hpp"

#include <json.hpp>

namespace qgadget {

namespace {

using nlohmann::json;

json poly(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [mono, c] : p.terms()) terms.push_back({{"coeff", c}, {"vars", mono}});
  return terms;
}

json chains(const Embedding& e, const HostGraph& host) {
  json out = json::object();
  for (const auto& [v, chain] : e.chains) {
    json labels = json::array();
    for (int h : chain) labels.push_back(host.label(h));
    out[v] = labels;
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string polynomial_json(const Polynomial& p) { return dump(poly(p)); }

std::string quadratization_json(const QuadratizationResult& r) {
  json records = json::array();
  for (const auto& rec : r.ledger.records) {
    records.push_back({{"monomial", rec.monomial},
                       {"coefficient", rec.coefficient},
                       {"gadget", rec.gadget},
                       {"catalog_graph", rec.catalog_graph},
                       {"aux", rec.aux},
                       {"quadratization_aux", rec.quadratization_aux},
                       {"expected_total_aux", rec.expected_total_aux}});
  }
  return dump({{"quadratic", poly(r.quadratic)},
               {"quadratic_text", r.quadratic.to_string()},
               {"ledger",
                {{"records", records},
                 {"total_aux", r.ledger.total_aux},
                 {"expected_total_aux", r.ledger.expected_total_aux}}}});
}

std::string registry_json(const std::vector<RegistryEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) {
    out.push_back({{"name", e.name},
                   {"sign", e.sign},
                   {"degree", e.degree},
                   {"catalog_graph", e.catalog_graph},
                   {"formula", e.formula},
                   {"synthesized", e.synthesized}});
  }
  return dump(out);
}

std::string gadget_json(const Gadget& g) {
  return dump({{"target", {{"coefficient", g.target.coefficient}, {"vars", g.target.vars}}},
               {"aux", g.aux},
               {"quadratic", poly(g.quadratic)},
               {"provenance", g.provenance},
               {"exact", verify_gadget(g)}});
}

std::string synthesis_json(const SynthesisResult& r) {
  json j = {{"feasible", r.gadget.has_value()},
            {"stats",
             {{"nodes", r.stats.nodes},
              {"feasibility_calls", r.stats.feasibility_calls},
              {"leaves", r.stats.leaves},
              {"candidates", r.stats.candidates},
              {"pivots", r.stats.pivots}}}};
  if (r.gadget) {
    j["quadratic"] = poly(r.gadget->quadratic);
    j["aux"] = r.gadget->aux;
    j["certificate"] = r.certificate;
  }
  return dump(j);
}

std::string host_json(const HostGraph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return dump({{"name", g.name()},
               {"vertices", g.labels()},
               {"edges", edges},
               {"vertex_count", g.size()},
               {"edge_count", g.edge_count()},
               {"max_degree", g.max_degree()}});
}

std::string embedding_json(const Embedding& e, const HostGraph& host) {
  return dump({{"host", host.name()}, {"aux_count", e.aux_count()}, {"chains", chains(e, host)}});
}

std::string min_aux_json(const MinAuxResult& r, const HostGraph& host) {
  json j = {{"host", host.name()},
            {"complete", r.complete},
            {"nodes", r.nodes},
            {"report", r.report},
            {"min_aux", r.min_aux ? json(*r.min_aux) : json(nullptr)}};
  if (r.embedding) j["chains"] = chains(*r.embedding, host);
  return dump(j);
}

std::string qubo_json(const Qubo& q, const HostGraph& host) {
  json linear = json::array(), quadratic = json::array(), vars = json::array();
  for (int v : q.variables) vars.push_back(host.label(v));
  for (const auto& [v, c] : q.linear) linear.push_back({host.label(v), c});
  for (const auto& [uv, c] : q.quadratic)
    quadratic.push_back({host.label(uv.first), host.label(uv.second), c});
  return dump({{"host", host.name()},
               {"variables", vars},
               {"offset", q.offset},
               {"linear", linear},
               {"quadratic", quadratic}});
}

std::string solve_json(const SolveResult& s, const UnembedResult& u, const HostGraph& host) {
  json hostx = json::object();
  for (const auto& [h, b] : s.assignment) hostx[host.label(h)] = b;
  return dump({{"energy", s.energy},
               {"host_assignment", hostx},
               {"logical_assignment", u.logical},
               {"broken_chains", u.broken_chains}});
}

std::string tables_json(const TableReport& r, bool context) {
  json rows = json::array();
  auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  for (const auto& row : r.rows) {
    rows.push_back({{"graph", row.graph},
                    {"hardware", std::string(to_string(row.hardware))},
                    {"host", row.host},
                    {"max_chain_len", row.max_chain_len},
                    {"quadratization_aux", row.quadratization_aux},
                    {"embedding_aux", opt(row.embedding_aux)},
                    {"published_embedding_aux", row.published_embedding_aux},
                    {"total_aux", opt(row.total_aux)},
                    {"published_total_aux", row.published_total_aux},
                    {"complete", row.complete},
                    {"nodes", row.nodes},
                    {"match", row.match},
                    {"improvement", row.improvement},
                    {"exceeds", row.exceeds}});
  }
  json j = {{"rows", rows}, {"ok", r.ok()}};
  if (context) j["context"] = context_citations();
  return dump(j);
}

std::string factor_json(const FactorResult& r) {
  return dump({{"n", r.n},
               {"factors", {r.p, r.q}},
               {"logical_variables", r.logical_variables},
               {"quadratized_variables", r.quadratized_variables},
               {"host_qubits", r.host_qubits},
               {"energy", r.energy}});
}

std::string embedding_text(const Embedding& e, const HostGraph& host) {
  std::string out;
  for (const auto& [v, chain] : e.chains) {
    out += v + ": [";
    for (std::size_t i = 0; i < chain.size(); ++i) out += (i ? ", " : "") + host.label(chain[i]);
    out += "]\n";
  }
  return out;
}

}  // namespace qgadget
