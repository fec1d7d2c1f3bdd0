#include "qgadget/pipeline.hpp"

#include "qgadget/error.hpp"

namespace qgadget {

HostGraph default_host(Hardware hw) {
  return hw == Hardware::pegasus ? pegasus(2) : chimera(2, 2, 4);
}

PipelineResult run_pipeline(const Polynomial& p, const PipelineOptions& options) {
  PipelineResult r;
  r.quadratization = quadratize(p, QuadratizePolicy{options.hardware});
  std::vector<Var> aux;
  for (const auto& rec : r.quadratization.ledger.records)
    aux.insert(aux.end(), rec.aux.begin(), rec.aux.end());
  r.guest = interaction_graph(r.quadratization.quadratic, aux);

  const HostGraph host = options.host ? *options.host : default_host(options.hardware);
  const int guest_size = static_cast<int>(r.guest.vertex_count());
  EmbedLimits limits;
  limits.max_chain_len = options.max_chain_len;
  limits.node_budget = options.node_budget;
  limits.max_aux = static_cast<int>(host.size()) - guest_size;
  if (options.solver == Solver::exact) {
    limits.max_aux = std::min(limits.max_aux, static_cast<int>(kMaxExactVars) - guest_size);
  }
  if (limits.max_aux < 0) {
    throw Error("pipeline: quadratized problem has " + std::to_string(guest_size) +
                " variables, too many for " + host.name() +
                (options.solver == Solver::exact ? " and the exact solver" : ""));
  }
  auto placed = embed_large(r.guest, host, limits);
  if (!placed.embedding) throw Error("pipeline: embedding failed (" + placed.report + ")");
  r.embedding = *placed.embedding;

  r.qubo = assemble_qubo(r.quadratization.quadratic, r.embedding, host, options.chain_strength);
  r.solve = options.solver == Solver::exact ? solve_exact(r.qubo)
                                            : solve_sa(r.qubo, options.schedule, options.restarts);
  r.unembedded = unembed(r.solve.assignment, r.embedding);
  for (const auto& v : p.variables()) {
    auto it = r.unembedded.logical.find(v);
    r.assignment[v] = it == r.unembedded.logical.end() ? 0 : it->second;
  }
  r.value = p.evaluate(r.assignment);
  return r;
}

Coeff brute_force_minimum(const Polynomial& p) {
  DensePolynomial d(p);
  if (d.size() > kMaxEnumerationVars) throw Error("brute force: too many variables");
  Coeff best = d.evaluate(0);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << d.size()); ++s) best = std::min(best, d.evaluate(s));
  return best;
}

}  // namespace qgadget
