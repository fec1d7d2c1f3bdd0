#include "qgadget/error.hpp"
#include "qgadget/pipeline.hpp"
#include "qgadget/report.hpp"

namespace qgadget {

namespace {

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<Var> vars = ma;
      vars.insert(vars.end(), mb.begin(), mb.end());
      out.add_term(std::move(vars), ca * cb);
    }
  }
  return out;
}

Polynomial odd_factor(const std::string& name) {
  Polynomial f = Polynomial::constant(1);
  f.add_term({name + "1"}, 2);
  f.add_term({name + "2"}, 4);
  return f;
}

int decode(const Assignment& s, const std::string& name) {
  return 1 + 2 * s.at(name + "1") + 4 * s.at(name + "2");
}

}  // namespace

Polynomial factoring_polynomial(int n) {
  if (n != 15 && n != 21 && n != 35) {
    throw Error("factor-demo: " + std::to_string(n) +
                " is not a supported semiprime (expected 15, 21 or 35)");
  }
  Polynomial residual = Polynomial::constant(n) + multiply(odd_factor("p"), odd_factor("q")).scaled(-1);
  return multiply(residual, residual);
}

FactorResult run_factor_demo(int n) {
  const Polynomial f = factoring_polynomial(n);
  PipelineOptions options;
  options.solver = Solver::exact;
  auto r = run_pipeline(f, options);
  FactorResult out;
  out.n = n;
  out.p = decode(r.assignment, "p");
  out.q = decode(r.assignment, "q");
  if (out.p > out.q) std::swap(out.p, out.q);
  out.logical_variables = static_cast<int>(f.variables().size());
  out.quadratized_variables = static_cast<int>(r.guest.vertex_count());
  out.host_qubits = static_cast<int>(r.embedding.host_vertex_count());
  out.energy = r.value;
  if (out.p * out.q != n || r.unembedded.broken_chains != 0) {
    throw Error("factor-demo: pipeline returned p=" + std::to_string(out.p) +
                ", q=" + std::to_string(out.q) + " for n=" + std::to_string(n));
  }
  return out;
}

}  // namespace qgadget
