#include "qgadget/quadratize.hpp"

#include <algorithm>
#include <limits>

#include "qgadget/patterns.hpp"

namespace qgadget {

QuadratizationResult quadratize(const Polynomial& p, const QuadratizePolicy& policy) {
  return quadratize(p, policy, default_patterns());
}

QuadratizationResult quadratize(const Polynomial& p, const QuadratizePolicy& policy,
                                const PatternStore& patterns) {
  if (policy.objective != "min-total-aux") {
    throw Error("quadratize: unsupported objective '" + policy.objective + "'");
  }
  if (p.degree() > 4) {
    throw Error("quadratize: degree cap exceeded (degree " + std::to_string(p.degree()) +
                " > 4)");
  }

  const auto taken = p.variables();
  std::size_t counter = 0;
  auto fresh = [&]() {
    for (;;) {
      Var name = "aux" + std::to_string(counter++);
      if (!taken.count(name)) return name;
    }
  };

  QuadratizationResult out;
  for (const auto& [m, c] : p.terms()) {
    if (m.size() <= 2) {
      out.quadratic.add_term(m, c);
      continue;
    }
    const int sign = c < 0 ? -1 : 1;
    const int degree = static_cast<int>(m.size());
    const Recommendation rec = recommend(sign, degree, policy.hardware);
    const Gadget g = builtin_gadget(rec.gadget, sign, degree, patterns).scaled(c < 0 ? -c : c);

    std::map<Var, Var> names;
    for (std::size_t i = 0; i < m.size(); ++i) names[g.target.vars[i]] = m[i];
    LedgerRecord rec_out;
    for (const auto& a : g.aux) {
      names[a] = fresh();
      rec_out.aux.push_back(names[a]);
    }
    out.quadratic += g.quadratic.renamed(names);

    rec_out.monomial = m;
    rec_out.coefficient = c;
    rec_out.gadget = rec.gadget;
    rec_out.catalog_graph = rec.catalog_graph;
    rec_out.quadratization_aux = static_cast<int>(g.aux.size());
    rec_out.expected_total_aux = rec.expected_total_aux;
    out.ledger.total_aux += rec_out.quadratization_aux;
    out.ledger.expected_total_aux += rec_out.expected_total_aux;
    out.ledger.records.push_back(std::move(rec_out));
  }
  return out;
}

bool verify_quadratization(const Polynomial& original, const QuadratizationResult& result) {
  const auto orig_vars = original.variables();
  std::vector<Var> order(orig_vars.begin(), orig_vars.end());
  std::vector<Var> aux;
  for (const auto& r : result.ledger.records) aux.insert(aux.end(), r.aux.begin(), r.aux.end());
  std::vector<Var> all = order;
  all.insert(all.end(), aux.begin(), aux.end());
  if (all.size() > kMaxEnumerationVars) {
    throw Error("verify_quadratization: " + std::to_string(all.size()) +
                " variables exceed the enumeration bound");
  }
  for (const auto& v : result.quadratic.variables()) {
    if (std::find(all.begin(), all.end(), v) == all.end()) return false;
  }
  DensePolynomial p(original, order);
  DensePolynomial q(result.quadratic, all);
  const std::size_t nl = order.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << nl); ++s) {
    Coeff best = std::numeric_limits<Coeff>::max();
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << aux.size()); ++a) {
      best = std::min(best, q.evaluate(s | (a << nl)));
    }
    if (best != p.evaluate(s)) return false;
  }
  return true;
}

}  // namespace qgadget
