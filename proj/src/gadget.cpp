#include "qgadget/gadget.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "qgadget/patterns.hpp"

namespace qgadget {

std::string_view to_string(Hardware h) { return h == Hardware::chimera ? "chimera" : "pegasus"; }

Hardware parse_hardware(std::string_view s) {
  if (s == "chimera") return Hardware::chimera;
  if (s == "pegasus") return Hardware::pegasus;
  throw Error("unknown hardware '" + std::string(s) + "' (expected chimera or pegasus)");
}

SignedMonomial standard_target(int sign, int degree) {
  if (sign != 1 && sign != -1) throw Error("target sign must be +1 or -1");
  if (degree < 1) throw Error("target degree must be positive");
  SignedMonomial t;
  t.coefficient = sign;
  for (int i = 1; i <= degree; ++i) t.vars.push_back("x" + std::to_string(i));
  return t;
}

std::vector<Var> Gadget::variables() const {
  std::vector<Var> v = target.vars;
  v.insert(v.end(), aux.begin(), aux.end());
  return v;
}

Gadget Gadget::scaled(Coeff factor) const {
  if (factor <= 0) throw Error("gadget scaling factor must be positive");
  Gadget g = *this;
  g.target.coefficient *= factor;
  g.quadratic = quadratic.scaled(factor);
  return g;
}

VerifyReport verify_gadget_report(const Gadget& g) {
  const auto vars = g.variables();
  if (vars.size() > kMaxEnumerationVars) {
    throw Error("verify_gadget: " + std::to_string(vars.size()) +
                " variables exceed the enumeration bound of " +
                std::to_string(kMaxEnumerationVars));
  }
  if (g.quadratic.degree() > 2) throw Error("verify_gadget: gadget polynomial has degree > 2");
  for (const auto& v : g.quadratic.variables()) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
      throw Error("verify_gadget: gadget uses undeclared variable '" + v + "'");
    }
  }
  DensePolynomial q(g.quadratic, vars);
  const std::size_t nl = g.target.vars.size();
  const std::size_t na = g.aux.size();
  const std::uint64_t full = (std::uint64_t{1} << nl) - 1;

  VerifyReport report;
  for (std::uint64_t s = 0; s <= full; ++s) {
    Coeff best = std::numeric_limits<Coeff>::max();
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << na); ++a) {
      best = std::min(best, q.evaluate(s | (a << nl)));
    }
    const Coeff expected = s == full ? g.target.coefficient : 0;
    if (best != expected) {
      report.exact = false;
      report.witness = static_cast<std::uint32_t>(s);
      report.expected = expected;
      report.minimum = best;
      return report;
    }
  }
  return report;
}

bool verify_gadget(const Gadget& g) { return verify_gadget_report(g).exact; }

GadgetGraph extract_graph(const Gadget& g) {
  GadgetGraph graph("", g.target.vars, g.aux);
  for (const auto& [m, c] : g.quadratic.terms()) {
    if (m.size() == 2 && c != 0) graph.add_edge(m[0], m[1]);
  }
  return graph;
}

namespace {

const std::vector<RegistryEntry>& fixed_registry() {
  static const std::vector<RegistryEntry> entries = {
      {"NTR-KZFD", -1, 3, "Propeller", "a((d-1) - S1)"},
      {"NTR-KZFD", -1, 4, "X", "a((d-1) - S1)"},
      {"PTR-Ishikawa", 1, 3, "K4", "w(1 - S1) + S2"},
      {"PTR-CoatHanger", 1, 3, "Coat-Hanger", "x2x3 + a(1 + x1 - x2 - x3)"},
      {"PTR-K5", 1, 4, "K5-1aux", "w(3 - 2 S1) + S2"},
      {"PTR-PAIR", 1, 4, "",
       "a1a2 + (x1x2 - 2a1x1 - 2a1x2 + 3a1) + (x3x4 - 2a2x3 - 2a2x4 + 3a2)"},
  };
  return entries;
}

// Registry ids for gadgets synthesized onto pattern-dependent catalog graphs.
constexpr std::pair<const char*, const char*> kSynthesized[] = {
    {"SYN-K6-4e", "K6-4e"},
    {"SYN-K6-e", "K6-e"},
};

Polynomial s2(const std::vector<Var>& x) {
  Polynomial p;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) p.add_term({x[i], x[j]}, 1);
  return p;
}

// a * (offset + scale * S1)
Polynomial aux_times_affine(const Var& a, Coeff offset, Coeff scale, const std::vector<Var>& x) {
  Polynomial p = Polynomial::term(offset, {a});
  for (const auto& xi : x) p.add_term({a, xi}, scale);
  return p;
}

Gadget fixed_gadget(const RegistryEntry& e) {
  Gadget g;
  g.target = standard_target(e.sign, e.degree);
  g.provenance = e.name;
  const auto& x = g.target.vars;
  if (e.name == "NTR-KZFD") {
    g.aux = {"a1"};
    g.quadratic = aux_times_affine("a1", e.degree - 1, -1, x);
  } else if (e.name == "PTR-Ishikawa") {
    g.aux = {"a1"};
    g.quadratic = aux_times_affine("a1", 1, -1, x) + s2(x);
  } else if (e.name == "PTR-CoatHanger") {
    g.aux = {"a1"};
    g.quadratic = Polynomial::term(1, {"x2", "x3"});
    g.quadratic.add_term({"a1"}, 1);
    g.quadratic.add_term({"a1", "x1"}, 1);
    g.quadratic.add_term({"a1", "x2"}, -1);
    g.quadratic.add_term({"a1", "x3"}, -1);
  } else if (e.name == "PTR-K5") {
    g.aux = {"a1"};
    g.quadratic = aux_times_affine("a1", 3, -2, x) + s2(x);
  } else if (e.name == "PTR-PAIR") {
    g.aux = {"a1", "a2"};
    Polynomial& q = g.quadratic;
    q.add_term({"a1", "a2"}, 1);
    for (auto [a, u, v] : {std::tuple{"a1", "x1", "x2"}, std::tuple{"a2", "x3", "x4"}}) {
      q.add_term({u, v}, 1);
      q.add_term({a, u}, -2);
      q.add_term({a, v}, -2);
      q.add_term({a}, 3);
    }
  }
  return g;
}

// One-line form such as "4a1 + 2a2 - 3a1x1".
std::string inline_formula(const Polynomial& q) {
  std::istringstream lines(q.to_string());
  std::string line, out;
  while (std::getline(lines, line)) {
    std::istringstream ls(line);
    Coeff c;
    ls >> c;
    std::string mono, tok;
    ls >> tok;  // ':'
    while (ls >> tok) mono += tok;
    const Coeff mag = c < 0 ? -c : c;
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (mag != 1 || mono.empty()) out += std::to_string(mag);
    out += mono;
  }
  return out.empty() ? "0" : out;
}

std::string describe(const RegistryEntry& e) {
  return e.name + "(" + (e.sign > 0 ? "+" : "-") + "," + std::to_string(e.degree) + ")";
}

}  // namespace

std::vector<RegistryEntry> registry_entries() { return registry_entries(default_patterns()); }

std::vector<RegistryEntry> registry_entries(const PatternStore& patterns) {
  std::vector<RegistryEntry> out = fixed_registry();
  for (auto [id, graph] : kSynthesized) {
    if (const auto* p = patterns.find(graph)) {
      out.push_back({id, p->target_sign, p->degree, graph, inline_formula(p->quadratic), true});
    }
  }
  return out;
}

Gadget builtin_gadget(std::string_view name, int sign, int degree) {
  return builtin_gadget(name, sign, degree, default_patterns());
}

Gadget builtin_gadget(std::string_view name, int sign, int degree, const PatternStore& patterns) {
  for (const auto& e : fixed_registry()) {
    if (e.name == name && e.sign == sign && e.degree == degree) return fixed_gadget(e);
  }
  for (auto [id, graph] : kSynthesized) {
    if (name != id) continue;
    const ResolvedPattern& p = patterns.require(graph);
    if (p.target_sign != sign || p.degree != degree) break;
    Gadget g;
    g.target = standard_target(sign, degree);
    g.aux = p.graph.aux;
    g.quadratic = p.quadratic;
    g.provenance = std::string("synthesized:") + graph;
    return g;
  }
  std::string known;
  for (const auto& e : registry_entries(patterns)) known += (known.empty() ? "" : ", ") + describe(e);
  throw Error("no registry gadget " + std::string(name) + "(" + (sign > 0 ? "+" : "-") + "," +
              std::to_string(degree) + "); available: " + known);
}

Recommendation recommend(int sign, int degree, Hardware hardware) {
  if (degree != 3 && degree != 4) {
    throw Error("recommend: unsupported degree " + std::to_string(degree) + " (expected 3 or 4)");
  }
  if (sign != 1 && sign != -1) throw Error("recommend: sign must be +1 or -1");

  std::vector<RegistryEntry> candidates;
  for (const auto& e : fixed_registry()) candidates.push_back(e);
  // Synthesized classes are candidates whether or not a pattern is loaded;
  // instantiating the gadget is what requires the pattern.
  for (auto [id, graph] : kSynthesized) candidates.push_back({id, 1, 4, graph, "", true});

  const RegistryEntry* best = nullptr;
  int best_total = 0, best_quad = 0;
  for (const auto& e : candidates) {
    if (e.sign != sign || e.degree != degree || e.catalog_graph.empty()) continue;
    const auto& acc = accounting_for(e.catalog_graph);
    int total = hardware == Hardware::chimera ? acc.chimera_total_aux : acc.pegasus_total_aux;
    if (!best || total < best_total || (total == best_total && acc.quadratization_aux < best_quad)) {
      best = &e;
      best_total = total;
      best_quad = acc.quadratization_aux;
    }
  }
  if (!best) throw Error("recommend: no catalogued gadget for this term");
  return {best->name, best->catalog_graph, best_quad, best_total};
}

}  // namespace qgadget
