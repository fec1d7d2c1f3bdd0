#include "qgadget/synth.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <set>

#include "qgadget/embed.hpp"
#include "qgadget/hardware.hpp"
#include "qgadget/rational_lp.hpp"

namespace qgadget {

namespace {

using Row = std::vector<Coeff>;

// Aux masks (bit j = aux j) in lexicographic order of (a1, ..., aA).
std::vector<std::uint32_t> lex_masks(std::size_t n_aux) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = 0; r < (1u << n_aux); ++r) {
    std::uint32_t mask = 0;
    for (std::size_t j = 0; j < n_aux; ++j) {
      if (r >> (n_aux - 1 - j) & 1u) mask |= 1u << j;
    }
    out.push_back(mask);
  }
  return out;
}

std::vector<std::uint32_t> certificate_of(const Gadget& g) {
  const auto vars = g.variables();
  DensePolynomial q(g.quadratic, vars);
  const std::size_t nl = g.target.vars.size();
  const auto order = lex_masks(g.aux.size());
  std::vector<std::uint32_t> cert;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << nl); ++s) {
    Coeff best = std::numeric_limits<Coeff>::max();
    std::uint32_t arg = 0;
    for (auto a : order) {
      Coeff v = q.evaluate(s | (std::uint64_t{a} << nl));
      if (v < best) {
        best = v;
        arg = a;
      }
    }
    cert.push_back(arg);
  }
  return cert;
}

void check_problem(const SynthesisProblem& p) {
  const auto& g = p.template_graph;
  g.validate();
  if (g.aux.size() > 3) throw Error("synthesize: at most 3 auxiliary vertices are supported");
  if (g.vertex_count() > 8) throw Error("synthesize: at most 8 template vertices are supported");
  if (p.coeff_bound < 1) throw Error("synthesize: coefficient bound must be at least 1");
  if (p.target.coefficient == 0) throw Error("synthesize: target coefficient must be nonzero");
  if (p.target.vars != g.logical) {
    throw Error("synthesize: target variables must equal the template's logical vertices");
  }
}

// Everything the certificate search needs about a template.
struct Layout {
  std::size_t nl = 0, na = 0, k = 0;
  std::vector<std::pair<int, int>> la, aa;  // dense (logical, aux index) / (aux, aux)
  std::set<std::pair<int, int>> ll;
  std::vector<std::vector<Row>> g_rows;  // [s][a]

  explicit Layout(const GadgetGraph& g) : nl(g.logical.size()), na(g.aux.size()) {
    for (auto [i, j] : g.dense_edges()) {
      const int L = static_cast<int>(nl);
      if (j < L) ll.insert({i, j});
      else if (i < L) la.push_back({i, j - L});
      else aa.push_back({i - L, j - L});
    }
    k = na + la.size() + aa.size();
    g_rows.assign(std::size_t{1} << nl, std::vector<Row>(std::size_t{1} << na, Row(k, 0)));
    for (std::uint32_t s = 0; s < (1u << nl); ++s) {
      for (std::uint32_t a = 0; a < (1u << na); ++a) {
        Row& r = g_rows[s][a];
        for (std::size_t j = 0; j < na; ++j) r[j] = a >> j & 1u;
        for (std::size_t e = 0; e < la.size(); ++e)
          r[na + e] = (s >> la[e].first & 1u) & (a >> la[e].second & 1u);
        for (std::size_t e = 0; e < aa.size(); ++e)
          r[na + la.size() + e] = (a >> aa[e].first & 1u) & (a >> aa[e].second & 1u);
      }
    }
  }

  std::vector<Var> y_names(const GadgetGraph& g) const {
    std::vector<Var> out;
    for (std::size_t j = 0; j < na; ++j) out.push_back(g.aux[j]);
    for (auto [i, j] : la) out.push_back(g.logical[i] + "*" + g.aux[j]);
    for (auto [i, j] : aa) out.push_back(g.aux[i] + "*" + g.aux[j]);
    return out;
  }
};

class CertificateSearch {
 public:
  CertificateSearch(const SynthesisProblem& p, SynthesisStats& stats)
      : p_(p), lay_(p.template_graph), stats_(stats),
        sys_(lay_.k, -p.coeff_bound, p.coeff_bound), order_(lex_masks(lay_.na)),
        alpha_(std::size_t{1} << lay_.nl, 0), full_((1u << lay_.nl) - 1) {}

  std::optional<Gadget> run() {
    lp::SolverStats lps;
    lp_ = &lps;
    std::optional<Gadget> out;
    if (lp::feasible(sys_, lp_)) {
      ++stats_.feasibility_calls;
      out = dfs(0);
    }
    stats_.pivots += lps.pivots;
    return out;
  }

 private:
  Coeff mobius_target(std::uint32_t subset) const {
    return subset == full_ ? p_.target.coefficient : 0;
  }

  // Row r with r . y = m_S(g) under the current certificate.
  Row mobius_row(std::uint32_t subset) const {
    Row r(lay_.k, 0);
    const int size = std::popcount(subset);
    for (std::uint32_t t = subset;; t = (t - 1) & subset) {
      const Coeff sign = (size - std::popcount(t)) % 2 ? -1 : 1;
      const Row& g = lay_.g_rows[t][alpha_[t]];
      for (std::size_t j = 0; j < lay_.k; ++j) r[j] += sign * g[j];
      if (t == 0) break;
    }
    return r;
  }

  void add_subset_constraint(std::uint32_t subset) {
    const int size = std::popcount(subset);
    Row r = mobius_row(subset);
    const Coeff mt = mobius_target(subset);
    bool must_vanish = size >= 3;
    if (size == 2) {
      const int i = std::countr_zero(subset);
      const int j = 31 - std::countl_zero(subset);
      must_vanish = !lay_.ll.count({i, j});
    }
    if (must_vanish) {
      sys_.add(std::move(r), lp::Relation::eq, mt);
    } else {
      // The logical coefficient mt - r.y must lie in [-C, C].
      sys_.add(r, lp::Relation::le, mt + p_.coeff_bound);
      sys_.add(std::move(r), lp::Relation::ge, mt - p_.coeff_bound);
    }
  }

  std::optional<Gadget> dfs(std::uint32_t s) {
    ++stats_.nodes;
    if (s > full_) return leaf();
    for (std::size_t ai = 0; ai < order_.size(); ++ai) {
      const std::uint32_t a = order_[ai];
      const std::size_t mark = sys_.size();
      const Row& ga = lay_.g_rows[s][a];
      for (std::size_t bi = 0; bi < order_.size(); ++bi) {
        if (bi == ai) continue;
        const Row& gb = lay_.g_rows[s][order_[bi]];
        Row d(lay_.k);
        for (std::size_t j = 0; j < lay_.k; ++j) d[j] = gb[j] - ga[j];
        // Lexicographically earlier assignments must be strictly worse.
        sys_.add(std::move(d), lp::Relation::ge, bi < ai ? 1 : 0);
      }
      alpha_[s] = a;
      if (required_pair(s)) {
        // The pair's logical coefficient is final once s is placed; branch
        // on its sign here instead of discovering a zero at the leaves.
        const Row r = mobius_row(s);
        const Coeff mt = mobius_target(s);
        for (int sign : {1, -1}) {
          const std::size_t inner = sys_.size();
          if (sign > 0) {
            sys_.add(r, lp::Relation::le, mt - 1);
            sys_.add(r, lp::Relation::ge, mt - p_.coeff_bound);
          } else {
            sys_.add(r, lp::Relation::ge, mt + 1);
            sys_.add(r, lp::Relation::le, mt + p_.coeff_bound);
          }
          ++stats_.feasibility_calls;
          if (lp::feasible(sys_, lp_)) {
            if (auto g = dfs(s + 1)) return g;
          }
          sys_.truncate(inner);
        }
      } else {
        add_subset_constraint(s);
        ++stats_.feasibility_calls;
        if (lp::feasible(sys_, lp_)) {
          if (auto g = dfs(s + 1)) return g;
        }
      }
      sys_.truncate(mark);
    }
    return std::nullopt;
  }

  // A logical edge of the template whose coefficient must be nonzero.
  bool required_pair(std::uint32_t subset) const {
    if (!p_.require_all_edges || std::popcount(subset) != 2) return false;
    return lay_.ll.count({std::countr_zero(subset), 31 - std::countl_zero(subset)}) > 0;
  }

  std::optional<Gadget> leaf() {
    ++stats_.leaves;
    std::vector<bool> nonzero(lay_.k, false);
    if (p_.require_all_edges) {
      for (std::size_t j = lay_.na; j < lay_.k; ++j) nonzero[j] = true;
    }
    std::optional<Gadget> found;
    lp::enumerate_integer_points(
        sys_, nonzero,
        [&](const std::vector<Coeff>& y) {
          ++stats_.candidates;
          found = build(y);
          return !found.has_value();
        },
        lp_);
    return found;
  }

  std::optional<Gadget> build(const std::vector<Coeff>& y) const {
    const auto& tg = p_.template_graph;
    Polynomial q;
    for (std::size_t j = 0; j < lay_.na; ++j) q.add_term({tg.aux[j]}, y[j]);
    for (std::size_t e = 0; e < lay_.la.size(); ++e)
      q.add_term({tg.logical[lay_.la[e].first], tg.aux[lay_.la[e].second]}, y[lay_.na + e]);
    for (std::size_t e = 0; e < lay_.aa.size(); ++e)
      q.add_term({tg.aux[lay_.aa[e].first], tg.aux[lay_.aa[e].second]},
                 y[lay_.na + lay_.la.size() + e]);
    // Logical part: Moebius coefficients of t - g on subsets of size <= 2.
    for (std::uint32_t subset = 0; subset <= full_; ++subset) {
      const int size = std::popcount(subset);
      if (size > 2) continue;
      Row r = mobius_row(subset);
      Coeff c = mobius_target(subset);
      for (std::size_t j = 0; j < lay_.k; ++j) c -= r[j] * y[j];
      std::vector<Var> vars;
      for (std::size_t i = 0; i < lay_.nl; ++i)
        if (subset >> i & 1u) vars.push_back(tg.logical[i]);
      if (size == 2 && p_.require_all_edges && lay_.ll.count({std::countr_zero(subset),
                                                               31 - std::countl_zero(subset)}) &&
          c == 0) {
        return std::nullopt;
      }
      q.add_term(std::move(vars), c);
    }
    Gadget g;
    g.target = p_.target;
    g.aux = tg.aux;
    g.quadratic = std::move(q);
    g.provenance = "synthesized";
    if (!verify_gadget(g)) throw Error("synthesize: internal error, certificate gadget is not exact");
    return g;
  }

  const SynthesisProblem& p_;
  Layout lay_;
  SynthesisStats& stats_;
  lp::LinearSystem sys_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> alpha_;
  std::uint32_t full_;
  lp::SolverStats* lp_ = nullptr;
};

std::optional<Gadget> grid_search(const SynthesisProblem& p, SynthesisStats& stats) {
  const auto& tg = p.template_graph;
  const std::size_t k = coefficient_count(tg);
  if (k > 10) {
    throw Error("synthesize: grid search needs at most 10 coefficients, template has " +
                std::to_string(k));
  }
  const std::size_t nl = tg.logical.size(), na = tg.aux.size(), n = nl + na;
  const auto edges = tg.dense_edges();
  // Monomial indicator for each (s, a): constant, vertices, edges.
  const std::uint32_t full = (1u << nl) - 1;
  std::vector<std::vector<std::vector<Coeff>>> ind(full + 1);
  for (std::uint32_t s = 0; s <= full; ++s) {
    for (std::uint32_t a = 0; a < (1u << na); ++a) {
      const std::uint32_t x = s | (a << nl);
      std::vector<Coeff> r(k, 0);
      r[0] = 1;
      for (std::size_t v = 0; v < n; ++v) r[1 + v] = x >> v & 1u;
      for (std::size_t e = 0; e < edges.size(); ++e)
        r[1 + n + e] = (x >> edges[e].first & 1u) & (x >> edges[e].second & 1u);
      ind[s].push_back(std::move(r));
    }
  }
  const Coeff C = p.coeff_bound;
  std::vector<Coeff> c(k, -C);
  auto skip_zero = [&](std::size_t j) { return p.require_all_edges && j >= 1 + n; };
  for (std::size_t j = 0; j < k; ++j)
    if (skip_zero(j) && c[j] == 0) c[j] = 1;

  for (;;) {
    ++stats.candidates;
    bool ok = true;
    for (std::uint32_t s = full + 1; s-- > 0 && ok;) {
      Coeff best = std::numeric_limits<Coeff>::max();
      for (const auto& r : ind[s]) {
        Coeff v = 0;
        for (std::size_t j = 0; j < k; ++j) v += r[j] * c[j];
        best = std::min(best, v);
      }
      ok = best == (s == full ? p.target.coefficient : 0);
    }
    if (ok) {
      Gadget g;
      g.target = p.target;
      g.aux = tg.aux;
      g.provenance = "synthesized";
      auto vs = tg.vertices();
      g.quadratic.add_term({}, c[0]);
      for (std::size_t v = 0; v < n; ++v) g.quadratic.add_term({vs[v]}, c[1 + v]);
      for (std::size_t e = 0; e < edges.size(); ++e)
        g.quadratic.add_term({vs[edges[e].first], vs[edges[e].second]}, c[1 + n + e]);
      return g;
    }
    // Odometer, last coefficient fastest.
    std::size_t j = k;
    for (;;) {
      if (j == 0) return std::nullopt;
      --j;
      if (c[j] < C) {
        ++c[j];
        if (skip_zero(j) && c[j] == 0) ++c[j];
        if (c[j] <= C) break;
      }
      c[j] = -C;
    }
    for (std::size_t i = j + 1; i < k; ++i) c[i] = -C;
  }
}

}  // namespace

std::size_t coefficient_count(const GadgetGraph& g) { return 1 + g.vertex_count() + g.edges.size(); }

SynthesisResult synthesize(const SynthesisProblem& problem, SynthesisMethod method) {
  check_problem(problem);
  SynthesisResult result;
  if (method == SynthesisMethod::grid) {
    result.gadget = grid_search(problem, result.stats);
  } else {
    result.gadget = CertificateSearch(problem, result.stats).run();
  }
  if (result.gadget) result.certificate = certificate_of(*result.gadget);
  return result;
}

namespace {

int min_aux_on(const GadgetGraph& g, const HostGraph& host, int max_chain_len) {
  EmbedLimits limits;
  limits.max_aux = static_cast<int>(std::min<std::size_t>(host.size() - g.vertex_count(), 16));
  limits.max_chain_len = max_chain_len;
  auto r = min_aux(g, host, limits);
  return r.min_aux ? *r.min_aux : 999;
}

// Embedding aux on one Chimera cell, ties broken by embedding aux on pegasus(2).
int default_rank(const GadgetGraph& g) {
  static const HostGraph cell = chimera(1, 1, 4);
  static const HostGraph peg = pegasus(2);
  return 1000 * min_aux_on(g, cell, 3) + min_aux_on(g, peg, 2);
}

std::string pattern_name(int removed) {
  if (removed == 1) return "K6-e";
  return "K6-" + std::to_string(removed) + "e";
}

}  // namespace

std::vector<ResolvedCandidate> catalog_pattern_candidates(int removed_edges,
                                                          const ResolveOptions& options) {
  if (removed_edges == 15) {
    throw Error("resolve_catalog_pattern: removing all 15 edges leaves a degenerate template");
  }
  if (removed_edges < 1 || removed_edges > 15) {
    throw Error("resolve_catalog_pattern: removed edge count must be between 1 and 14");
  }
  const GadgetGraph base = catalog_graph("K6");
  const auto all = base.dense_edges();
  std::map<std::vector<std::pair<int, int>>, GadgetGraph> unique;
  std::vector<bool> pick(all.size(), false);
  std::fill(pick.end() - removed_edges, pick.end(), true);
  do {
    std::vector<std::pair<int, int>> kept;
    for (std::size_t e = 0; e < all.size(); ++e)
      if (!pick[e]) kept.push_back(all[e]);
    GadgetGraph g = make_gadget_graph(pattern_name(removed_edges), 4, 2, kept);
    auto code = canonical_edges(g);
    if (!unique.count(code)) {
      unique.emplace(code, make_gadget_graph(pattern_name(removed_edges), 4, 2, code));
    }
  } while (std::next_permutation(pick.begin(), pick.end()));

  auto rank = options.rank ? options.rank : default_rank;
  std::vector<ResolvedCandidate> out;
  for (auto& [code, g] : unique) out.push_back({g, rank(g), false});
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.rank < b.rank; });
  return out;
}

ResolvedPattern resolve_catalog_pattern(int removed_edges, int target_sign,
                                        const ResolveOptions& options,
                                        std::vector<ResolvedCandidate>* tried) {
  auto candidates = catalog_pattern_candidates(removed_edges, options);
  const GadgetGraph base = catalog_graph("K6");
  for (auto& cand : candidates) {
    SynthesisProblem prob{standard_target(target_sign, 4), cand.graph, options.coeff_bound, true};
    auto res = synthesize(prob);
    cand.feasible = res.gadget.has_value();
    if (tried) tried->push_back(cand);
    if (!res.gadget) continue;

    ResolvedPattern out;
    out.graph_name = pattern_name(removed_edges);
    out.graph = cand.graph;
    for (const auto& e : base.edges)
      if (!cand.graph.edges.count(e)) out.removed_edges.push_back(e);
    out.target_sign = target_sign;
    out.degree = 4;
    out.quadratic = res.gadget->quadratic;
    out.coeff_bound = options.coeff_bound;
    out.provenance = "resolve_catalog_pattern(remove " + std::to_string(removed_edges) +
                     ", sign " + (target_sign > 0 ? "+" : "-") + ", C=" +
                     std::to_string(options.coeff_bound) + ", rank=" +
                     (options.rank ? "custom" : "chimera(1,1,4) then pegasus(2) min aux") + ")";
    return out;
  }
  throw Error("resolve_catalog_pattern: no pattern admits an exact gadget with coefficients in [-" +
              std::to_string(options.coeff_bound) + ", " + std::to_string(options.coeff_bound) +
              "]; retry with a larger coefficient bound");
}

}  // namespace qgadget
