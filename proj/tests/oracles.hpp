#pragma once

// Brute-force reference implementations. They use only Polynomial::evaluate
// and raw edge lists, never the library's own search or verification code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qgadget/anneal.hpp"
#include "qgadget/embed.hpp"
#include "qgadget/gadget.hpp"
#include "qgadget/hardware.hpp"
#include "qgadget/polynomial.hpp"

namespace oracle {

using namespace qgadget;

// min over aux of q(s, a) == target(s) for every logical s.
inline bool gadget_exact(const Polynomial& q, const std::vector<Var>& logical,
                         const std::vector<Var>& aux, Coeff target_coeff) {
  const std::size_t L = logical.size(), A = aux.size();
  for (std::uint32_t s = 0; s < (1u << L); ++s) {
    Assignment x;
    bool all = true;
    for (std::size_t i = 0; i < L; ++i) {
      x[logical[i]] = (s >> i) & 1;
      all = all && x[logical[i]];
    }
    Coeff best = std::numeric_limits<Coeff>::max();
    for (std::uint32_t a = 0; a < (1u << A); ++a) {
      for (std::size_t j = 0; j < A; ++j) x[aux[j]] = (a >> j) & 1;
      best = std::min(best, q.evaluate(x));
    }
    if (best != (all ? target_coeff : 0)) return false;
  }
  return true;
}

inline bool gadget_exact(const Gadget& g) {
  return gadget_exact(g.quadratic, g.target.vars, g.aux, g.target.coefficient);
}

inline Coeff min_value(const Polynomial& p) {
  const auto vs = p.variables();
  const std::vector<Var> vars(vs.begin(), vs.end());
  Coeff best = std::numeric_limits<Coeff>::max();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << vars.size()); ++s) {
    Assignment x;
    for (std::size_t i = 0; i < vars.size(); ++i) x[vars[i]] = (s >> i) & 1;
    best = std::min(best, p.evaluate(x));
  }
  return best;
}

// min over aux of the quadratization equals p at every assignment of p's variables.
inline bool quadratization_exact(const Polynomial& p, const Polynomial& q2) {
  const auto pv = p.variables();
  const std::vector<Var> logical(pv.begin(), pv.end());
  std::vector<Var> aux;
  for (const auto& v : q2.variables())
    if (!pv.count(v)) aux.push_back(v);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << logical.size()); ++s) {
    Assignment x;
    for (std::size_t i = 0; i < logical.size(); ++i) x[logical[i]] = (s >> i) & 1;
    const Coeff want = p.evaluate(x);
    Coeff best = std::numeric_limits<Coeff>::max();
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << aux.size()); ++a) {
      for (std::size_t j = 0; j < aux.size(); ++j) x[aux[j]] = (a >> j) & 1;
      best = std::min(best, q2.evaluate(x));
    }
    if (best != want) return false;
  }
  return true;
}

inline Coeff qubo_min(const Qubo& q) {
  Coeff best = std::numeric_limits<Coeff>::max();
  const auto& vs = q.variables;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << vs.size()); ++s) {
    Coeff e = q.offset;
    std::map<int, int> x;
    for (std::size_t i = 0; i < vs.size(); ++i) x[vs[i]] = (s >> i) & 1;
    for (auto [v, c] : q.linear) e += c * x[v];
    for (auto [k, c] : q.quadratic) e += c * x[k.first] * x[k.second];
    best = std::min(best, e);
  }
  return best;
}

// Adjacency sets built from the raw edge list.
inline std::vector<std::set<int>> adjacency(const HostGraph& h) {
  std::vector<std::set<int>> adj(h.size());
  for (auto [a, b] : h.edges()) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  return adj;
}

inline bool connected(const std::vector<int>& chain, const std::vector<std::set<int>>& adj) {
  if (chain.empty()) return false;
  std::set<int> in(chain.begin(), chain.end()), seen{chain[0]};
  std::vector<int> stack{chain[0]};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (in.count(w) && seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == in.size();
}

inline bool embedding_valid(const GadgetGraph& guest, const HostGraph& host, const Embedding& e) {
  const auto adj = adjacency(host);
  std::set<int> used;
  for (const auto& v : guest.vertices()) {
    auto it = e.chains.find(v);
    if (it == e.chains.end() || !connected(it->second, adj)) return false;
    for (int h : it->second)
      if (!used.insert(h).second) return false;
  }
  for (const auto& [a, b] : guest.edges) {
    bool covered = false;
    for (int x : e.chains.at(a))
      for (int y : e.chains.at(b)) covered = covered || adj[x].count(y);
    if (!covered) return false;
  }
  return true;
}

// All connected host subsets of size 1..max_len.
inline std::vector<std::vector<int>> connected_subsets(const HostGraph& host, int max_len) {
  const auto adj = adjacency(host);
  std::set<std::vector<int>> out;
  std::function<void(std::vector<int>)> grow = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    if (!out.insert(s).second || static_cast<int>(s.size()) == max_len) return;
    for (int v : s)
      for (int w : adj[v])
        if (!std::count(s.begin(), s.end(), w)) {
          auto t = s;
          t.push_back(w);
          grow(t);
        }
  };
  for (std::size_t v = 0; v < host.size(); ++v) grow({static_cast<int>(v)});
  return {out.begin(), out.end()};
}

// Plain backtracking over every connected chain of bounded length; no
// symmetry breaking, no lookahead. Guests are placed in the given order.
inline bool embedding_exists(const GadgetGraph& guest, const HostGraph& host, int max_chain,
                             int max_aux) {
  const auto adj = adjacency(host);
  const auto subsets = connected_subsets(host, max_chain);
  const auto verts = guest.vertices();
  const std::size_t n = verts.size();
  std::vector<const std::vector<int>*> chosen(n, nullptr);
  std::vector<char> used(host.size(), 0);
  auto touches = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (int x : a)
      for (int y : b)
        if (adj[x].count(y)) return true;
    return false;
  };
  std::function<bool(std::size_t, int)> place = [&](std::size_t i, int aux_left) {
    if (i == n) return true;
    for (const auto& s : subsets) {
      const int extra = static_cast<int>(s.size()) - 1;
      if (extra > aux_left) continue;
      bool ok = true;
      for (int h : s) ok = ok && !used[h];
      for (std::size_t j = 0; ok && j < i; ++j)
        if (guest.has_edge(verts[i], verts[j])) ok = touches(s, *chosen[j]);
      if (!ok) continue;
      for (int h : s) used[h] = 1;
      chosen[i] = &s;
      if (place(i + 1, aux_left - extra)) return true;
      for (int h : s) used[h] = 0;
    }
    return false;
  };
  return place(0, max_aux);
}

// Random polynomial with up to `max_vars` variables, degree <= 4, integer
// coefficients in [-3, 3].
inline Polynomial random_polynomial(std::mt19937_64& rng, int max_vars, int max_terms) {
  const int nv = std::uniform_int_distribution<int>(1, max_vars)(rng);
  const int nt = std::uniform_int_distribution<int>(1, max_terms)(rng);
  std::map<Monomial, Coeff> terms;
  for (int k = 0; k < nt; ++k) {
    const int deg = std::uniform_int_distribution<int>(0, std::min(4, nv))(rng);
    std::vector<int> idx(nv);
    for (int i = 0; i < nv; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<Var> vs;
    for (int i = 0; i < deg; ++i) vs.push_back("v" + std::to_string(idx[i]));
    terms[make_monomial(vs)] = std::uniform_int_distribution<int>(-3, 3)(rng);
  }
  Polynomial p;
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

}  // namespace oracle
