#include "qgadget/anneal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <queue>
#include <random>
#include <set>

#include "qgadget/error.hpp"

namespace qgadget {

Coeff Qubo::energy(const HostAssignment& x) const {
  auto bit = [&](int v) {
    auto it = x.find(v);
    if (it == x.end()) throw Error("qubo energy: no value for host vertex " + std::to_string(v));
    return it->second;
  };
  Coeff e = offset;
  for (const auto& [v, c] : linear) e += c * bit(v);
  for (const auto& [uv, c] : quadratic) e += c * bit(uv.first) * bit(uv.second);
  return e;
}

Coeff default_chain_strength(const Polynomial& q2) {
  Coeff s = 1;
  for (const auto& [m, c] : q2.terms()) s += c < 0 ? -c : c;
  return s;
}

Qubo assemble_qubo(const Polynomial& q2, const Embedding& e, const HostGraph& host,
                   std::optional<Coeff> chain_strength) {
  if (q2.degree() > 2) throw Error("assemble_qubo: polynomial has degree above 2");
  const Coeff lambda = chain_strength.value_or(default_chain_strength(q2));
  if (lambda < 0) throw Error("assemble_qubo: chain strength must be non-negative");
  auto chain_of = [&](const Var& v) -> const std::vector<int>& {
    auto it = e.chains.find(v);
    if (it == e.chains.end() || it->second.empty()) {
      throw Error("assemble_qubo: variable " + v + " has no chain");
    }
    return it->second;
  };

  Qubo q;
  std::set<int> vars;
  for (const auto& [v, chain] : e.chains) vars.insert(chain.begin(), chain.end());
  q.variables.assign(vars.begin(), vars.end());

  auto add_quad = [&](int a, int b, Coeff c) {
    if (a > b) std::swap(a, b);
    Coeff& slot = q.quadratic[{a, b}];
    slot += c;
    if (slot == 0) q.quadratic.erase({a, b});
  };
  auto add_lin = [&](int a, Coeff c) {
    Coeff& slot = q.linear[a];
    slot += c;
    if (slot == 0) q.linear.erase(a);
  };

  for (const auto& [mono, c] : q2.terms()) {
    if (mono.empty()) {
      q.offset += c;
    } else if (mono.size() == 1) {
      add_lin(chain_of(mono[0]).front(), c);
    } else {
      const auto& ca = chain_of(mono[0]);
      const auto& cb = chain_of(mono[1]);
      std::optional<std::pair<int, int>> edge;
      for (int a : ca) {
        for (int b : host.neighbors(a)) {
          if (std::binary_search(cb.begin(), cb.end(), b)) {
            edge = {a, b};
            break;
          }
        }
        if (edge) break;
      }
      if (!edge) {
        throw Error("assemble_qubo: no host edge covers the term " + mono[0] + "*" + mono[1]);
      }
      add_quad(edge->first, edge->second, c);
    }
  }

  for (const auto& [v, chain] : e.chains) {
    std::set<int> members(chain.begin(), chain.end());
    std::set<int> seen{chain.front()};
    std::queue<int> frontier;
    frontier.push(chain.front());
    while (!frontier.empty()) {
      int a = frontier.front();
      frontier.pop();
      for (int b : host.neighbors(a)) {
        if (!members.count(b) || !seen.insert(b).second) continue;
        frontier.push(b);
        add_lin(a, lambda);
        add_lin(b, lambda);
        add_quad(a, b, -2 * lambda);
      }
    }
    if (seen.size() != members.size()) throw Error("assemble_qubo: chain of " + v + " is disconnected");
  }
  return q;
}

namespace {

struct DenseQubo {
  std::vector<int> vars;
  std::vector<Coeff> h;
  std::vector<std::vector<std::pair<int, Coeff>>> adj;
  Coeff offset = 0;

  explicit DenseQubo(const Qubo& q) : vars(q.variables), offset(q.offset) {
    std::set<int> all(vars.begin(), vars.end());
    for (const auto& [v, c] : q.linear) all.insert(v);
    for (const auto& [uv, c] : q.quadratic) {
      all.insert(uv.first);
      all.insert(uv.second);
    }
    vars.assign(all.begin(), all.end());
    std::map<int, int> idx;
    for (std::size_t i = 0; i < vars.size(); ++i) idx[vars[i]] = static_cast<int>(i);
    h.assign(vars.size(), 0);
    adj.assign(vars.size(), {});
    for (const auto& [v, c] : q.linear) h[idx[v]] += c;
    for (const auto& [uv, c] : q.quadratic) {
      int a = idx[uv.first], b = idx[uv.second];
      adj[a].emplace_back(b, c);
      adj[b].emplace_back(a, c);
    }
  }

  // Energy change from flipping bit i.
  Coeff delta(const std::vector<int>& x, int i) const {
    Coeff field = h[i];
    for (auto [j, c] : adj[i]) field += c * x[j];
    return x[i] ? -field : field;
  }

  Coeff energy(const std::vector<int>& x) const {
    Coeff e = offset;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x[i]) continue;
      e += h[i];
      for (auto [j, c] : adj[i])
        if (static_cast<std::size_t>(j) > i) e += c * x[j];
    }
    return e;
  }

  HostAssignment to_assignment(const std::vector<int>& x) const {
    HostAssignment out;
    for (std::size_t i = 0; i < vars.size(); ++i) out[vars[i]] = x[i];
    return out;
  }
};

}  // namespace

SolveResult solve_exact(const Qubo& q) {
  DenseQubo d(q);
  const std::size_t n = d.vars.size();
  if (n > kMaxExactVars) {
    throw Error("solve_exact: " + std::to_string(n) + " variables exceeds the limit of " +
                std::to_string(kMaxExactVars));
  }
  // Gray-code walk; the lexicographic key puts variable 0 in the top bit.
  std::vector<int> x(n, 0);
  Coeff e = d.offset;
  Coeff best = e;
  std::uint64_t key = 0, best_key = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int i = std::countr_zero(step);
    e += d.delta(x, i);
    x[i] ^= 1;
    key ^= std::uint64_t{1} << (n - 1 - i);
    if (e < best || (e == best && key < best_key)) {
      best = e;
      best_key = key;
    }
  }
  std::vector<int> bx(n);
  for (std::size_t i = 0; i < n; ++i) bx[i] = static_cast<int>(best_key >> (n - 1 - i) & 1);
  return {d.to_assignment(bx), best};
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::pair<std::vector<int>, Coeff> anneal_once(const DenseQubo& d, double beta0, double beta1,
                                               std::uint64_t sweeps, std::uint64_t seed) {
  const std::size_t n = d.vars.size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<int> x(n);
  for (auto& b : x) b = static_cast<int>(rng() & 1);
  Coeff e = d.energy(x);
  std::vector<int> best_x = x;
  Coeff best = e;
  for (std::uint64_t s = 0; s < sweeps; ++s) {
    const double t = sweeps > 1 ? static_cast<double>(s) / static_cast<double>(sweeps - 1) : 1.0;
    const double beta = beta0 * std::pow(beta1 / beta0, t);
    for (std::size_t i = 0; i < n; ++i) {
      const Coeff de = d.delta(x, static_cast<int>(i));
      if (de <= 0 || unit(rng) < std::exp(-beta * static_cast<double>(de))) {
        x[i] ^= 1;
        e += de;
        if (e < best) {
          best = e;
          best_x = x;
        }
      }
    }
  }
  return {best_x, best};
}

}  // namespace

SolveResult solve_sa(const Qubo& q, const Schedule& schedule, int restarts) {
  if (schedule.sweeps < 1) throw Error("solve_sa: sweeps must be at least 1");
  if (restarts < 1) throw Error("solve_sa: restarts must be at least 1");
  DenseQubo d(q);
  if (d.vars.empty()) return {{}, d.offset};

  double max_field = 1.0;
  for (std::size_t i = 0; i < d.vars.size(); ++i) {
    double f = std::abs(static_cast<double>(d.h[i]));
    for (auto [j, c] : d.adj[i]) f += std::abs(static_cast<double>(c));
    max_field = std::max(max_field, f);
  }
  const double beta0 = schedule.beta_initial.value_or(std::log(2.0) / max_field);
  const double beta1 = schedule.beta_final.value_or(std::log(100.0));
  if (!(beta0 > 0) || !(beta1 > 0)) throw Error("solve_sa: inverse temperatures must be positive");

  std::vector<std::future<std::pair<std::vector<int>, Coeff>>> runs;
  for (int r = 0; r < restarts; ++r) {
    const std::uint64_t seed = splitmix64(schedule.seed ^ splitmix64(static_cast<std::uint64_t>(r)));
    runs.push_back(std::async(std::launch::async, anneal_once, std::cref(d), beta0, beta1,
                              schedule.sweeps, seed));
  }
  std::optional<std::pair<std::vector<int>, Coeff>> best;
  for (auto& f : runs) {
    auto r = f.get();
    if (!best || r.second < best->second) best = std::move(r);
  }
  return {d.to_assignment(best->first), best->second};
}

UnembedResult unembed(const HostAssignment& x, const Embedding& e) {
  UnembedResult out;
  for (const auto& [v, chain] : e.chains) {
    int ones = 0;
    for (int h : chain) {
      auto it = x.find(h);
      if (it == x.end()) throw Error("unembed: no value for host vertex " + std::to_string(h));
      ones += it->second ? 1 : 0;
    }
    const int zeros = static_cast<int>(chain.size()) - ones;
    out.logical[v] = ones >= zeros ? 1 : 0;
    if (ones > 0 && zeros > 0) ++out.broken_chains;
  }
  return out;
}

}  // namespace qgadget
