#include "qgadget/embed.hpp"

#include <algorithm>
#include <bitset>
#include <set>

#include "qgadget/error.hpp"

namespace qgadget {

std::size_t Embedding::host_vertex_count() const {
  std::size_t n = 0;
  for (const auto& [v, c] : chains) n += c.size();
  return n;
}

int Embedding::aux_count() const {
  return static_cast<int>(host_vertex_count()) - static_cast<int>(chains.size());
}

std::size_t Embedding::max_chain_len() const {
  std::size_t n = 0;
  for (const auto& [v, c] : chains) n = std::max(n, c.size());
  return n;
}

std::string to_string(EmbedStatus s) {
  switch (s) {
    case EmbedStatus::found: return "found";
    case EmbedStatus::infeasible: return "infeasible";
    case EmbedStatus::budget_exhausted: return "budget exhausted";
  }
  return "?";
}

namespace {

bool chain_connected(const HostGraph& host, const std::vector<int>& chain) {
  if (chain.empty()) return false;
  std::set<int> members(chain.begin(), chain.end());
  std::set<int> seen{chain.front()};
  std::vector<int> stack{chain.front()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : host.neighbors(v)) {
      if (members.count(w) && seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == members.size();
}

std::string chain_text(const HostGraph& host, const std::vector<int>& chain) {
  std::string s = "[";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) s += ", ";
    s += host.label(chain[i]);
  }
  return s + "]";
}

}  // namespace

std::optional<EmbedViolation> validate_embedding(const GadgetGraph& guest, const HostGraph& host,
                                                 const Embedding& e) {
  for (const auto& [v, chain] : e.chains) {
    if (!guest.has_vertex(v)) throw Error("validate_embedding: unknown guest vertex " + v);
    for (int h : chain) {
      if (h < 0 || h >= static_cast<int>(host.size())) {
        throw Error("validate_embedding: unknown host vertex " + std::to_string(h));
      }
    }
  }
  for (const auto& v : guest.vertices()) {
    auto it = e.chains.find(v);
    if (it == e.chains.end() || it->second.empty()) return EmbedViolation{"missing chain", v};
  }
  std::map<int, Var> owner;
  for (const auto& [v, chain] : e.chains) {
    for (int h : chain) {
      auto [it, fresh] = owner.emplace(h, v);
      if (!fresh) {
        return EmbedViolation{"chains not disjoint",
                              host.label(h) + " in chains of " + it->second + " and " + v};
      }
    }
  }
  for (const auto& [v, chain] : e.chains) {
    if (!chain_connected(host, chain)) {
      return EmbedViolation{"chain disconnected", v + " -> " + chain_text(host, chain)};
    }
  }
  for (const auto& [a, b] : guest.edges) {
    bool covered = false;
    for (int h : e.chains.at(a)) {
      for (int w : host.neighbors(h)) {
        auto it = owner.find(w);
        if (it != owner.end() && it->second == b) covered = true;
      }
    }
    if (!covered) return EmbedViolation{"edge not covered", a + " -- " + b};
  }
  return std::nullopt;
}

namespace {

using HBits = std::bitset<kMaxHostVertices>;

class Searcher {
 public:
  Searcher(const GadgetGraph& guest, const HostGraph& host, const EmbedLimits& limits)
      : guest_(guest), host_(host), limits_(limits), names_(guest.vertices()) {
    const int k = static_cast<int>(names_.size());
    const int n = static_cast<int>(host.size());
    nbr_.resize(n);
    for (auto [a, b] : host.edges()) {
      nbr_[a].set(b);
      nbr_[b].set(a);
    }
    for (int h = 0; h < n; ++h) all_.set(h);
    gadj_.assign(k, {});
    auto adj = guest.adjacency();
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (adj[i] >> j & 1u) gadj_[i].push_back(j);
    compute_order();
    compute_lines();
    chain_.assign(k, {});
    reach_.assign(k, {});
    placed_.assign(k, false);
  }

  EmbedResult run() {
    EmbedResult r;
    budget_left_ = limits_.max_aux;
    bool found = false;
    try {
      found = recurse(0);
    } catch (const Exhausted&) {
      r.status = EmbedStatus::budget_exhausted;
      r.nodes = nodes_;
      return r;
    }
    r.nodes = nodes_;
    if (!found) {
      r.status = EmbedStatus::infeasible;
      return r;
    }
    r.status = EmbedStatus::found;
    Embedding e;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      std::vector<int> c;
      for (std::size_t h = 0; h < host_.size(); ++h)
        if (chain_[i].test(h)) c.push_back(static_cast<int>(h));
      e.chains[names_[i]] = std::move(c);
    }
    r.embedding = std::move(e);
    return r;
  }

 private:
  struct Exhausted {};

  // Highest degree first, then repeatedly the unplaced vertex with the most
  // placed neighbours (ties: degree, then index).
  void compute_order() {
    const int k = static_cast<int>(names_.size());
    std::vector<bool> taken(k, false);
    for (int step = 0; step < k; ++step) {
      int best = -1, best_links = -1, best_deg = -1;
      for (int v = 0; v < k; ++v) {
        if (taken[v]) continue;
        int links = 0;
        for (int w : gadj_[v]) links += taken[w];
        int deg = static_cast<int>(gadj_[v].size());
        if (links > best_links || (links == best_links && deg > best_deg)) {
          best = v;
          best_links = links;
          best_deg = deg;
        }
      }
      taken[best] = true;
      order_.push_back(best);
    }
  }

  void grow(std::vector<int>& cur, HBits& bits, const HBits& allowed, std::size_t max_len,
            std::set<std::vector<int>>& out) {
    std::vector<int> sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    if (!out.insert(sorted).second) return;
    if (cur.size() >= max_len) return;
    HBits frontier;
    for (int h : cur) frontier |= nbr_[h];
    frontier &= allowed & ~bits;
    for (std::size_t h = frontier._Find_first(); h < kMaxHostVertices; h = frontier._Find_next(h)) {
      cur.push_back(static_cast<int>(h));
      bits.set(h);
      grow(cur, bits, allowed, max_len, out);
      bits.reset(h);
      cur.pop_back();
    }
  }

  std::vector<std::vector<int>> candidates(int v) {
    const HBits allowed = all_ & ~used_;
    std::vector<int> placed_nbrs;
    for (int w : gadj_[v])
      if (placed_[w]) placed_nbrs.push_back(w);
    std::size_t max_len =
        static_cast<std::size_t>(std::min(limits_.max_chain_len, 1 + budget_left_));
    // A vertex with no guest edges never needs more than one qubit.
    if (gadj_[v].empty()) max_len = 1;
    HBits anchors = allowed;
    if (!placed_nbrs.empty()) anchors &= reach_[placed_nbrs.front()];

    std::set<std::vector<int>> found;
    for (std::size_t a = anchors._Find_first(); a < kMaxHostVertices; a = anchors._Find_next(a)) {
      std::vector<int> cur{static_cast<int>(a)};
      HBits bits;
      bits.set(a);
      grow(cur, bits, allowed, max_len, found);
    }
    std::vector<std::vector<int>> out;
    for (const auto& c : found) {
      HBits reach;
      for (int h : c) reach |= nbr_[h];
      bool ok = true;
      for (int p : placed_nbrs) {
        if ((reach & chain_[p]).none()) {
          ok = false;
          break;
        }
      }
      if (ok && canonical(c)) out.push_back(c);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
  }

  // In a full Chimera grid, the qubits (u, k) of one column (u = 0) or one row
  // (u = 1) form a line, and permuting k consistently along every line of the
  // same row/column is an automorphism. Lines with no used qubit are therefore
  // interchangeable, and a chain may only open the lowest-k unused lines.
  void compute_lines() {
    line_of_.assign(host_.size(), -1);
    if (host_.family() != Family::chimera || host_.params().size() != 3) return;
    const int m = host_.params()[0], n = host_.params()[1], t = host_.params()[2];
    if (host_.size() != static_cast<std::size_t>(2 * m * n * t)) return;
    // Class (0, j): lines k with members (i, j, 0, k). Class (1, i): (i, j, 1, k).
    const int classes = n + m;
    lines_.assign(static_cast<std::size_t>(classes) * t, {});
    for (std::size_t h = 0; h < host_.size(); ++h) {
      const Coord& c = *host_.coord(static_cast<int>(h));
      const int cls = c[2] == 0 ? c[1] : n + c[0];
      const int line = cls * t + c[3];
      line_of_[h] = line;
      lines_[line].set(h);
    }
    line_width_ = t;
  }

  bool canonical(const std::vector<int>& c) const {
    if (line_width_ == 0) return true;
    std::set<int> opened;
    for (int h : c) {
      const int line = line_of_[h];
      if ((lines_[line] & used_).none()) opened.insert(line);
    }
    if (opened.empty()) return true;
    // Within each class, the opened lines must be the first unused ones.
    std::map<int, int> count;
    for (int line : opened) ++count[line / line_width_];
    for (auto [cls, k] : count) {
      int seen = 0;
      for (int line = cls * line_width_; line < (cls + 1) * line_width_ && seen < k; ++line) {
        if ((lines_[line] & used_).any()) continue;
        if (!opened.count(line)) return false;
        ++seen;
      }
    }
    return true;
  }

  // Lower bound on the extra qubits the unplaced vertices will need.
  bool hopeless() const {
    const HBits free = all_ & ~used_;
    int unplaced = 0;
    int need = 0;
    for (std::size_t v = 0; v < names_.size(); ++v) {
      if (placed_[v]) continue;
      ++unplaced;
      HBits common = free;
      bool any = false;
      for (int p : gadj_[v]) {
        if (!placed_[p]) continue;
        any = true;
        HBits r = reach_[p] & free;
        if (r.none()) return true;
        common &= r;
      }
      if (any && common.none()) {
        if (limits_.max_chain_len < 2) return true;
        ++need;
      }
    }
    if (need > budget_left_) return true;
    return static_cast<std::size_t>(unplaced + need) > free.count();
  }

  bool recurse(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    for (const auto& c : candidates(v)) {
      if (++nodes_ > limits_.node_budget) throw Exhausted{};
      const int extra = static_cast<int>(c.size()) - 1;
      HBits bits, reach;
      for (int h : c) {
        bits.set(h);
        reach |= nbr_[h];
      }
      chain_[v] = bits;
      reach_[v] = reach;
      placed_[v] = true;
      used_ |= bits;
      budget_left_ -= extra;
      if (!hopeless() && recurse(depth + 1)) return true;
      budget_left_ += extra;
      used_ &= ~bits;
      placed_[v] = false;
      chain_[v].reset();
    }
    return false;
  }

  const GadgetGraph& guest_;
  const HostGraph& host_;
  EmbedLimits limits_;
  std::vector<Var> names_;
  std::vector<HBits> nbr_;
  HBits all_;
  std::vector<std::vector<int>> gadj_;
  std::vector<int> order_;
  std::vector<HBits> chain_;
  std::vector<HBits> reach_;
  std::vector<bool> placed_;
  HBits used_;
  std::vector<int> line_of_;
  std::vector<HBits> lines_;
  int line_width_ = 0;
  int budget_left_ = 0;
  std::uint64_t nodes_ = 0;
};

void check_limits(const GadgetGraph& guest, const HostGraph& host, const EmbedLimits& limits,
                  std::size_t max_guest) {
  guest.validate();
  if (guest.vertex_count() > max_guest) {
    throw Error("embed: guest has " + std::to_string(guest.vertex_count()) +
                " vertices; at most " + std::to_string(max_guest) + " supported");
  }
  if (host.size() > kMaxHostVertices) {
    throw Error("embed: host has " + std::to_string(host.size()) + " vertices; at most " +
                std::to_string(kMaxHostVertices) + " supported");
  }
  if (limits.max_aux < 0 || limits.max_aux > 64) throw Error("embed: max_aux must be in [0, 64]");
  if (limits.max_chain_len < 1 || limits.max_chain_len > kMaxChainLen) {
    throw Error("embed: max_chain_len must be in [1, " + std::to_string(kMaxChainLen) + "]");
  }
  if (limits.node_budget == 0) throw Error("embed: node_budget must be positive");
}

MinAuxResult deepen(const GadgetGraph& guest, const HostGraph& host, const EmbedLimits& limits) {
  MinAuxResult out;
  for (int b = 0; b <= limits.max_aux; ++b) {
    EmbedLimits step = limits;
    step.max_aux = b;
    step.node_budget = limits.node_budget > out.nodes ? limits.node_budget - out.nodes : 1;
    auto r = Searcher(guest, host, step).run();
    out.nodes += r.nodes;
    if (r.status == EmbedStatus::found) {
      out.min_aux = r.embedding->aux_count();
      out.embedding = std::move(r.embedding);
      out.report = "minimum " + std::to_string(*out.min_aux) + " aux";
      return out;
    }
    if (r.status == EmbedStatus::budget_exhausted) {
      out.complete = false;
      out.report = "node budget exhausted while testing aux budget " + std::to_string(b);
      return out;
    }
  }
  out.report = "no embedding with at most " + std::to_string(limits.max_aux) +
               " aux and chains of length at most " + std::to_string(limits.max_chain_len);
  return out;
}

}  // namespace

EmbedResult embed_search(const GadgetGraph& guest, const HostGraph& host,
                         const EmbedLimits& limits) {
  check_limits(guest, host, limits, kMaxGuestVertices);
  return Searcher(guest, host, limits).run();
}

MinAuxResult min_aux(const GadgetGraph& guest, const HostGraph& host, const EmbedLimits& limits) {
  check_limits(guest, host, limits, kMaxGuestVertices);
  return deepen(guest, host, limits);
}

MinAuxResult embed_large(const GadgetGraph& guest, const HostGraph& host,
                         const EmbedLimits& limits) {
  check_limits(guest, host, limits, 24);
  MinAuxResult out;
  for (int b = 0; b <= limits.max_aux; ++b) {
    EmbedLimits step = limits;
    step.max_aux = b;
    auto r = Searcher(guest, host, step).run();
    out.nodes += r.nodes;
    if (r.status == EmbedStatus::found) {
      out.min_aux = r.embedding->aux_count();
      out.embedding = std::move(r.embedding);
      out.report = (out.complete ? "minimum " : "found ") + std::to_string(*out.min_aux) + " aux";
      return out;
    }
    if (r.status == EmbedStatus::budget_exhausted) out.complete = false;
  }
  out.report = "no embedding with at most " + std::to_string(limits.max_aux) +
               " aux and chains of length at most " + std::to_string(limits.max_chain_len);
  if (!out.complete) out.report += " found before the node budget ran out";
  return out;
}

GadgetGraph interaction_graph(const Polynomial& q2, const std::vector<Var>& aux, std::string name) {
  if (q2.degree() > 2) throw Error("interaction graph: polynomial has degree above 2");
  std::set<Var> aux_set(aux.begin(), aux.end());
  std::vector<Var> logical, auxv;
  for (const auto& v : q2.variables()) (aux_set.count(v) ? auxv : logical).push_back(v);
  for (const auto& v : aux)
    if (std::find(auxv.begin(), auxv.end(), v) == auxv.end()) auxv.push_back(v);
  GadgetGraph g(std::move(name), logical, auxv);
  for (const auto& [mono, c] : q2.terms()) {
    if (mono.size() == 2) g.add_edge(mono[0], mono[1]);
  }
  return g;
}

}  // namespace qgadget
