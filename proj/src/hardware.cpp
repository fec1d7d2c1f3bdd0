#include "qgadget/hardware.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "qgadget/error.hpp"

namespace qgadget {

std::string coord_label(const Coord& c) {
  return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) +
         "," + std::to_string(c[3]) + ")";
}

HostGraph::HostGraph(Family family, std::string name, std::vector<int> params,
                     std::vector<Coord> coords, const std::vector<std::pair<int, int>>& edges)
    : family_(family), name_(std::move(name)), params_(std::move(params)) {
  for (const auto& c : coords) {
    labels_.push_back(coord_label(c));
    coords_.emplace_back(c);
  }
  build(edges);
}

HostGraph HostGraph::custom(std::string name, std::vector<std::string> labels,
                            const std::vector<std::pair<int, int>>& edges) {
  HostGraph g;
  g.family_ = Family::custom;
  g.name_ = std::move(name);
  g.labels_ = std::move(labels);
  g.coords_.assign(g.labels_.size(), std::nullopt);
  g.build(edges);
  return g;
}

void HostGraph::build(const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(labels_.size());
  adj_.assign(n, {});
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw Error("host graph: edge endpoint out of range");
    if (a == b) throw Error("host graph: self-loop at " + labels_[a]);
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw Error("host graph: duplicate edge");
    }
  }
  edges_.clear();
  for (int a = 0; a < n; ++a)
    for (int b : adj_[a])
      if (a < b) edges_.emplace_back(a, b);
}

std::size_t HostGraph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nb : adj_) d = std::max(d, nb.size());
  return d;
}

bool HostGraph::has_edge(int a, int b) const {
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<int> HostGraph::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

std::optional<int> HostGraph::index_of(const Coord& c) const {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] && *coords_[i] == c) return static_cast<int>(i);
  }
  return std::nullopt;
}

HostGraph chimera(int m, int n, int t) {
  if (m < 1 || n < 1 || t < 1) throw Error("chimera: m, n and t must all be at least 1");
  auto index = [&](int i, int j, int u, int k) { return ((i * n + j) * 2 + u) * t + k; };
  std::vector<Coord> coords;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int u = 0; u < 2; ++u)
        for (int k = 0; k < t; ++k) coords.push_back({i, j, u, k});
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < t; ++k) {
        for (int kk = 0; kk < t; ++kk) edges.emplace_back(index(i, j, 0, k), index(i, j, 1, kk));
        if (i + 1 < m) edges.emplace_back(index(i, j, 0, k), index(i + 1, j, 0, k));
        if (j + 1 < n) edges.emplace_back(index(i, j, 1, k), index(i, j + 1, 1, k));
      }
    }
  }
  return HostGraph(Family::chimera,
                   "chimera(" + std::to_string(m) + "," + std::to_string(n) + "," +
                       std::to_string(t) + ")",
                   {m, n, t}, std::move(coords), edges);
}

const PegasusShifts& pegasus_shifts() {
  static const PegasusShifts shifts{{2, 2, 2, 2, 10, 10, 10, 10, 6, 6, 6, 6},
                                    {6, 6, 6, 6, 2, 2, 2, 2, 10, 10, 10, 10}};
  return shifts;
}

HostGraph pegasus(int m) {
  if (m < 2) throw Error("pegasus: m must be at least 2");
  const auto& off0 = pegasus_shifts().vertical;
  const auto& off1 = pegasus_shifts().horizontal;
  const int m1 = m - 1;
  // Fabric limits per orientation u: qubits with k below start (w = 0) or at
  // or above 12 - end (w = m-1) have no external partner and are dropped.
  const int start[2] = {*std::min_element(off1.begin(), off1.end()),
                        *std::min_element(off0.begin(), off0.end())};
  const int end[2] = {12 - *std::max_element(off1.begin(), off1.end()),
                      12 - *std::max_element(off0.begin(), off0.end())};
  auto in_fabric = [&](const Coord& c) {
    const int u = c[0], w = c[1], k = c[2];
    if (w == 0) return k >= start[u];
    if (w == m1) return k < 12 - end[u];
    return true;
  };

  std::vector<Coord> coords;
  for (int u = 0; u < 2; ++u)
    for (int w = 0; w < m; ++w)
      for (int k = 0; k < 12; ++k)
        for (int z = 0; z < m1; ++z)
          if (in_fabric({u, w, k, z})) coords.push_back({u, w, k, z});
  std::map<Coord, int> index;
  for (std::size_t i = 0; i < coords.size(); ++i) index[coords[i]] = static_cast<int>(i);

  std::vector<std::pair<int, int>> edges;
  auto add = [&](const Coord& a, const Coord& b) {
    if (in_fabric(a) && in_fabric(b)) edges.emplace_back(index.at(a), index.at(b));
  };
  for (int u = 0; u < 2; ++u) {
    for (int w = 0; w < m; ++w) {
      for (int k = 0; k < 12; ++k) {
        for (int z = 0; z < m1; ++z) {
          if (z + 1 < m1) add({u, w, k, z}, {u, w, k, z + 1});  // external
          if (k % 2 == 0) add({u, w, k, z}, {u, w, k + 1, z});  // odd
        }
      }
    }
  }
  // Internal couplers between perpendicular qubits.
  for (int w = 0; w < m; ++w) {
    for (int kk = 0; kk < 12; ++kk) {
      const int k_lo = w > 0 ? 0 : off1[kk];
      const int k_hi = w < m1 ? 12 : off1[kk];
      for (int k = k_lo; k < k_hi; ++k) {
        for (int z = 0; z < m1; ++z) {
          add({0, w, k, z}, {1, z + (kk < off0[k] ? 1 : 0), kk, w - (k < off1[kk] ? 1 : 0)});
        }
      }
    }
  }
  return HostGraph(Family::pegasus, "pegasus(" + std::to_string(m) + ")", {m}, std::move(coords),
                   edges);
}

CellView induced_view(const HostGraph& parent, std::vector<int> vertices, std::string name) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::map<int, int> local;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= static_cast<int>(parent.size())) {
      throw Error("induced view: vertex out of range");
    }
    local[vertices[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : parent.edges()) {
    auto ia = local.find(a), ib = local.find(b);
    if (ia != local.end() && ib != local.end()) edges.emplace_back(ia->second, ib->second);
  }
  std::vector<Coord> coords;
  bool have_coords = true;
  for (int v : vertices) {
    if (parent.coord(v)) coords.push_back(*parent.coord(v));
    else have_coords = false;
  }
  if (have_coords && parent.family() != Family::custom) {
    return {vertices, HostGraph(parent.family(), std::move(name), parent.params(),
                                std::move(coords), edges)};
  }
  std::vector<std::string> labels;
  for (int v : vertices) labels.push_back(parent.label(v));
  return {vertices, HostGraph::custom(std::move(name), std::move(labels), edges)};
}

CellView chimera_cell(const HostGraph& host, int row, int col) {
  if (host.family() != Family::chimera) throw Error("chimera_cell: host is not a Chimera graph");
  std::vector<int> vs;
  for (std::size_t v = 0; v < host.size(); ++v) {
    const auto& c = *host.coord(static_cast<int>(v));
    if (c[0] == row && c[1] == col) vs.push_back(static_cast<int>(v));
  }
  if (vs.empty()) throw Error("chimera_cell: no such cell");
  return induced_view(host, vs,
                      host.name() + " cell (" + std::to_string(row) + "," + std::to_string(col) +
                          ")");
}

CellView pegasus_cell(const HostGraph& host) {
  if (host.family() != Family::pegasus) throw Error("pegasus_cell: host is not a Pegasus graph");
  const int m = host.params()[0];
  std::vector<int> best;
  std::size_t best_edges = 0;
  for (int w0 = 0; w0 < m; ++w0)
    for (int z0 = 0; z0 < m - 1; ++z0)
      for (int w1 = 0; w1 < m; ++w1)
        for (int z1 = 0; z1 < m - 1; ++z1) {
          std::vector<int> vs;
          for (int k = 0; k < 12; ++k) {
            if (auto v = host.index_of(Coord{0, w0, k, z0})) vs.push_back(*v);
            if (auto v = host.index_of(Coord{1, w1, k, z1})) vs.push_back(*v);
          }
          std::size_t e = 0;
          for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) e += host.has_edge(vs[i], vs[j]);
          if (e > best_edges) {
            best_edges = e;
            best = vs;
          }
        }
  auto view = induced_view(host, best, host.name() + " cell");
  if (!find_k4(view.graph)) throw Error("pegasus_cell: selected cell has no native K4");
  return view;
}

bool is_bipartite(const HostGraph& g) {
  std::vector<int> color(g.size(), -1);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(static_cast<int>(s));
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool contains_triangle(const HostGraph& g) {
  for (auto [a, b] : g.edges())
    for (int c : g.neighbors(a))
      if (c != b && g.has_edge(b, c)) return true;
  return false;
}

std::optional<std::array<int, 4>> find_k4(const HostGraph& g) {
  for (auto [a, b] : g.edges()) {
    std::vector<int> common;
    std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(b).begin(),
                          g.neighbors(b).end(), std::back_inserter(common));
    for (std::size_t i = 0; i < common.size(); ++i)
      for (std::size_t j = i + 1; j < common.size(); ++j)
        if (g.has_edge(common[i], common[j])) return std::array{a, b, common[i], common[j]};
  }
  return std::nullopt;
}

std::string export_edge_list(const HostGraph& g) {
  std::ostringstream os;
  os << "# " << g.name() << " vertices=" << g.size() << " edges=" << g.edge_count() << '\n';
  for (std::size_t v = 0; v < g.size(); ++v) os << "# " << v << ' ' << g.label(static_cast<int>(v)) << '\n';
  for (auto [a, b] : g.edges()) os << a << ' ' << b << '\n';
  return os.str();
}

}  // namespace qgadget
