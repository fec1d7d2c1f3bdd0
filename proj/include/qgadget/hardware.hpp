#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qgadget {

enum class Family { chimera, pegasus, custom };

// Chimera: (row, col, shore, index). Pegasus: (u, w, k, z).
using Coord = std::array<int, 4>;

// Immutable hardware graph with densely indexed, coordinate-labelled vertices.
class HostGraph {
 public:
  HostGraph(Family family, std::string name, std::vector<int> params, std::vector<Coord> coords,
            const std::vector<std::pair<int, int>>& edges);

  // Arbitrary graph with string labels; used for tests and induced views.
  static HostGraph custom(std::string name, std::vector<std::string> labels,
                          const std::vector<std::pair<int, int>>& edges);

  Family family() const { return family_; }
  const std::string& name() const { return name_; }
  const std::vector<int>& params() const { return params_; }

  std::size_t size() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  std::size_t degree(int v) const { return adj_[v].size(); }
  std::size_t max_degree() const;
  bool has_edge(int a, int b) const;

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<Coord>& coord(int v) const { return coords_[v]; }
  std::optional<int> index_of(const std::string& label) const;
  std::optional<int> index_of(const Coord& c) const;

 private:
  HostGraph() = default;
  void build(const std::vector<std::pair<int, int>>& edges);

  Family family_ = Family::custom;
  std::string name_;
  std::vector<int> params_;
  std::vector<std::string> labels_;
  std::vector<std::optional<Coord>> coords_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

// C(m, n, t): m x n grid of K_{t,t} cells.
HostGraph chimera(int m, int n, int t = 4);

// P(m) fabric (the degree-deficient boundary qubits are dropped), using the
// vendor's default shift vectors.
HostGraph pegasus(int m);

struct PegasusShifts {
  std::array<int, 12> vertical;
  std::array<int, 12> horizontal;
};
const PegasusShifts& pegasus_shifts();

std::string coord_label(const Coord& c);

// Induced subgraph on a vertex subset, remembering the parent indices.
struct CellView {
  std::vector<int> parent_vertices;
  HostGraph graph;
};

CellView induced_view(const HostGraph& parent, std::vector<int> vertices, std::string name);
CellView chimera_cell(const HostGraph& chimera_host, int row, int col);
// 12 vertical plus 12 horizontal qubits whose induced subgraph has the most
// couplers; always contains a native K4.
CellView pegasus_cell(const HostGraph& pegasus_host);

bool is_bipartite(const HostGraph& g);
bool contains_triangle(const HostGraph& g);
// First K4 found as a subgraph (vertex indices), if any.
std::optional<std::array<int, 4>> find_k4(const HostGraph& g);

// One `u v` line per edge after a `# label` header block naming each vertex.
std::string export_edge_list(const HostGraph& g);

}  // namespace qgadget
