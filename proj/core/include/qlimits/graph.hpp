#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qlimits {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
// (first < second) and sorted.
class Graph {
 public:
  Graph() = default;
  // Throws ValidationError on self-loops, duplicates or out-of-range vertices.
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int max_degree() const;
  bool is_regular() const;
  bool has_edge(int a, int b) const;

  // Two-colouring, or empty if the graph is not bipartite.
  std::vector<int> bipartition() const;
  bool is_bipartite() const { return !bipartition().empty() || n_ == 0; }

  // BFS distances from `root`; unreachable vertices get -1.
  std::vector<int> distances_from(int root) const;
  // Vertex set reached from `seed` within one step (seed included).
  std::vector<int> closed_neighborhood(const std::vector<int>& seed) const;

  // Max over edges e and radii k >= 1 of |S_e(k)| / k^(delta-1), where S_e(k)
  // is the set of edges whose vertex sets lie at path distance k from e.
  double edge_sphere_constant(int delta) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

// Bit of vertex v in basis index x on n vertices; vertex 0 is the most
// significant bit.
inline int vertex_bit(std::uint64_t x, int v, int n) {
  return static_cast<int>((x >> (n - 1 - v)) & 1U);
}

int hamming_weight(std::uint64_t x);
int hamming_distance(std::uint64_t x, std::uint64_t y);

}  // namespace qlimits
