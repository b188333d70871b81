#include "qlimits/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>

#include "qlimits/config.hpp"

namespace qlimits {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adj_(n < 0 ? 0 : n) {
  if (n < 0) throw ValidationError("vertex count must be non-negative");
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw ValidationError("edge endpoint out of range");
    if (a == b) throw ValidationError("self-loops are not allowed");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ValidationError("duplicate edge");
  edges_ = std::move(edges);
  for (auto [a, b] : edges_) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

int Graph::max_degree() const {
  int out = 0;
  for (const auto& row : adj_) out = std::max(out, static_cast<int>(row.size()));
  return out;
}

bool Graph::is_regular() const {
  for (int v = 1; v < n_; ++v)
    if (degree(v) != degree(0)) return false;
  return true;
}

bool Graph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::vector<int> Graph::bipartition() const {
  std::vector<int> colour(n_, -1);
  for (int s = 0; s < n_; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj_[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          q.push(w);
        } else if (colour[w] == colour[v]) {
          return {};
        }
      }
    }
  }
  return colour;
}

std::vector<int> Graph::distances_from(int root) const {
  if (root < 0 || root >= n_) throw ValidationError("root vertex out of range");
  std::vector<int> dist(n_, -1);
  dist[root] = 0;
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj_[v])
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

std::vector<int> Graph::closed_neighborhood(const std::vector<int>& seed) const {
  std::vector<char> mark(n_, 0);
  for (int v : seed) {
    if (v < 0 || v >= n_) throw ValidationError("vertex out of range");
    mark[v] = 1;
    for (int w : adj_[v]) mark[w] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (mark[v]) out.push_back(v);
  return out;
}

double Graph::edge_sphere_constant(int delta) const {
  if (delta < 1) throw ValidationError("spatial dimension must be at least 1");
  std::vector<std::vector<int>> dist(n_);
  for (int v = 0; v < n_; ++v) dist[v] = distances_from(v);
  auto set_dist = [&](const Edge& e, const Edge& f) {
    int best = -1;
    for (int a : {e.first, e.second})
      for (int b : {f.first, f.second}) {
        int d = dist[a][b];
        if (d >= 0 && (best < 0 || d < best)) best = d;
      }
    return best;
  };
  double out = 0.0;
  for (const auto& e : edges_) {
    std::vector<int> counts(n_ + 1, 0);
    for (const auto& f : edges_) {
      if (f == e) continue;
      int d = set_dist(e, f);
      if (d >= 1) ++counts[d];
    }
    for (int k = 1; k <= n_; ++k)
      out = std::max(out, counts[k] / std::pow(static_cast<double>(k), delta - 1));
  }
  return out;
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

int hamming_weight(std::uint64_t x) { return std::popcount(x); }

int hamming_distance(std::uint64_t x, std::uint64_t y) { return std::popcount(x ^ y); }

}  // namespace qlimits
