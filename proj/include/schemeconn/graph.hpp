#pragma once

#include <utility>
#include <vector>

#include "schemeconn/vertex_set.hpp"

namespace schemeconn {

// Undirected simple graph stored as bitset adjacency rows, plus an alive
// mask. Deleted vertices keep their rows but are invisible to every
// traversal and degree computation.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  void add_edge(int u, int v);

  int n() const noexcept { return n_; }
  const VertexSet& alive() const noexcept { return alive_; }
  const VertexSet& row(int v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const noexcept { return rows_[static_cast<std::size_t>(u)].test(v); }

  int live_count() const noexcept { return alive_.count(); }
  // Live neighbours of v.
  VertexSet neighbors(int v) const;
  // {v} together with its live neighbours (v^perp).
  VertexSet closed_neighbors(int v) const;
  int degree(int v) const noexcept { return row(v).intersection_count(alive_); }
  int min_degree() const;
  int max_degree() const;
  bool is_regular() const { return min_degree() == max_degree(); }
  long long edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  // Copy with the given vertices removed from the alive mask.
  Graph without(const VertexSet& deleted) const;
  // Copy restricted to `keep` (alive mask intersected).
  Graph restricted_to(const VertexSet& keep) const;

  bool is_complete() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_ && a.alive_ == b.alive_;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> rows_;
  VertexSet alive_;
};

inline constexpr int kUnreachable = -1;

// BFS distances from s over live vertices; kUnreachable elsewhere.
std::vector<int> distances_from(const Graph& g, int s);
// Row-major n*n distance matrix (kUnreachable for no path).
std::vector<int> all_pairs_distances(const Graph& g);
// Live vertices reachable from s without leaving `allowed`.
VertexSet reachable(const Graph& g, int s, const VertexSet& allowed);
// Live vertex set is empty or connected.
bool is_connected(const Graph& g);
// Largest finite distance; requires a connected graph.
int diameter(const Graph& g);
int girth(const Graph& g);  // 0 when acyclic

}  // namespace schemeconn
