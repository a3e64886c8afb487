#include "schemeconn/graph.hpp"

#include <algorithm>
#include <limits>

#include "schemeconn/error.hpp"

namespace schemeconn {

Graph::Graph(int n)
    : n_(n), rows_(static_cast<std::size_t>(n), VertexSet(n)), alive_(n, true) {}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u == v) {
    throw SchemeError(ErrorKind::InvalidArgument, "self-loop requested",
                      std::to_string(u));
  }
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw SchemeError(ErrorKind::InvalidArgument, "edge endpoint out of range");
  }
  rows_[static_cast<std::size_t>(u)].set(v);
  rows_[static_cast<std::size_t>(v)].set(u);
}

VertexSet Graph::neighbors(int v) const { return row(v) & alive_; }

VertexSet Graph::closed_neighbors(int v) const {
  VertexSet s = neighbors(v);
  s.set(v);
  return s;
}

int Graph::min_degree() const {
  int best = std::numeric_limits<int>::max();
  alive_.for_each([&](int v) { best = std::min(best, degree(v)); });
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

int Graph::max_degree() const {
  int best = 0;
  alive_.for_each([&](int v) { best = std::max(best, degree(v)); });
  return best;
}

long long Graph::edge_count() const {
  long long twice = 0;
  alive_.for_each([&](int v) { twice += degree(v); });
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  alive_.for_each([&](int u) {
    neighbors(u).for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  });
  return out;
}

Graph Graph::without(const VertexSet& deleted) const {
  Graph g = *this;
  g.alive_ -= deleted;
  return g;
}

Graph Graph::restricted_to(const VertexSet& keep) const {
  Graph g = *this;
  g.alive_ &= keep;
  return g;
}

bool Graph::is_complete() const {
  const int live = live_count();
  bool ok = true;
  alive_.for_each([&](int v) { ok = ok && degree(v) == live - 1; });
  return ok;
}

std::vector<int> distances_from(const Graph& g, int s) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), kUnreachable);
  if (!g.alive().test(s)) return dist;
  VertexSet visited(g.n());
  visited.set(s);
  VertexSet frontier = visited;
  dist[static_cast<std::size_t>(s)] = 0;
  int level = 0;
  while (!frontier.empty()) {
    ++level;
    VertexSet next(g.n());
    frontier.for_each([&](int v) { next |= g.row(v); });
    next &= g.alive();
    next -= visited;
    next.for_each([&](int v) { dist[static_cast<std::size_t>(v)] = level; });
    visited |= next;
    frontier = std::move(next);
  }
  return dist;
}

std::vector<int> all_pairs_distances(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<int> out(n * n, kUnreachable);
  for (int s = 0; s < g.n(); ++s) {
    auto d = distances_from(g, s);
    std::copy(d.begin(), d.end(), out.begin() + static_cast<std::ptrdiff_t>(s * n));
  }
  return out;
}

VertexSet reachable(const Graph& g, int s, const VertexSet& allowed) {
  VertexSet region = allowed & g.alive();
  VertexSet visited(g.n());
  if (!region.test(s)) return visited;
  visited.set(s);
  VertexSet frontier = visited;
  while (!frontier.empty()) {
    VertexSet next(g.n());
    frontier.for_each([&](int v) { next |= g.row(v); });
    next &= region;
    next -= visited;
    visited |= next;
    frontier = std::move(next);
  }
  return visited;
}

bool is_connected(const Graph& g) {
  const int s = g.alive().first();
  if (s < 0) return true;
  return reachable(g, s, g.alive()).count() == g.live_count();
}

int diameter(const Graph& g) {
  if (!is_connected(g)) {
    throw SchemeError(ErrorKind::Disconnected, "diameter of a disconnected graph");
  }
  int best = 0;
  g.alive().for_each([&](int s) {
    for (int d : distances_from(g, s)) best = std::max(best, d);
  });
  return best;
}

int girth(const Graph& g) {
  // Shortest cycle through each root via BFS tree non-tree edges.
  int best = std::numeric_limits<int>::max();
  g.alive().for_each([&](int root) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::vector<int> parent(static_cast<std::size_t>(g.n()), -1);
    std::vector<int> queue{root};
    dist[static_cast<std::size_t>(root)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      g.neighbors(u).for_each([&](int w) {
        auto uw = static_cast<std::size_t>(w);
        if (dist[uw] < 0) {
          dist[uw] = dist[static_cast<std::size_t>(u)] + 1;
          parent[uw] = u;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          best = std::min(best, dist[uw] + dist[static_cast<std::size_t>(u)] + 1);
        }
      });
    }
  });
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

}  // namespace schemeconn
