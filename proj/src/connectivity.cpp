#include "schemeconn/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>

#include "flow.hpp"
#include "schemeconn/error.hpp"

namespace schemeconn {

namespace {

std::size_t at(int x) { return static_cast<std::size_t>(x); }

long long binomial_capped(int n, int k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<long long>(r + 0.5L);
}

// Lower bound on internally disjoint s-t paths: common neighbours plus a
// maximum matching of length-3 paths s-x-y-t. Counts the direct edge when
// `edge_mode` (edge-disjoint paths).
int short_path_certificate(const Graph& g, int s, int t, int limit, bool edge_mode) {
  const VertexSet ns = g.neighbors(s);
  const VertexSet nt = g.neighbors(t);
  int count = (edge_mode && ns.test(t)) ? 1 : 0;
  VertexSet common = ns & nt;
  count += common.count();
  if (count >= limit) return count;
  VertexSet left_set = ns - common;
  left_set.reset(t);
  VertexSet right_set = nt - common;
  right_set.reset(s);
  const std::vector<int> left = left_set.to_vector();
  std::vector<VertexSet> adj;
  adj.reserve(left.size());
  for (int x : left) adj.push_back(g.row(x) & right_set);

  std::vector<int> match_right(at(g.n()), -1);
  VertexSet visited(g.n());
  // Kuhn's augmenting path search from left vertex index u.
  auto augment = [&](auto&& self, std::size_t u) -> bool {
    for (int y : (adj[u] - visited).to_vector()) {
      if (visited.test(y)) continue;
      visited.set(y);
      const int owner = match_right[at(y)];
      if (owner < 0 || self(self, at(owner))) {
        match_right[at(y)] = static_cast<int>(u);
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < left.size() && count < limit; ++u) {
    int y = -1;
    adj[u].for_each([&](int w) {
      if (y < 0 && match_right[at(w)] < 0) y = w;
    });
    if (y >= 0) {
      match_right[at(y)] = static_cast<int>(u);
      ++count;
      continue;
    }
    visited = VertexSet(g.n());
    if (augment(augment, u)) ++count;
  }
  return count;
}

}  // namespace

std::vector<std::vector<int>> components(const Graph& g, const VertexSet& deleted) {
  VertexSet remaining = g.alive() - deleted;
  std::vector<std::vector<int>> out;
  for (int s = remaining.first(); s >= 0; s = remaining.first()) {
    VertexSet comp = reachable(g, s, remaining);
    out.push_back(comp.to_vector());
    remaining -= comp;
  }
  return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
  return components(g, VertexSet(g.n()));
}

TwinData twins(const Graph& g) {
  TwinData out;
  std::map<std::vector<int>, std::vector<int>> by_neighborhood;
  std::vector<int> live = g.alive().to_vector();
  for (std::size_t x = 0; x < live.size(); ++x) {
    const VertexSet nx = g.neighbors(live[x]);
    for (std::size_t y = x + 1; y < live.size(); ++y)
      if (g.neighbors(live[y]) == nx) out.pairs.emplace_back(live[x], live[y]);
    by_neighborhood[nx.to_vector()].push_back(live[x]);
  }
  for (auto& [key, members] : by_neighborhood)
    if (members.size() >= 2) out.classes.push_back(members);
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

int local_vertex_connectivity(const Graph& g, int s, int t, int limit) {
  if (g.adjacent(s, t)) {
    throw SchemeError(ErrorKind::InvalidArgument, "local vertex connectivity needs non-adjacent vertices");
  }
  if (short_path_certificate(g, s, t, limit, false) >= limit) return limit;
  detail::UnitNetwork net(g, detail::UnitNetwork::Mode::VertexSplit);
  return net.max_flow(s, t, limit);
}

int local_edge_connectivity(const Graph& g, int s, int t, int limit) {
  if (short_path_certificate(g, s, t, limit, true) >= limit) return limit;
  detail::UnitNetwork net(g, detail::UnitNetwork::Mode::Edge);
  return net.max_flow(s, t, limit);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.live_count();
  if (n < 2) throw SchemeError(ErrorKind::InvalidArgument, "connectivity needs at least 2 vertices");
  if (!is_connected(g)) throw SchemeError(ErrorKind::Disconnected, "graph is disconnected");
  if (g.is_complete()) return n - 1;
  const std::vector<int> order = g.alive().to_vector();
  int best = g.min_degree();
  std::optional<detail::UnitNetwork> net;
  for (int i = 0; i <= best && i < n; ++i) {
    const int s = order[at(i)];
    for (int j = i + 1; j < n; ++j) {
      const int t = order[at(j)];
      if (g.adjacent(s, t)) continue;
      if (short_path_certificate(g, s, t, best, false) >= best) continue;
      if (!net) net.emplace(g, detail::UnitNetwork::Mode::VertexSplit);
      best = std::min(best, net->max_flow(s, t, best));
    }
  }
  return best;
}

int edge_connectivity(const Graph& g) {
  const int n = g.live_count();
  if (n < 2) throw SchemeError(ErrorKind::InvalidArgument, "connectivity needs at least 2 vertices");
  if (!is_connected(g)) throw SchemeError(ErrorKind::Disconnected, "graph is disconnected");
  const std::vector<int> order = g.alive().to_vector();
  const int s = order.front();
  int best = g.min_degree();
  std::optional<detail::UnitNetwork> net;
  for (std::size_t j = 1; j < order.size(); ++j) {
    const int t = order[j];
    if (short_path_certificate(g, s, t, best, true) >= best) continue;
    if (!net) net.emplace(g, detail::UnitNetwork::Mode::Edge);
    best = std::min(best, net->max_flow(s, t, best));
  }
  return best;
}

MinCutEnumeration enumerate_min_cuts(const Graph& g, int cap_size, long long budget) {
  return enumerate_min_cuts(g, cap_size, vertex_connectivity(g), budget);
}

MinCutEnumeration enumerate_min_cuts(const Graph& g, int cap_size, int kappa, long long budget) {
  const int n = g.live_count();
  if (cap_size > 3 && n > 64) {
    throw SchemeError(ErrorKind::CapExceeded, "exhaustive cut search beyond size 3 needs n <= 64");
  }
  MinCutEnumeration out;
  out.kappa = kappa;
  if (g.is_complete()) return out;  // no disconnecting set at all
  if (kappa > cap_size) {
    throw SchemeError(ErrorKind::CapExceeded,
                      "kappa " + std::to_string(kappa) + " exceeds the size cap " +
                          std::to_string(cap_size));
  }
  if (binomial_capped(n, kappa, budget) > budget) {
    throw SchemeError(ErrorKind::CapExceeded, "C(n, kappa) exceeds the enumeration budget");
  }
  const std::vector<int> live = g.alive().to_vector();
  std::map<std::vector<int>, int> neighborhood_owner;
  for (int a : live) {
    auto nb = g.neighbors(a).to_vector();
    if (static_cast<int>(nb.size()) == kappa) neighborhood_owner.emplace(std::move(nb), a);
  }

  std::vector<int> chosen;
  auto record = [&]() {
    MinCut cut{chosen, -1};
    if (auto it = neighborhood_owner.find(chosen); it != neighborhood_owner.end())
      cut.neighborhood_of = it->second;
    if (cut.neighborhood_of < 0) out.all_neighborhoods = false;
    out.cuts.push_back(std::move(cut));
  };

  if (g.n() <= 64) {
    std::vector<std::uint64_t> adj(at(g.n()), 0);
    std::uint64_t alive = 0;
    for (int v : live) {
      alive |= std::uint64_t{1} << v;
      g.neighbors(v).for_each([&](int w) { adj[at(v)] |= std::uint64_t{1} << w; });
    }
    auto disconnected = [&](std::uint64_t removed) {
      const std::uint64_t rest = alive & ~removed;
      if (rest == 0) return false;
      std::uint64_t seen = rest & (~rest + 1), frontier = seen;
      while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[at(std::countr_zero(f))];
        next &= rest & ~seen;
        seen |= next;
        frontier = next;
      }
      return seen != rest;
    };
    auto rec = [&](auto&& self, std::size_t from, std::uint64_t mask) -> void {
      if (static_cast<int>(chosen.size()) == kappa) {
        if (disconnected(mask)) record();
        return;
      }
      for (std::size_t i = from; i + (at(kappa) - chosen.size()) <= live.size(); ++i) {
        chosen.push_back(live[i]);
        self(self, i + 1, mask | (std::uint64_t{1} << live[i]));
        chosen.pop_back();
      }
    };
    rec(rec, 0, 0);
  } else {
    VertexSet removed(g.n());
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (static_cast<int>(chosen.size()) == kappa) {
        if (components(g, removed).size() >= 2) record();
        return;
      }
      for (std::size_t i = from; i + (at(kappa) - chosen.size()) <= live.size(); ++i) {
        chosen.push_back(live[i]);
        removed.set(live[i]);
        self(self, i + 1);
        removed.reset(live[i]);
        chosen.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

Rational godsil_bound(std::int64_t valency, std::int64_t vertices) {
  Rational r{valency * vertices, 2 * (vertices - 1)};
  if (r.den == 0) return {0, 1};
  const std::int64_t g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

bool at_least(std::int64_t value, const Rational& bound) {
  return value * bound.den >= bound.num;
}

CutReport cut_report(const Graph& g, int valency, bool enumerate_cuts, long long budget) {
  CutReport r;
  r.complete = g.is_complete();
  r.kappa = vertex_connectivity(g);
  r.lambda = edge_connectivity(g);
  r.whitney_ok = r.kappa <= r.lambda && r.lambda <= g.min_degree();
  r.godsil = godsil_bound(valency, g.live_count());
  r.godsil_ok = at_least(r.lambda, r.godsil);
  if (enumerate_cuts) {
    const int cap = g.live_count() <= 64 ? r.kappa : std::min(r.kappa, 3);
    try {
      r.min_cuts = enumerate_min_cuts(g, cap, r.kappa, budget);
    } catch (const SchemeError& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
      r.min_cuts_note = e.what();
    }
  }
  return r;
}

LocalCliqueStructure local_clique_structure(const Graph& g) {
  LocalCliqueStructure out;
  out.clique_sizes.assign(at(g.n()), {});
  g.alive().for_each([&](int v) {
    if (!out.k211_free) return;
    const VertexSet nb = g.neighbors(v);
    VertexSet unassigned = nb;
    std::vector<int> sizes;
    for (int u = unassigned.first(); u >= 0; u = unassigned.first()) {
      VertexSet clique = g.row(u) & nb;
      clique.set(u);
      bool ok = true;
      clique.for_each([&](int w) {
        VertexSet cw = g.row(w) & nb;
        cw.set(w);
        ok = ok && cw == clique;
      });
      if (!ok) {
        out.k211_free = false;
        out.witness_vertex = v;
        return;
      }
      sizes.push_back(clique.count());
      unassigned -= clique;
    }
    std::sort(sizes.rbegin(), sizes.rend());
    out.clique_sizes[at(v)] = std::move(sizes);
  });
  if (!out.k211_free) out.clique_sizes.assign(at(g.n()), {});
  return out;
}

bool k211_free(const Graph& g) { return local_clique_structure(g).k211_free; }

bool is_cycle_graph(const Graph& g) {
  if (g.live_count() < 3 || !is_connected(g)) return false;
  return g.min_degree() == 2 && g.max_degree() == 2;
}

bool small_graphs_isomorphic(const Graph& a, const Graph& b) {
  const std::vector<int> va = a.alive().to_vector();
  const std::vector<int> vb = b.alive().to_vector();
  if (va.size() != vb.size()) return false;
  if (va.size() > 12) {
    throw SchemeError(ErrorKind::CapExceeded, "brute-force isomorphism limited to 12 vertices");
  }
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int x : va) da.push_back(a.degree(x));
  for (int x : vb) db.push_back(b.degree(x));
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  const std::size_t n = va.size();
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || da[i] != db[j]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < i && ok; ++p)
        ok = a.adjacent(va[p], va[i]) == b.adjacent(vb[at(image[p])], vb[j]);
      if (!ok) continue;
      used[j] = 1;
      image[i] = static_cast<int>(j);
      if (self(self, i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

int shortest_cycle_through(const Graph& g, int x, int y) {
  // Min-cost flow of two units on the vertex-split graph (unit edge costs).
  struct Arc {
    int to, cap, cost, rev;
  };
  const int nodes = 2 * g.n();
  std::vector<std::vector<Arc>> net(at(nodes));
  auto add = [&](int u, int w, int cap, int cost) {
    net[at(u)].push_back({w, cap, cost, static_cast<int>(net[at(w)].size())});
    net[at(w)].push_back({u, 0, -cost, static_cast<int>(net[at(u)].size()) - 1});
  };
  g.alive().for_each([&](int u) {
    add(2 * u, 2 * u + 1, 1, 0);
    g.neighbors(u).for_each([&](int w) { add(2 * u + 1, 2 * w, 1, 1); });
  });
  const int source = 2 * x + 1, sink = 2 * y;
  int total = 0;
  for (int unit = 0; unit < 2; ++unit) {
    std::vector<int> dist(at(nodes), std::numeric_limits<int>::max());
    std::vector<std::pair<int, int>> parent(at(nodes), {-1, -1});
    dist[at(source)] = 0;
    for (int round = 0; round < nodes; ++round) {
      bool changed = false;
      for (int u = 0; u < nodes; ++u) {
        if (dist[at(u)] == std::numeric_limits<int>::max()) continue;
        for (std::size_t e = 0; e < net[at(u)].size(); ++e) {
          const Arc& arc = net[at(u)][e];
          if (arc.cap > 0 && dist[at(u)] + arc.cost < dist[at(arc.to)]) {
            dist[at(arc.to)] = dist[at(u)] + arc.cost;
            parent[at(arc.to)] = {u, static_cast<int>(e)};
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (dist[at(sink)] == std::numeric_limits<int>::max()) return -1;
    total += dist[at(sink)];
    for (int v = sink; v != source;) {
      auto [u, e] = parent[at(v)];
      Arc& arc = net[at(u)][at(e)];
      --arc.cap;
      ++net[at(v)][at(arc.rev)].cap;
      v = u;
    }
  }
  return total;
}

bool spread_cut_check(const Graph& g, const std::vector<int>& targets, int cycle_bound) {
  if (cycle_bound > 8) {
    throw SchemeError(ErrorKind::PreconditionUnverifiable, "cycle bound above 8");
  }
  const auto dist = all_pairs_distances(g);
  const auto n = at(g.n());
  for (std::size_t i = 0; i < targets.size(); ++i)
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      const int d = dist[at(targets[i]) * n + at(targets[j])];
      if (d >= 0 && d < cycle_bound + 1) {
        throw SchemeError(ErrorKind::HypothesisViolation, "targets closer than cycle_bound + 1",
                          std::to_string(targets[i]) + "," + std::to_string(targets[j]));
      }
    }
  for (int x = 0; x < g.n(); ++x) {
    if (!g.alive().test(x)) continue;
    for (int y = x + 1; y < g.n(); ++y) {
      if (dist[at(x) * n + at(y)] != 2) continue;
      const int len = shortest_cycle_through(g, x, y);
      if (len < 0 || len > cycle_bound) {
        throw SchemeError(ErrorKind::HypothesisViolation,
                          "distance-2 pair not on a short cycle",
                          std::to_string(x) + "," + std::to_string(y));
      }
    }
  }
  VertexSet removed(g.n());
  for (int t : targets) removed.set(t);
  return components(g, removed).size() <= 1;
}

}  // namespace schemeconn
