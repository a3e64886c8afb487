#include "schemeconn/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "schemeconn/error.hpp"

namespace schemeconn {

namespace {

void require_relation(const SchemeDescriptor& scheme, int i) {
  if (!scheme.is_symmetric()) {
    throw SchemeError(ErrorKind::NotSymmetric, "analysis needs a symmetric scheme");
  }
  if (i == 0) throw SchemeError(ErrorKind::IdentityClassRequested, "class 0 is the identity");
  if (i < 0 || i > scheme.d()) {
    throw SchemeError(ErrorKind::InvalidArgument, "relation out of range", std::to_string(i));
  }
}

std::size_t at(int x) { return static_cast<std::size_t>(x); }

}  // namespace

bool Diagram::all_reachable() const {
  return std::none_of(levels.begin(), levels.end(), [](int l) { return l == kUnreachable; });
}

Diagram distribution_diagram(const SchemeDescriptor& scheme, int i) {
  require_relation(scheme, i);
  const int d = scheme.d();
  Diagram h;
  h.relation = i;
  h.d = d;
  h.adjacency.assign(at(d + 1), std::vector<char>(at(d + 1), 0));
  for (int j = 0; j <= d; ++j)
    for (int k = 0; k <= d; ++k)
      h.adjacency[at(j)][at(k)] = (scheme.p(i, j, k) + scheme.p(i, k, j)) > 0;

  h.levels.assign(at(d + 1), kUnreachable);
  h.levels[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int j = queue[head];
    for (int k = 0; k <= d; ++k) {
      if (k != j && h.adjacent(j, k) && h.levels[at(k)] == kUnreachable) {
        h.levels[at(k)] = h.levels[at(j)] + 1;
        queue.push_back(k);
      }
    }
  }
  h.diameter = *std::max_element(h.levels.begin(), h.levels.end());
  h.level_sets.assign(at(h.diameter + 1), {});
  for (int j = 0; j <= d; ++j)
    if (h.levels[at(j)] != kUnreachable) h.level_sets[at(h.levels[at(j)])].push_back(j);
  return h;
}

std::vector<std::vector<int>> diagram_components(const Diagram& h, const std::vector<int>& keep) {
  std::vector<char> in(at(h.d + 1), 0), seen(at(h.d + 1), 0);
  for (int j : keep) in[at(j)] = 1;
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> out;
  for (int start : sorted) {
    if (seen[at(start)]) continue;
    std::vector<int> comp{start};
    seen[at(start)] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int k = 0; k <= h.d; ++k) {
        if (in[at(k)] && !seen[at(k)] && k != comp[head] && h.adjacent(comp[head], k)) {
          seen[at(k)] = 1;
          comp.push_back(k);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<int> h_prime_vertices(const Diagram& h) {
  std::vector<int> out;
  for (int j = 1; j <= h.d; ++j)
    if (j != h.relation) out.push_back(j);
  return out;
}

bool h_prime_connected(const Diagram& h) {
  return diagram_components(h, h_prime_vertices(h)).size() <= 1;
}

std::vector<int> project_walk(const SchemeDescriptor& scheme, int i, int a,
                              const std::vector<int>& walk) {
  require_relation(scheme, i);
  const auto& t = scheme.table();
  std::vector<int> out;
  out.reserve(walk.size());
  for (std::size_t s = 0; s < walk.size(); ++s) {
    if (walk[s] < 0 || walk[s] >= t.v()) {
      throw SchemeError(ErrorKind::InvalidArgument, "walk vertex out of range");
    }
    if (s > 0 && t(walk[s - 1], walk[s]) != i) {
      throw SchemeError(ErrorKind::InvalidArgument, "consecutive walk vertices are not adjacent",
                        std::to_string(walk[s - 1]) + "-" + std::to_string(walk[s]));
    }
    out.push_back(t(a, walk[s]));
  }
  return out;
}

std::vector<int> lift_walk(const SchemeDescriptor& scheme, int i, int a, int b,
                           const std::vector<int>& class_walk) {
  require_relation(scheme, i);
  const auto& t = scheme.table();
  if (class_walk.empty() || t(a, b) != class_walk.front()) {
    throw SchemeError(ErrorKind::LiftImpossible, "class walk must start at class(a, b)");
  }
  std::vector<int> out{b};
  for (std::size_t s = 1; s < class_walk.size(); ++s) {
    const int cur = out.back();
    int chosen = -1;
    for (int x = 0; x < t.v() && chosen < 0; ++x)
      if (t(cur, x) == i && t(a, x) == class_walk[s]) chosen = x;
    if (chosen < 0) {
      throw SchemeError(ErrorKind::LiftImpossible, "no neighbour in the requested class",
                        "step " + std::to_string(s));
    }
    out.push_back(chosen);
  }
  return out;
}

CheckResult geodesic_correspondence_check(const SchemeDescriptor& scheme, int i) {
  const Diagram h = distribution_diagram(scheme, i);
  const Graph g = relation_graph(scheme, i);
  const auto& t = scheme.table();
  for (int a = 0; a < t.v(); ++a) {
    const auto dist = distances_from(g, a);
    for (int b = 0; b < t.v(); ++b) {
      if (dist[at(b)] != h.levels[at(t(a, b))]) {
        return {false, PairWitness{a, b},
                "d_Gamma=" + std::to_string(dist[at(b)]) +
                    " d_H=" + std::to_string(h.levels[at(t(a, b))])};
      }
    }
  }
  return {};
}

GeodesicData geodesic_data(const SchemeDescriptor& scheme, const Diagram& h) {
  GeodesicData out;
  out.c_values.assign(at(h.d + 1), 0);
  for (int j = 1; j <= h.d; ++j) {
    const int level = h.levels[at(j)];
    if (level == kUnreachable || level == 0) continue;
    std::int64_t sum = 0;
    for (int l : h.level_sets[at(level - 1)]) sum += scheme.p(h.relation, l, j);
    out.c_values[at(j)] = sum;
    if (sum == 1) out.unique_geodesic_classes.push_back(j);
  }
  return out;
}

std::int64_t c_of(const SchemeDescriptor& scheme, const Diagram& h, int target) {
  if (target <= 0 || target > h.d || h.levels[at(target)] == kUnreachable) {
    throw SchemeError(ErrorKind::InvalidArgument, "c() needs a reachable class >= 1",
                      std::to_string(target));
  }
  return geodesic_data(scheme, h).c_values[at(target)];
}

CheckResult c_monotone_check(const SchemeDescriptor& scheme, const Diagram& h) {
  const auto c = geodesic_data(scheme, h).c_values;
  if (c[at(h.relation)] != 1) {
    return {false, std::nullopt, "c(i) != 1 for the source class"};
  }
  for (int j = 1; j <= h.d; ++j) {
    if (h.levels[at(j)] == kUnreachable) continue;
    for (int k = 1; k <= h.d; ++k) {
      if (k == j || !h.adjacent(j, k) || h.levels[at(k)] != h.levels[at(j)] + 1) continue;
      if (c[at(j)] > c[at(k)]) {
        return {false, std::nullopt,
                "c decreases along geodesic step " + std::to_string(j) + "->" + std::to_string(k)};
      }
    }
  }
  for (int j = 1; j <= h.d; ++j) {
    if (c[at(j)] != 1) continue;
    std::vector<int> stack{j};
    std::vector<char> seen(at(h.d + 1), 0);
    while (!stack.empty()) {
      const int s = stack.back();
      stack.pop_back();
      if (c[at(s)] != 1) {
        return {false, std::nullopt,
                "c(" + std::to_string(j) + ")=1 but predecessor " + std::to_string(s) + " has c=" +
                    std::to_string(c[at(s)])};
      }
      for (int p = 1; p <= h.d; ++p) {
        if (!seen[at(p)] && p != s && h.adjacent(p, s) &&
            h.levels[at(p)] == h.levels[at(s)] - 1) {
          seen[at(p)] = 1;
          stack.push_back(p);
        }
      }
    }
  }
  return {};
}

CheckResult unique_geodesic_check(const SchemeDescriptor& scheme, int i) {
  const Diagram h = distribution_diagram(scheme, i);
  const auto data = geodesic_data(scheme, h);
  if (data.unique_geodesic_classes.empty()) return {};
  std::vector<char> unique(at(h.d + 1), 0);
  for (int j : data.unique_geodesic_classes) unique[at(j)] = 1;

  // Unique 0 -> j geodesic in H itself.
  std::vector<std::int64_t> paths(at(h.d + 1), 0);
  paths[0] = 1;
  for (int level = 1; level <= h.diameter; ++level)
    for (int k : h.level_sets[at(level)])
      for (int p : h.level_sets[at(level - 1)])
        if (h.adjacent(p, k)) paths[at(k)] += paths[at(p)];
  for (int j : data.unique_geodesic_classes) {
    if (paths[at(j)] != 1) {
      return {false, std::nullopt, "class " + std::to_string(j) + " has c=1 but several H geodesics"};
    }
  }

  const Graph g = relation_graph(scheme, i);
  const auto dist = all_pairs_distances(g);
  const auto n = static_cast<std::size_t>(g.n());
  const auto& t = scheme.table();
  for (int a = 0; a < g.n(); ++a) {
    for (int b = 0; b < g.n(); ++b) {
      if (!unique[at(t(a, b))]) continue;
      const int dab = dist[at(a) * n + at(b)];
      int size = 0;
      for (std::size_t x = 0; x < n; ++x) {
        const int ax = dist[at(a) * n + x], xb = dist[x * n + at(b)];
        if (ax >= 0 && xb >= 0 && ax + xb == dab) ++size;
      }
      if (size != dab + 1) {
        return {false, PairWitness{a, b},
                "interval size " + std::to_string(size) + " != " + std::to_string(dab + 1)};
      }
    }
  }
  return {};
}

VertexSet interval(const Graph& g, int a, int b) {
  const auto da = distances_from(g, a);
  const auto db = distances_from(g, b);
  if (da[at(b)] == kUnreachable) {
    throw SchemeError(ErrorKind::DisconnectedPair, "no path between the pair",
                      std::to_string(a) + "," + std::to_string(b));
  }
  VertexSet out(g.n());
  for (int x = 0; x < g.n(); ++x)
    if (da[at(x)] >= 0 && db[at(x)] >= 0 && da[at(x)] + db[at(x)] == da[at(b)]) out.set(x);
  return out;
}

std::vector<Proximity> proximal_partition(const Graph& g, const std::vector<int>& targets) {
  if (targets.empty()) throw SchemeError(ErrorKind::InvalidArgument, "target set is empty");
  std::vector<std::vector<int>> dist;
  dist.reserve(targets.size());
  for (int y : targets) dist.push_back(distances_from(g, y));
  std::vector<Proximity> out(at(g.n()));
  for (int x = 0; x < g.n(); ++x) {
    int best = -1;
    for (const auto& d : dist) {
      const int dx = d[at(x)];
      if (dx >= 0 && (best < 0 || dx < best)) best = dx;
    }
    if (best < 0) continue;
    auto& p = out[at(x)];
    for (std::size_t t = 0; t < targets.size(); ++t)
      if (dist[t][at(x)] == best) p.proximal.push_back(targets[t]);
    std::sort(p.proximal.begin(), p.proximal.end());
    p.proximal.erase(std::unique(p.proximal.begin(), p.proximal.end()), p.proximal.end());
    if (p.proximal.size() == 1) p.only = p.proximal.front();
  }
  return out;
}

bool is_p_polynomial_generator(const Diagram& h) {
  if (h.diameter != h.d || !h.all_reachable()) return false;
  return std::all_of(h.level_sets.begin(), h.level_sets.end(),
                     [](const auto& s) { return s.size() == 1; });
}

std::string diagram_to_dot(const Diagram& h) {
  std::ostringstream out;
  out << "graph H" << h.relation << " {\n";
  for (int j = 0; j <= h.d; ++j) {
    out << "  " << j << " [label=\"" << j << "\"";
    if (h.levels[at(j)] != kUnreachable) out << ", level=" << h.levels[at(j)];
    out << "];\n";
  }
  for (int j = 0; j <= h.d; ++j)
    for (int k = j; k <= h.d; ++k)
      if (h.adjacent(j, k)) out << "  " << j << " -- " << k << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace schemeconn
