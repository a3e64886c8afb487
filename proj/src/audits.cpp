#include "schemeconn/audits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "schemeconn/catalog.hpp"
#include "schemeconn/error.hpp"

namespace schemeconn {

namespace {

std::size_t at(int x) { return static_cast<std::size_t>(x); }

std::string join(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Live vertices outside the component `comp`, used as a deletion mask so
// that searches stay inside one component.
VertexSet outside_component(const RelationContext& ctx, int comp) {
  VertexSet keep = VertexSet::from_list(ctx.graph.n(), ctx.components[at(comp)]);
  return ctx.graph.alive() - keep;
}

bool connected_without(const Graph& g, const VertexSet& deleted) {
  return components(g, deleted).size() <= 1;
}

// Bron-Kerbosch with pivoting; stops after `cap` maximal cliques.
class CliqueEnumerator {
 public:
  CliqueEnumerator(const Graph& g, long long cap) : g_(g), cap_(cap) {}

  template <typename F>
  bool run(F&& visit) {
    std::vector<int> r;
    VertexSet p = g_.alive();
    VertexSet x(g_.n());
    expand(r, p, x, visit);
    return !truncated_;
  }
  long long found() const { return found_; }

 private:
  template <typename F>
  void expand(std::vector<int>& r, VertexSet p, VertexSet x, F& visit) {
    if (truncated_) return;
    if (p.empty() && x.empty()) {
      if (found_ >= cap_) {
        truncated_ = true;
        return;
      }
      ++found_;
      visit(r);
      return;
    }
    int pivot = -1, best = -1;
    (p | x).for_each([&](int u) {
      const int c = p.intersection_count(g_.row(u));
      if (c > best) {
        best = c;
        pivot = u;
      }
    });
    const VertexSet candidates = p - g_.row(pivot);
    for (int v : candidates.to_vector()) {
      r.push_back(v);
      expand(r, p & g_.row(v), x & g_.row(v), visit);
      r.pop_back();
      p.reset(v);
      x.set(v);
      if (truncated_) return;
    }
  }

  const Graph& g_;
  long long cap_;
  long long found_ = 0;
  bool truncated_ = false;
};

}  // namespace

RelationContext make_relation_context(const SchemeDescriptor& scheme, int i) {
  Graph g = relation_graph(scheme, i);
  Diagram h = distribution_diagram(scheme, i);
  auto comps = components(g);
  std::vector<int> component_of(at(g.n()), -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int x : comps[c]) component_of[at(x)] = static_cast<int>(c);
  const bool connected = comps.size() == 1;
  const bool complete = g.is_complete();
  const bool cm = is_complete_multipartite(g);
  return RelationContext{scheme, i, std::move(g), std::move(h), connected, complete, cm,
                         std::move(component_of), std::move(comps)};
}

const char* audit_status_name(AuditStatus s) {
  switch (s) {
    case AuditStatus::Checked: return "checked";
    case AuditStatus::SkippedCompleteMultipartite: return "skipped_complete_multipartite";
    case AuditStatus::SkippedDisconnected: return "skipped_disconnected";
  }
  return "unknown";
}

Theorem1Audit theorem1_audit(const RelationContext& ctx) {
  Theorem1Audit r;
  const Graph& g = ctx.graph;
  int connected_count = 0;
  for (int a = 0; a < g.n(); ++a)
    if (connected_without(g, g.closed_neighbors(a))) ++connected_count;
  r.exists_a_connected = connected_count > 0;
  r.forall_a_connected = connected_count == g.n();
  r.h_prime_connected = h_prime_connected(ctx.diagram);
  r.twin_pairs = static_cast<int>(twins(g).pairs.size());
  r.twin_free = r.twin_pairs == 0;
  r.equivalent = r.exists_a_connected == r.forall_a_connected &&
                 r.forall_a_connected == r.h_prime_connected &&
                 r.h_prime_connected == r.twin_free;
  if (!ctx.connected)
    r.status = AuditStatus::SkippedDisconnected;
  else if (ctx.complete_multipartite)
    r.status = AuditStatus::SkippedCompleteMultipartite;
  return r;
}

CorollaryAudit corollary_audits(const RelationContext& ctx, const CorollaryConfig& config,
                                int known_kappa) {
  CorollaryAudit r;
  const Graph& g = ctx.graph;
  const int n = g.n();

  std::vector<VertexSet> outside;
  std::vector<int> comp_kappa;
  for (std::size_t c = 0; c < ctx.components.size(); ++c) {
    outside.push_back(outside_component(ctx, static_cast<int>(c)));
    if (ctx.connected && known_kappa >= 0) {
      comp_kappa.push_back(known_kappa);
      continue;
    }
    const Graph sub = g.without(outside.back());
    comp_kappa.push_back(sub.live_count() >= 2 ? vertex_connectivity(sub) : 0);
  }

  // C2
  for (int a = 0; a < n && r.c2_ok; ++a) {
    const int c = ctx.component_of[at(a)];
    int big = 0;
    for (const auto& comp : components(g, outside[at(c)] | g.neighbors(a)))
      if (comp.size() >= 2) ++big;
    if (big > 1) {
      r.c2_ok = false;
      r.c2_witness = "a=" + std::to_string(a) + " non_singleton_components=" + std::to_string(big);
    }
  }

  // C1
  for (int a = 0; a < n && r.c1_ok; ++a) {
    const int c = ctx.component_of[at(a)];
    const int kappa = comp_kappa[at(c)];
    std::vector<int> perp{a};
    for (int x : g.neighbors(a).to_vector()) perp.push_back(x);
    const int k = static_cast<int>(perp.size()) - 1;

    auto check = [&](const std::vector<int>& t) {
      VertexSet del = outside[at(c)];
      for (int x : t) del.set(x);
      ++r.c1_sets_searched;
      if (!connected_without(g, del)) {
        r.c1_ok = false;
        r.c1_witness = "a=" + std::to_string(a) + " T=" + join(t);
      }
    };

    if (k <= config.exhaustive_max_valency) {
      const std::uint32_t all_nb = ((std::uint32_t{1} << (k + 1)) - 1) & ~std::uint32_t{1};
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (k + 1)) && r.c1_ok; ++mask) {
        if ((mask & all_nb) == all_nb) continue;
        if (std::popcount(mask) < kappa) {
          ++r.c1_sets_certified;
          continue;
        }
        std::vector<int> t;
        for (int b = 0; b <= k; ++b)
          if (mask >> b & 1U) t.push_back(perp[at(b)]);
        check(t);
      }
      continue;
    }

    r.c1_exhaustive = false;
    // All T with |T| <= 3.
    if (kappa > 3) {
      const long long m = k + 1;
      r.c1_sets_certified += 1 + m + m * (m - 1) / 2 + m * (m - 1) * (m - 2) / 6;
    } else {
      for (int x = 0; x <= k && r.c1_ok; ++x)
        for (int y = x; y <= k && r.c1_ok; ++y)
          for (int z = y; z <= k && r.c1_ok; ++z) {
            std::vector<int> t{perp[at(x)], perp[at(y)], perp[at(z)]};
            std::sort(t.begin(), t.end());
            t.erase(std::unique(t.begin(), t.end()), t.end());
            if (static_cast<int>(t.size()) < kappa)
              ++r.c1_sets_certified;
            else
              check(t);
          }
    }
    // Deterministic sample of larger T.
    std::mt19937_64 rng(config.seed ^ (static_cast<std::uint64_t>(a) * 0x9E3779B97F4A7C15ULL));
    for (int s = 0; s < config.samples_per_basepoint && r.c1_ok; ++s) {
      const int size = 4 + static_cast<int>(rng() % static_cast<std::uint64_t>(k - 3));
      std::vector<int> pool = perp;
      for (int j = 0; j < size; ++j) {
        const auto pick = at(j) + rng() % (pool.size() - at(j));
        std::swap(pool[at(j)], pool[pick]);
      }
      std::vector<int> t(pool.begin(), pool.begin() + size);
      if (std::find(t.begin(), t.end(), a) == t.end() && size == k) t.back() = a;
      std::sort(t.begin(), t.end());
      if (size < kappa)
        ++r.c1_sets_certified;
      else
        check(t);
    }
  }

  // C3
  CliqueEnumerator cliques(g, config.clique_cap);
  r.c3_truncated = !cliques.run([&](const std::vector<int>& clique) {
    if (!r.c3_ok) return;
    const int c = ctx.component_of[at(clique.front())];
    VertexSet del = outside[at(c)];
    for (int x : clique) del.set(x);
    if (!connected_without(g, del)) {
      std::vector<int> sorted = clique;
      std::sort(sorted.begin(), sorted.end());
      r.c3_ok = false;
      r.c3_witness = "C=" + join(sorted);
    }
  });
  r.c3_cliques = cliques.found();
  return r;
}

std::vector<int> twin_classes(const SchemeDescriptor& scheme, int i) {
  std::vector<int> out;
  for (int j = 1; j <= scheme.d(); ++j)
    if (j != i && scheme.p(i, i, j) == scheme.valency(i)) out.push_back(j);
  return out;
}

IUWDecomposition iuw_decompose(const RelationContext& ctx, int a) {
  const SchemeDescriptor& s = ctx.scheme;
  const Graph& g = ctx.graph;
  IUWDecomposition r;
  r.basepoint = a;
  r.component_map = components(g, g.closed_neighbors(a));
  const std::vector<int> hp = h_prime_vertices(ctx.diagram);
  r.h_prime_components = diagram_components(ctx.diagram, hp);
  r.h_prime_connected = r.h_prime_components.size() <= 1;
  if (r.h_prime_connected) return r;

  r.i_tilde = twin_classes(s, ctx.relation);
  std::vector<std::vector<int>> candidates;
  for (const auto& comp : r.h_prime_components) {
    std::vector<int> rest;
    for (int j : comp)
      if (!contains(r.i_tilde, j)) rest.push_back(j);
    if (!rest.empty()) candidates.push_back(std::move(rest));
  }
  auto weight = [&](const std::vector<int>& c) {
    std::int64_t w = 0;
    for (int j : c) w += s.valency(j);
    return w;
  };
  auto better = [&](const std::vector<int>& x, const std::vector<int>& y) {
    const auto wx = weight(x), wy = weight(y);
    return wx != wy ? wx < wy : x < y;
  };
  const std::vector<int>* best = nullptr;
  for (const auto& c : candidates)
    if (c.size() >= 2 && (!best || better(c, *best))) best = &c;
  if (!best) {
    for (const auto& c : candidates)
      if (!best || better(c, *best)) best = &c;
    r.u_tilde_singleton_fallback = best != nullptr;
  }
  if (best) r.u_tilde = *best;
  for (int j : hp)
    if (!contains(r.i_tilde, j) && !contains(r.u_tilde, j)) r.w_tilde.push_back(j);

  for (int b = 0; b < s.v(); ++b) {
    const int j = s.table()(a, b);
    if (contains(r.i_tilde, j)) r.i_a.push_back(b);
    else if (contains(r.u_tilde, j)) r.u_a.push_back(b);
    else if (contains(r.w_tilde, j)) r.w_a.push_back(b);
  }
  return r;
}

WEmptyAudit w_empty_audit(const RelationContext& ctx) {
  const SchemeDescriptor& s = ctx.scheme;
  const Graph& g = ctx.graph;
  const int n = g.n();
  WEmptyAudit r;
  r.applicable = ctx.connected;

  const IUWDecomposition base = iuw_decompose(ctx, 0);
  r.h_prime_connected = base.h_prime_connected;
  r.i_tilde = base.i_tilde;
  r.u_tilde = base.u_tilde;
  r.w_tilde = base.w_tilde;

  // Twins are exactly the pairs whose class lies in I-tilde.
  {
    const std::vector<int> tc = twin_classes(s, ctx.relation);
    std::vector<std::pair<int, int>> by_class;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (contains(tc, s.table()(x, y))) by_class.emplace_back(x, y);
    r.twins_match_i_tilde = by_class == twins(g).pairs;
  }

  if (!base.h_prime_connected) {
    std::vector<int> class_count(at(s.d() + 1));
    for (int a = 0; a < n; ++a) {
      std::fill(class_count.begin(), class_count.end(), 0);
      for (int b = 0; b < n; ++b) ++class_count[at(s.table()(a, b))];
      auto total = [&](const std::vector<int>& cls) {
        std::int64_t sum = 0;
        for (int j : cls) sum += class_count[at(j)];
        return sum;
      };
      auto expected = [&](const std::vector<int>& cls) {
        std::int64_t sum = 0;
        for (int j : cls) sum += s.valency(j);
        return sum;
      };
      if (total(r.i_tilde) != expected(r.i_tilde) || total(r.u_tilde) != expected(r.u_tilde) ||
          total(r.w_tilde) != expected(r.w_tilde))
        r.sizes_basepoint_independent = false;
    }
  }

  if (ctx.connected && !r.w_tilde.empty()) {
    r.lemma_u_dist2 = "checked";
    r.prop_w_i_disjoint = "checked";
    for (int x = 0; x < n; ++x) {
      const IUWDecomposition dx = iuw_decompose(ctx, x);
      const std::vector<int> dist = distances_from(g, x);
      for (int u : dx.u_a)
        if (dist[at(u)] != 2) r.lemma_u_dist2_ok = false;
      for (int b : dx.u_a) {
        const IUWDecomposition db = iuw_decompose(ctx, b);
        for (int w : dx.w_a)
          if (contains(db.i_a, w)) r.prop_w_i_disjoint_ok = false;
      }
    }
  }

  if (ctx.connected) {
    std::vector<int> hcomp(at(s.d() + 1), -1);
    for (std::size_t c = 0; c < base.h_prime_components.size(); ++c)
      for (int j : base.h_prime_components[c]) hcomp[at(j)] = static_cast<int>(c);
    const bool check_common = n <= 64;
    if (check_common) r.prop_common_neighbours = "checked";
    for (int a = 0; a < n; ++a) {
      const auto comps = components(g, g.closed_neighbors(a));
      if (!base.h_prime_connected) {
        for (const auto& comp : comps) {
          const int h0 = hcomp[at(s.table()(a, comp.front()))];
          for (int x : comp)
            if (hcomp[at(s.table()(a, x))] != h0) {
              r.prop_components_respect_h = false;
              if (r.witness.empty())
                r.witness = "a=" + std::to_string(a) + " path joins classes across H' components";
            }
        }
      }
      if (check_common && comps.size() >= 2) {
        const VertexSet na = g.neighbors(a);
        for (std::size_t c1 = 0; c1 < comps.size(); ++c1)
          for (std::size_t c2 = c1 + 1; c2 < comps.size(); ++c2)
            for (int x : comps[c1])
              for (int y : comps[c2])
                if (!(g.neighbors(x) & g.neighbors(y)).is_subset_of(na)) {
                  r.prop_common_neighbours_ok = false;
                  if (r.witness.empty())
                    r.witness = "a=" + std::to_string(a) + " x=" + std::to_string(x) +
                                " y=" + std::to_string(y);
                }
      }
    }
  }

  r.ok = r.twins_match_i_tilde && r.sizes_basepoint_independent && r.lemma_u_dist2_ok &&
         r.prop_w_i_disjoint_ok;
  if (r.applicable) {
    if (!r.w_tilde.empty() && r.witness.empty()) r.witness = "W-tilde=" + join(r.w_tilde);
    r.ok = r.ok && r.w_tilde.empty() && r.prop_components_respect_h && r.prop_common_neighbours_ok;
  }
  return r;
}

SmallCutAudit small_cut_theorems_audit(const RelationContext& ctx, int kappa) {
  SmallCutAudit r;
  r.applicable = ctx.connected;
  if (!r.applicable) {
    r.details = "relation disconnected";
    return r;
  }
  const Graph& g = ctx.graph;
  const int n = g.n();
  const int v1 = static_cast<int>(ctx.scheme.valency(ctx.relation));
  r.kappa = kappa;
  r.diameter = diameter(g);
  r.is_cycle = is_cycle_graph(g);
  r.cycle_iff_kappa2 = (kappa == 2) == r.is_cycle;
  if (!ctx.complete && kappa <= 2) r.tcut2_ok = r.is_cycle;

  if (r.diameter == 2) {
    for (int t = 1; t <= v1; ++t) {
      if (static_cast<long long>(n) <= static_cast<long long>(v1) * (t - 1) + 2) continue;
      if (t == v1) {
        r.tdiam2_t_eq_v1 = true;
        continue;
      }
      r.tdiam2_max_t = t;
      if (kappa < t + 1) {
        r.tdiam2_ok = false;
        r.details += "kappa " + std::to_string(kappa) + " below t+1 for t=" + std::to_string(t) + "; ";
      }
    }
    if (kappa <= 3) {
      struct Target {
        const char* name;
        Graph graph;
      };
      const Target targets[] = {{"C4", cycle_graph(4)},
                                {"C5", cycle_graph(5)},
                                {"K33", complete_bipartite_graph(3, 3)},
                                {"Petersen", petersen_graph()}};
      for (const auto& target : targets) {
        const Graph& t = target.graph;
        if (t.n() != n || t.min_degree() != g.min_degree() || t.max_degree() != g.max_degree() ||
            girth(t) != girth(g))
          continue;
        if (small_graphs_isomorphic(g, t)) {
          r.tcut3_match = target.name;
          break;
        }
      }
      r.tcut3_ok = !r.tcut3_match.empty();
      if (!r.tcut3_ok) r.details += "diameter 2 with kappa <= 3 outside the exception list; ";
    }
  }
  return r;
}

BallDeletionAudit ball_deletion_audit(const RelationContext& ctx, int t) {
  BallDeletionAudit r;
  r.applicable = ctx.connected && !ctx.complete_multipartite;
  if (!r.applicable) return r;
  const SchemeDescriptor& s = ctx.scheme;
  const Graph& g = ctx.graph;
  const Diagram& h = ctx.diagram;
  const int n = g.n();
  const int big_d = h.diameter;

  std::vector<int> outside_ball;
  for (int j = 0; j <= s.d(); ++j)
    if (h.levels[at(j)] > t) outside_ball.push_back(j);
  const bool h_rest_connected = diagram_components(h, outside_ball).size() <= 1;

  for (int a = 0; a < n; ++a) {
    VertexSet ball(n);
    for (int x = 0; x < n; ++x)
      if (h.levels[at(s.table()(a, x))] <= t) ball.set(x);
    const auto comps = components(g, ball);
    if (comps.size() < 2) continue;
    std::vector<int> comp_of(at(n), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (int x : comps[c]) comp_of[at(x)] = static_cast<int>(c);
    for (int b = 0; b < n; ++b) {
      if (h.levels[at(s.table()(a, b))] != big_d) continue;
      ++r.part_a_checks;
      for (int x = 0; x < n; ++x) {
        if (comp_of[at(x)] < 0 || comp_of[at(x)] == comp_of[at(b)]) continue;
        if (h.levels[at(s.table()(a, x))] > 2 * t) {
          r.ok = false;
          if (r.witness.empty())
            r.witness = "t=" + std::to_string(t) + " a=" + std::to_string(a) +
                        " b=" + std::to_string(b) + " x=" + std::to_string(x);
        }
      }
    }
    if (h_rest_connected) {
      ++r.part_b_triggers;
      if (big_d > 2 * t) {
        r.ok = false;
        if (r.witness.empty())
          r.witness = "t=" + std::to_string(t) + " a=" + std::to_string(a) + " D > 2t";
      }
    }
  }
  return r;
}

BallDeletionAudit ball_deletion_audit(const RelationContext& ctx) {
  BallDeletionAudit total;
  total.applicable = ctx.connected && !ctx.complete_multipartite;
  if (!total.applicable) return total;
  for (int t = 1; t <= ctx.diagram.diameter; ++t) {
    const BallDeletionAudit r = ball_deletion_audit(ctx, t);
    total.part_a_checks += r.part_a_checks;
    total.part_b_triggers += r.part_b_triggers;
    if (!r.ok && total.ok) total.witness = r.witness;
    total.ok = total.ok && r.ok;
  }
  return total;
}

}  // namespace schemeconn
