#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schemeconn/graph.hpp"

namespace schemeconn {

// Components of the live graph minus `deleted`, each sorted, ordered by least
// vertex.
std::vector<std::vector<int>> components(const Graph& g, const VertexSet& deleted);
std::vector<std::vector<int>> components(const Graph& g);

struct TwinData {
  std::vector<std::pair<int, int>> pairs;  // a < b, lexicographic
  std::vector<std::vector<int>> classes;   // groups of size >= 2
};
// Distinct vertices with identical open neighbourhoods.
TwinData twins(const Graph& g);

// Local connectivities, capped at `limit` (pass a large value for exact).
int local_vertex_connectivity(const Graph& g, int s, int t, int limit);
int local_edge_connectivity(const Graph& g, int s, int t, int limit);

// Exact vertex connectivity via vertex-split max flows on Even's schedule.
// Complete graphs return n - 1. Throws Disconnected.
int vertex_connectivity(const Graph& g);
// Exact edge connectivity, source fixed at the least live vertex.
int edge_connectivity(const Graph& g);

struct MinCut {
  std::vector<int> vertices;
  int neighborhood_of = -1;  // a with Gamma(a) == cut, or -1
};

struct MinCutEnumeration {
  int kappa = 0;
  std::vector<MinCut> cuts;
  bool all_neighborhoods = true;
};

inline constexpr long long kDefaultCutBudget = 50'000'000;

// All disconnecting sets of size kappa. Requires kappa <= cap_size and
// (cap_size <= 3 or n <= 64) and C(n, kappa) <= budget; CapExceeded
// otherwise.
MinCutEnumeration enumerate_min_cuts(const Graph& g, int cap_size,
                                     long long budget = kDefaultCutBudget);
MinCutEnumeration enumerate_min_cuts(const Graph& g, int cap_size, int kappa, long long budget);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};
// v_1 |X| / (2 (|X| - 1)), reduced.
Rational godsil_bound(std::int64_t valency, std::int64_t vertices);
bool at_least(std::int64_t value, const Rational& bound);

struct CutReport {
  int kappa = 0;
  int lambda = 0;
  bool complete = false;
  bool whitney_ok = true;  // kappa <= lambda <= min degree
  Rational godsil;
  bool godsil_ok = true;
  std::optional<MinCutEnumeration> min_cuts;  // absent when over budget
  std::string min_cuts_note;
};
CutReport cut_report(const Graph& g, int valency, bool enumerate_cuts,
                     long long budget = kDefaultCutBudget);

struct LocalCliqueStructure {
  bool k211_free = true;
  int witness_vertex = -1;
  // Per vertex: sizes of the cliques partitioning its neighbourhood (sorted
  // descending); empty when not K_{2,1,1}-free.
  std::vector<std::vector<int>> clique_sizes;
};
LocalCliqueStructure local_clique_structure(const Graph& g);
bool k211_free(const Graph& g);

// Connected and 2-regular with at least 3 vertices.
bool is_cycle_graph(const Graph& g);
// Brute-force isomorphism test for graphs with at most 12 live vertices.
bool small_graphs_isomorphic(const Graph& a, const Graph& b);

// Connectivity of g - T after verifying that every distance-2 pair lies on
// a cycle of length <= cycle_bound and T is (cycle_bound + 1)-spread.
// Throws PreconditionUnverifiable when cycle_bound > 8 and
// HypothesisViolation when a precondition fails.
bool spread_cut_check(const Graph& g, const std::vector<int>& targets, int cycle_bound);
// Length of the shortest cycle through both x and y, or -1.
int shortest_cycle_through(const Graph& g, int x, int y);

}  // namespace schemeconn
