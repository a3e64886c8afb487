#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schemeconn/graph.hpp"
#include "schemeconn/scheme.hpp"

namespace schemeconn {

// Unweighted distribution diagram H_i on class indices {0..d}: j ~ k iff
// p_ij^k + p_ik^j > 0, loops allowed. Loops are kept for display only; every
// distance and connectivity computation ignores them.
struct Diagram {
  int relation = 0;
  int d = 0;
  std::vector<std::vector<char>> adjacency;  // (d+1) x (d+1), diagonal = loops
  std::vector<int> levels;                   // d_H(0, j), kUnreachable if none
  std::vector<std::vector<int>> level_sets;  // I_h for h = 0..diameter
  int diameter = 0;

  bool adjacent(int j, int k) const {
    return adjacency[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] != 0;
  }
  bool loop(int j) const { return adjacent(j, j); }
  bool all_reachable() const;
};

Diagram distribution_diagram(const SchemeDescriptor& scheme, int i);

// Connected components (loopless, ascending order) of the diagram restricted
// to `keep`.
std::vector<std::vector<int>> diagram_components(const Diagram& h, const std::vector<int>& keep);
// Classes of H' = H minus {0, i}.
std::vector<int> h_prime_vertices(const Diagram& h);
// H' nonempty and connected; the empty H' (d = 1) counts as connected.
bool h_prime_connected(const Diagram& h);

// phi_a images of a Gamma_i walk. Throws InvalidArgument on a non-walk.
std::vector<int> project_walk(const SchemeDescriptor& scheme, int i, int a,
                              const std::vector<int>& walk);
// Gamma_i walk starting at b whose projection is class_walk; least-index
// choice at every step. Throws LiftImpossible when preconditions fail.
std::vector<int> lift_walk(const SchemeDescriptor& scheme, int i, int a, int b,
                           const std::vector<int>& class_walk);

struct PairWitness {
  int a = -1;
  int b = -1;
};

struct CheckResult {
  bool ok = true;
  std::optional<PairWitness> witness;
  std::string detail;
};

// d_Gamma(a, b) == levels[class(a, b)] for every pair.
CheckResult geodesic_correspondence_check(const SchemeDescriptor& scheme, int i);

struct GeodesicData {
  std::vector<std::int64_t> c_values;       // index 0 unused (0)
  std::vector<int> unique_geodesic_classes; // {j : c(j) = 1}
};

// c(j) = sum over l in I_{h-1} of p_{i l}^j, for j in I_h, h >= 1.
GeodesicData geodesic_data(const SchemeDescriptor& scheme, const Diagram& h);
std::int64_t c_of(const SchemeDescriptor& scheme, const Diagram& h, int target);
// Monotone along diagram geodesics; c = 1 propagates to geodesic predecessors.
CheckResult c_monotone_check(const SchemeDescriptor& scheme, const Diagram& h);
// For every class with c = 1, each pair in it has interval size d + 1.
CheckResult unique_geodesic_check(const SchemeDescriptor& scheme, int i);

// {x : d(a,x) + d(x,b) = d(a,b)}. Throws DisconnectedPair.
VertexSet interval(const Graph& g, int a, int b);

struct Proximity {
  std::vector<int> proximal;  // argmin_{y in T} d(x, y), ascending
  int only = -1;              // unique minimiser, or -1
};
std::vector<Proximity> proximal_partition(const Graph& g, const std::vector<int>& targets);

// Distribution diagram is the path 0 - 1 - ... - d with one class per level.
bool is_p_polynomial_generator(const Diagram& h);

std::string diagram_to_dot(const Diagram& h);

}  // namespace schemeconn
