#pragma once

#include <vector>

#include "schemeconn/graph.hpp"

namespace schemeconn::detail {

// Unit-capacity network for Dinic max-flow, rebuilt once per graph and reset
// between source/sink pairs.
class UnitNetwork {
 public:
  enum class Mode { VertexSplit, Edge };

  UnitNetwork(const Graph& g, Mode mode);

  // Max number of internally vertex-disjoint (VertexSplit) or edge-disjoint
  // (Edge) s-t paths, stopping early once `limit` is reached.
  int max_flow(int s, int t, int limit);

 private:
  void add_arc(int from, int to, int cap, int rev_cap);
  void finalize();
  bool build_levels(int source, int sink);
  int push(int source, int sink, int limit);

  Mode mode_;
  int nodes_ = 0;
  std::vector<int> arc_from_, arc_to_, arc_cap0_;
  std::vector<int> start_, order_;   // CSR over arcs grouped by tail
  std::vector<int> head_, rev_, cap_;
  std::vector<int> level_, cursor_;
};

}  // namespace schemeconn::detail
