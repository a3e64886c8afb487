#include "flow.hpp"

#include <algorithm>
#include <limits>

namespace schemeconn::detail {

UnitNetwork::UnitNetwork(const Graph& g, Mode mode) : mode_(mode) {
  nodes_ = mode == Mode::VertexSplit ? 2 * g.n() : g.n();
  g.alive().for_each([&](int u) {
    if (mode == Mode::VertexSplit) add_arc(2 * u, 2 * u + 1, 1, 0);
    g.neighbors(u).for_each([&](int w) {
      if (mode == Mode::VertexSplit) {
        add_arc(2 * u + 1, 2 * w, 1, 0);
      } else if (u < w) {
        add_arc(u, w, 1, 1);
      }
    });
  });
  finalize();
}

void UnitNetwork::add_arc(int from, int to, int cap, int rev_cap) {
  arc_from_.push_back(from);
  arc_to_.push_back(to);
  arc_cap0_.push_back(cap);
  arc_from_.push_back(to);
  arc_to_.push_back(from);
  arc_cap0_.push_back(rev_cap);
}

void UnitNetwork::finalize() {
  const std::size_t m = arc_from_.size();
  start_.assign(static_cast<std::size_t>(nodes_) + 1, 0);
  for (int f : arc_from_) ++start_[static_cast<std::size_t>(f) + 1];
  for (std::size_t i = 1; i < start_.size(); ++i) start_[i] += start_[i - 1];
  // position[arc id] -> slot in CSR order
  std::vector<int> fill(start_.begin(), start_.end() - 1), position(m);
  for (std::size_t a = 0; a < m; ++a)
    position[a] = fill[static_cast<std::size_t>(arc_from_[a])]++;
  head_.assign(m, 0);
  rev_.assign(m, 0);
  order_.assign(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    const auto slot = static_cast<std::size_t>(position[a]);
    head_[slot] = arc_to_[a];
    rev_[slot] = position[a ^ 1U];
    order_[slot] = static_cast<int>(a);
  }
  level_.assign(static_cast<std::size_t>(nodes_), -1);
  cursor_.assign(static_cast<std::size_t>(nodes_), 0);
}

bool UnitNetwork::build_levels(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::vector<int> queue{source};
  level_[static_cast<std::size_t>(source)] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int u = queue[h];
    for (int e = start_[static_cast<std::size_t>(u)]; e < start_[static_cast<std::size_t>(u) + 1]; ++e) {
      const int w = head_[static_cast<std::size_t>(e)];
      if (cap_[static_cast<std::size_t>(e)] > 0 && level_[static_cast<std::size_t>(w)] < 0) {
        level_[static_cast<std::size_t>(w)] = level_[static_cast<std::size_t>(u)] + 1;
        if (w == sink) return true;
        queue.push_back(w);
      }
    }
  }
  return level_[static_cast<std::size_t>(sink)] >= 0;
}

int UnitNetwork::push(int source, int sink, int limit) {
  // Iterative DFS along the level graph; each augmentation carries one unit.
  int pushed = 0;
  std::vector<int> path_arcs;
  std::vector<int> stack{source};
  while (pushed < limit && !stack.empty()) {
    const int u = stack.back();
    if (u == sink) {
      for (int e : path_arcs) {
        --cap_[static_cast<std::size_t>(e)];
        ++cap_[static_cast<std::size_t>(rev_[static_cast<std::size_t>(e)])];
      }
      ++pushed;
      path_arcs.clear();
      stack.assign(1, source);
      continue;
    }
    auto& cur = cursor_[static_cast<std::size_t>(u)];
    bool advanced = false;
    for (; cur < start_[static_cast<std::size_t>(u) + 1]; ++cur) {
      const int w = head_[static_cast<std::size_t>(cur)];
      if (cap_[static_cast<std::size_t>(cur)] > 0 &&
          level_[static_cast<std::size_t>(w)] == level_[static_cast<std::size_t>(u)] + 1) {
        path_arcs.push_back(cur);
        stack.push_back(w);
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      level_[static_cast<std::size_t>(u)] = -1;  // dead end
      stack.pop_back();
      if (!path_arcs.empty()) {
        path_arcs.pop_back();
        ++cursor_[static_cast<std::size_t>(stack.back())];
      }
    }
  }
  return pushed;
}

int UnitNetwork::max_flow(int s, int t, int limit) {
  cap_.resize(head_.size());
  for (std::size_t slot = 0; slot < head_.size(); ++slot)
    cap_[slot] = arc_cap0_[static_cast<std::size_t>(order_[slot])];
  int source = s, sink = t;
  if (mode_ == Mode::VertexSplit) {
    source = 2 * s + 1;
    sink = 2 * t;
  }
  int flow = 0;
  while (flow < limit && build_levels(source, sink)) {
    for (int u = 0; u < nodes_; ++u) cursor_[static_cast<std::size_t>(u)] = start_[static_cast<std::size_t>(u)];
    const int got = push(source, sink, limit - flow);
    if (got == 0) break;
    flow += got;
  }
  return flow;
}

}  // namespace schemeconn::detail
