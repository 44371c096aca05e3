#pragma once

#include <cstdint>
#include <vector>

namespace flowtype {

/// Exact integer max-flow (Dinic). Calls to max_flow() augment on top of the
/// flow already routed, so a second call computes the residual maximum.
class MaxFlowGraph {
 public:
  explicit MaxFlowGraph(std::size_t nodes = 0) : adj_(nodes) {}

  std::size_t add_node();
  std::size_t node_count() const { return adj_.size(); }
  /// Returns an arc handle for flow().
  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t cap);

  std::int64_t max_flow(std::size_t source, std::size_t sink);
  std::int64_t flow(std::size_t arc) const { return arcs_[arc].flow; }
  std::int64_t capacity(std::size_t arc) const { return arcs_[arc].cap; }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
    std::int64_t flow;
  };

  bool build_levels(std::size_t source, std::size_t sink);
  std::int64_t push(std::size_t v, std::size_t sink, std::int64_t limit);

  std::vector<Arc> arcs_;  // arc i and i^1 are mutual reverses
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace flowtype
