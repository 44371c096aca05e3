#include "flowtype/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace flowtype {

std::size_t MaxFlowGraph::add_node() {
  adj_.emplace_back();
  return adj_.size() - 1;
}

std::size_t MaxFlowGraph::add_arc(std::size_t from, std::size_t to, std::int64_t cap) {
  const std::size_t id = arcs_.size();
  arcs_.push_back({to, cap, 0});
  arcs_.push_back({from, 0, 0});
  adj_[from].push_back(id);
  adj_[to].push_back(id + 1);
  return id;
}

bool MaxFlowGraph::build_levels(std::size_t source, std::size_t sink) {
  level_.assign(adj_.size(), -1);
  std::queue<std::size_t> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    for (std::size_t id : adj_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap - a.flow > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        queue.push(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t MaxFlowGraph::push(std::size_t v, std::size_t sink, std::int64_t limit) {
  if (v == sink) return limit;
  for (std::size_t& i = cursor_[v]; i < adj_[v].size(); ++i) {
    const std::size_t id = adj_[v][i];
    Arc& a = arcs_[id];
    if (a.cap - a.flow <= 0 || level_[a.to] != level_[v] + 1) continue;
    const std::int64_t pushed = push(a.to, sink, std::min(limit, a.cap - a.flow));
    if (pushed > 0) {
      a.flow += pushed;
      arcs_[id ^ 1].flow -= pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t MaxFlowGraph::max_flow(std::size_t source, std::size_t sink) {
  if (source == sink) return 0;
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    cursor_.assign(adj_.size(), 0);
    while (std::int64_t pushed = push(source, sink, std::numeric_limits<std::int64_t>::max())) total += pushed;
  }
  return total;
}

}  // namespace flowtype
