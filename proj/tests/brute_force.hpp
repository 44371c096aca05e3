#pragma once

// Reference computations for the tests. They share no code with the library
// beyond the network data types.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "flowtype/network.hpp"

namespace flowtype::testing {

/// Edmonds-Karp on a dense capacity matrix.
inline std::int64_t dense_max_flow(std::vector<std::vector<std::int64_t>> cap, std::size_t s, std::size_t t) {
  const std::size_t n = cap.size();
  std::int64_t total = 0;
  while (true) {
    std::vector<std::size_t> parent(n, n);
    parent[s] = s;
    std::queue<std::size_t> queue;
    queue.push(s);
    while (!queue.empty() && parent[t] == n) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (parent[v] == n && cap[u][v] > 0) {
          parent[v] = u;
          queue.push(v);
        }
      }
    }
    if (parent[t] == n) return total;
    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (std::size_t v = t; v != s; v = parent[v]) push = std::min(push, cap[parent[v]][v]);
    for (std::size_t v = t; v != s; v = parent[v]) {
      cap[parent[v]][v] -= push;
      cap[v][parent[v]] += push;
    }
    total += push;
  }
}

/// Largest flow that enters through the inputs in `a` and leaves through the
/// outputs in `b`, every other IO edge carrying nothing. Bit i of `a` is the
/// i-th input edge, bit j of `b` the j-th output edge.
inline std::int64_t brute_max_from_to(const FlowNetwork& net, Mask a, Mask b) {
  const std::size_t n = net.vertex_count();
  const std::size_t s = n, t = n + 1;
  std::vector<std::vector<std::int64_t>> cap(n + 2, std::vector<std::int64_t>(n + 2, 0));
  for (EdgeIndex e : net.internal()) cap[net.edge(e).tail][net.edge(e).head] += net.edge(e).cap.units();
  for (std::size_t i = 0; i < net.inputs().size(); ++i) {
    const Edge& edge = net.edge(net.inputs()[i]);
    if (a >> i & 1) cap[s][edge.head] += edge.cap.units();
  }
  for (std::size_t j = 0; j < net.outputs().size(); ++j) {
    const Edge& edge = net.edge(net.outputs()[j]);
    if (b >> j & 1) cap[edge.tail][t] += edge.cap.units();
  }
  return dense_max_flow(std::move(cap), s, t);
}

}  // namespace flowtype::testing
