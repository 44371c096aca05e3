#include "flowtype/layered.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "flowtype/trees.hpp"

namespace flowtype {

namespace {

constexpr std::size_t kNone = LayerPartition::kNoLayer;

ReassemblingTree layer_combs(const PlaneGraph& pg, const LayerPartition& layers) {
  const std::size_t n = pg.net.vertex_count();
  std::vector<char> placed(n, 0);
  std::vector<std::vector<VertexIndex>> rounds(std::max<std::size_t>(layers.k(), 1));
  for (std::size_t i = 0; i < layers.walks.size(); ++i) {
    for (VertexIndex v : layers.walks[i]) {
      if (placed[v]) continue;
      placed[v] = 1;
      rounds[i].push_back(v);
    }
  }
  for (VertexIndex v = 0; v < n; ++v)
    if (!placed[v]) rounds[0].push_back(v);

  ReassemblingTree tree;
  std::optional<ReassemblingTree::NodeId> inner;
  for (std::size_t i = rounds.size(); i-- > 0;) {
    if (rounds[i].empty()) continue;
    ReassemblingTree::NodeId comb = tree.add_leaf(rounds[i][0]);
    for (std::size_t j = 1; j < rounds[i].size(); ++j) comb = tree.add_merge(comb, tree.add_leaf(rounds[i][j]));
    inner = inner ? tree.add_merge(comb, *inner) : comb;
  }
  return tree;
}

/// Every vertex joins the column of a neighbour in a shallower layer, or
/// failing that of an already placed neighbour in its own layer.
std::vector<std::size_t> columns(const PlaneGraph& pg, const LayerPartition& layers) {
  const FlowNetwork& net = pg.net;
  const std::size_t n = net.vertex_count();
  const auto depth = vertex_layers(pg, layers);

  // Position of each vertex in the boundary walks, for a stable order.
  std::vector<std::size_t> rank(n, std::numeric_limits<std::size_t>::max());
  std::size_t counter = 0;
  for (const auto& walk : layers.walks)
    for (VertexIndex v : walk)
      if (rank[v] == std::numeric_limits<std::size_t>::max()) rank[v] = counter++;
  std::vector<VertexIndex> order(n);
  for (VertexIndex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) {
    return std::pair(depth[a], rank[a]) < std::pair(depth[b], rank[b]);
  });

  std::vector<std::vector<VertexIndex>> adjacent(n);
  for (EdgeIndex e : net.internal()) {
    adjacent[net.edge(e).tail].push_back(net.edge(e).head);
    adjacent[net.edge(e).head].push_back(net.edge(e).tail);
  }
  auto by_rank = [&](VertexIndex a, VertexIndex b) { return rank[a] < rank[b]; };
  for (auto& a : adjacent) std::sort(a.begin(), a.end(), by_rank);

  std::vector<std::size_t> column(n, kNone);
  std::size_t next_column = 0;
  std::size_t i = 0;
  while (i < n) {
    const std::size_t layer = depth[order[i]];
    std::size_t end = i;
    while (end < n && depth[order[end]] == layer) ++end;
    std::deque<VertexIndex> queue;
    for (std::size_t j = i; j < end; ++j) {
      const VertexIndex v = order[j];
      for (VertexIndex w : adjacent[v]) {
        if (column[w] != kNone && depth[w] < layer) {
          column[v] = column[w];
          queue.push_back(v);
          break;
        }
      }
    }
    // Spread inside the layer from vertices that found a column.
    while (!queue.empty()) {
      const VertexIndex v = queue.front();
      queue.pop_front();
      for (VertexIndex w : adjacent[v]) {
        if (column[w] == kNone && depth[w] == layer) {
          column[w] = column[v];
          queue.push_back(w);
        }
      }
    }
    for (std::size_t j = i; j < end; ++j) {
      const VertexIndex v = order[j];
      if (column[v] != kNone) continue;
      if (layer == 0) {
        column[v] = next_column++;
        continue;
      }
      // A layer piece with no shallower neighbour becomes its own column.
      column[v] = next_column++;
      queue.push_back(v);
      while (!queue.empty()) {
        const VertexIndex u = queue.front();
        queue.pop_front();
        for (VertexIndex w : adjacent[u]) {
          if (column[w] == kNone && depth[w] == layer) {
            column[w] = column[u];
            queue.push_back(w);
          }
        }
      }
    }
    i = end;
  }
  return column;
}

/// Up to 16 start columns spread evenly over all columns.
std::vector<std::size_t> sweep_starts(const std::vector<std::size_t>& column) {
  std::size_t count = 0;
  for (std::size_t c : column)
    if (c != kNone) count = std::max(count, c + 1);
  std::vector<std::size_t> starts;
  const std::size_t wanted = std::min<std::size_t>(count, 16);
  for (std::size_t i = 0; i < wanted; ++i) starts.push_back(i * count / wanted);
  return starts;
}

}  // namespace

std::vector<std::size_t> vertex_layers(const PlaneGraph& pg, const LayerPartition& layers) {
  const FlowNetwork& net = pg.net;
  const auto of_edge = layers.layer_of_edge(net);
  std::vector<std::size_t> out(net.vertex_count(), kNone);
  for (EdgeIndex e : net.internal()) {
    for (VertexIndex v : {net.edge(e).tail, net.edge(e).head}) out[v] = std::min(out[v], of_edge[e]);
  }
  return out;
}

LayeredResult layered_reassembling(const PlaneGraph& pg) {
  if (!is_three_regular(pg.net)) throw Error("layered_reassembling needs a 3-regular network");
  const LayerPartition layers = peel_edge_layers(pg);

  struct Candidate {
    std::string name;
    ReassemblingTree tree;
  };
  std::vector<Candidate> candidates;
  candidates.push_back({"layer-combs", layer_combs(pg, layers)});
  const auto column = columns(pg, layers);
  candidates.push_back({"columns", greedy_tree(pg.net, column)});
  candidates.push_back({"column-sweep", sweep_tree(pg.net, column, sweep_starts(column))});
  candidates.push_back({"greedy", greedy_tree(pg.net)});
  const std::size_t plain = candidates.size();
  for (std::size_t i = 0; i < plain; ++i)
    candidates.push_back({candidates[i].name + "+rotations", improve_tree(pg.net, candidates[i].tree)});

  LayeredResult best;
  best.k = layers.k();
  std::size_t best_boundary = 0;
  bool have = false;
  for (auto& c : candidates) {
    if (pg.net.vertex_count() == 0) {
      best.strategy = c.name;
      break;
    }
    const std::size_t alpha = alpha_measure(pg.net, c.tree);
    const std::size_t boundary = boundary_measure(pg.net, c.tree);
    if (!have || alpha < best.alpha || (alpha == best.alpha && boundary < best_boundary)) {
      have = true;
      best.alpha = alpha;
      best_boundary = boundary;
      best.tree = std::move(c.tree);
      best.strategy = c.name;
    }
  }
  if (best.alpha > 2 * best.k) {
    best.warnings.push_back("reassembling has alpha = " + std::to_string(best.alpha) + " above the target 2k = " +
                            std::to_string(2 * best.k));
  }
  return best;
}

}  // namespace flowtype
