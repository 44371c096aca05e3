#include "flowtype/trees.hpp"

#include <algorithm>
#include <queue>
#include <optional>
#include <tuple>
#include <unordered_map>

namespace flowtype {

namespace {

class Agglomerator {
 public:
  Agglomerator(const FlowNetwork& net, const std::vector<std::size_t>& groups) {
    const std::size_t n = net.vertex_count();
    for (VertexIndex v = 0; v < n; ++v) {
      Cluster c;
      c.node = tree_.add_leaf(v);
      c.size = 1;
      c.full = net.degree(v);
      c.group = groups.empty() ? 0 : groups[v];
      c.first_vertex = v;
      clusters_.push_back(std::move(c));
    }
    for (EdgeIndex e : net.internal()) {
      const Edge& edge = net.edge(e);
      ++clusters_[edge.tail].internal;
      ++clusters_[edge.head].internal;
      ++clusters_[edge.tail].adj[edge.head];
      ++clusters_[edge.head].adj[edge.tail];
    }
  }

  ReassemblingTree run() {
    if (clusters_.empty()) return std::move(tree_);
    sweep(/*within_groups=*/true);
    sweep(/*within_groups=*/false);
    return std::move(tree_);
  }

 private:
  struct Cluster {
    ReassemblingTree::NodeId node = 0;
    std::size_t size = 0;
    std::size_t internal = 0;  // crossing internal edges
    std::size_t full = 0;      // crossing edges plus dangling ones
    std::size_t group = 0;
    VertexIndex first_vertex = 0;
    bool alive = true;
    std::unordered_map<std::size_t, std::size_t> adj;  // cluster -> shared edges
  };

  using Candidate = std::tuple<std::size_t, std::size_t, std::size_t, VertexIndex, VertexIndex, std::size_t, std::size_t>;

  bool allowed(std::size_t a, std::size_t b, bool within) const {
    return !within || clusters_[a].group == clusters_[b].group;
  }

  Candidate candidate(std::size_t a, std::size_t b, std::size_t shared) const {
    const Cluster& x = clusters_[a];
    const Cluster& y = clusters_[b];
    VertexIndex lo = std::min(x.first_vertex, y.first_vertex), hi = std::max(x.first_vertex, y.first_vertex);
    return {x.internal + y.internal - 2 * shared, x.full + y.full - 2 * shared, x.size + y.size, lo, hi, a, b};
  }

  std::size_t merge(std::size_t a, std::size_t b) {
    const std::size_t shared = clusters_[a].adj.count(b) ? clusters_[a].adj.at(b) : 0;
    Cluster c;
    c.node = tree_.add_merge(clusters_[a].node, clusters_[b].node);
    c.size = clusters_[a].size + clusters_[b].size;
    c.internal = clusters_[a].internal + clusters_[b].internal - 2 * shared;
    c.full = clusters_[a].full + clusters_[b].full - 2 * shared;
    c.group = clusters_[a].group;
    c.first_vertex = std::min(clusters_[a].first_vertex, clusters_[b].first_vertex);
    const std::size_t id = clusters_.size();
    for (std::size_t part : {a, b}) {
      clusters_[part].alive = false;
      for (const auto& [other, w] : clusters_[part].adj) {
        if (other == a || other == b) continue;
        c.adj[other] += w;
        clusters_[other].adj.erase(part);
        clusters_[other].adj[id] += w;
      }
      clusters_[part].adj.clear();
    }
    clusters_.push_back(std::move(c));
    return id;
  }

  void sweep(bool within) {
    std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> queue;
    for (std::size_t a = 0; a < clusters_.size(); ++a) {
      if (!clusters_[a].alive) continue;
      for (const auto& [b, w] : clusters_[a].adj)
        if (a < b && allowed(a, b, within)) queue.push(candidate(a, b, w));
    }
    while (!queue.empty()) {
      const Candidate top = queue.top();
      queue.pop();
      const std::size_t a = std::get<5>(top), b = std::get<6>(top);
      if (!clusters_[a].alive || !clusters_[b].alive) continue;
      const std::size_t c = merge(a, b);
      for (const auto& [other, w] : clusters_[c].adj)
        if (allowed(c, other, within)) queue.push(candidate(c, other, w));
    }
    // Whatever is left shares no edge; join it cheapest first.
    std::unordered_map<std::size_t, std::vector<std::size_t>> rest;
    for (std::size_t a = 0; a < clusters_.size(); ++a)
      if (clusters_[a].alive) rest[within ? clusters_[a].group : 0].push_back(a);
    std::vector<std::size_t> keys;
    for (const auto& [g, ids] : rest) keys.push_back(g);
    std::sort(keys.begin(), keys.end());
    for (std::size_t g : keys) {
      auto ids = rest[g];
      std::sort(ids.begin(), ids.end(), [&](std::size_t x, std::size_t y) {
        return std::tie(clusters_[x].internal, clusters_[x].first_vertex) <
               std::tie(clusters_[y].internal, clusters_[y].first_vertex);
      });
      std::size_t acc = ids[0];
      for (std::size_t i = 1; i < ids.size(); ++i) acc = merge(acc, ids[i]);
    }
  }

  ReassemblingTree tree_;
  std::vector<Cluster> clusters_;
};

std::vector<VertexIndex> neighbours(const FlowNetwork& net, VertexIndex v) {
  std::vector<VertexIndex> out;
  for (EdgeIndex e : net.in_edges(v))
    if (net.edge(e).is_internal()) out.push_back(net.edge(e).tail);
  for (EdgeIndex e : net.out_edges(v))
    if (net.edge(e).is_internal()) out.push_back(net.edge(e).head);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Breadth-first order of `members` inside the subgraph they induce.
std::vector<VertexIndex> bfs_order(const FlowNetwork& net, const std::vector<VertexIndex>& members,
                                   const std::vector<std::size_t>& group_of, std::size_t group) {
  std::vector<VertexIndex> order;
  std::unordered_map<VertexIndex, bool> seen;
  for (VertexIndex s : members) {
    if (seen[s]) continue;
    seen[s] = true;
    std::queue<VertexIndex> queue;
    queue.push(s);
    while (!queue.empty()) {
      const VertexIndex v = queue.front();
      queue.pop();
      order.push_back(v);
      for (VertexIndex w : neighbours(net, v)) {
        if (group_of[w] == group && !seen[w]) {
          seen[w] = true;
          queue.push(w);
        }
      }
    }
  }
  return order;
}

ReassemblingTree sweep_from(const FlowNetwork& net, const std::vector<std::size_t>& group_of,
                            const std::vector<std::vector<VertexIndex>>& members, std::size_t start) {
  const std::size_t groups = members.size();
  // Crossing internal edges of each group, and edges between groups.
  std::vector<std::size_t> boundary(groups, 0);
  std::vector<std::unordered_map<std::size_t, std::size_t>> shared(groups);
  for (EdgeIndex e : net.internal()) {
    const std::size_t a = group_of[net.edge(e).tail], b = group_of[net.edge(e).head];
    if (a == b) continue;
    ++boundary[a];
    ++boundary[b];
    ++shared[a][b];
    ++shared[b][a];
  }
  std::vector<std::size_t> into(groups, 0);  // edges into the cluster
  std::vector<char> taken(groups, 0);
  ReassemblingTree tree;
  std::optional<ReassemblingTree::NodeId> cluster;
  std::size_t cluster_boundary = 0;
  std::size_t next = start;
  for (std::size_t step = 0; step < groups; ++step) {
    if (step > 0) {
      // Cheapest next group.
      std::size_t best = groups;
      std::tuple<std::size_t, std::size_t, std::size_t> best_key{};
      for (std::size_t g = 0; g < groups; ++g) {
        if (taken[g]) continue;
        const std::size_t after = cluster_boundary + boundary[g] - 2 * into[g];
        const std::tuple<std::size_t, std::size_t, std::size_t> key{after, static_cast<std::size_t>(-1) - into[g], g};
        if (best == groups || key < best_key) {
          best = g;
          best_key = key;
        }
      }
      next = best;
    }
    taken[next] = 1;
    cluster_boundary = cluster_boundary + boundary[next] - 2 * into[next];
    for (const auto& [h, w] : shared[next]) into[h] += w;
    const auto order = bfs_order(net, members[next], group_of, next);
    ReassemblingTree::NodeId comb = tree.add_leaf(order[0]);
    for (std::size_t i = 1; i < order.size(); ++i) comb = tree.add_merge(comb, tree.add_leaf(order[i]));
    cluster = cluster ? tree.add_merge(*cluster, comb) : comb;
  }
  return tree;
}

/// Mutable copy of a tree for local rotations. Every node keeps its count of
/// crossing internal edges.
class Rotator {
 public:
  Rotator(const FlowNetwork& net, const ReassemblingTree& tree) {
    const std::size_t n = net.vertex_count();
    adjacent_.resize(n);
    for (EdgeIndex e : net.internal()) {
      adjacent_[net.edge(e).tail].push_back(net.edge(e).head);
      adjacent_[net.edge(e).head].push_back(net.edge(e).tail);
    }
    mark_.assign(n, 0);
    root_ = copy(tree, tree.root());
  }

  /// Repeats passes until no rotation lowers a boundary.
  void run() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t p = 0; p < nodes_.size(); ++p) {
        if (nodes_[p].leaf) continue;
        for (int side = 0; side < 2; ++side) changed |= try_rotate(p, side);
      }
    }
  }

  ReassemblingTree build() const {
    ReassemblingTree out;
    emit(out, root_);
    return out;
  }

 private:
  struct Node {
    bool leaf = false;
    VertexIndex vertex = 0;
    std::size_t child[2] = {0, 0};
    std::size_t boundary = 0;
    std::vector<VertexIndex> members;
  };

  std::size_t copy(const ReassemblingTree& tree, ReassemblingTree::NodeId id) {
    const auto& src = tree.node(id);
    Node node;
    if (src.vertex) {
      node.leaf = true;
      node.vertex = *src.vertex;
      node.members = {*src.vertex};
    } else {
      node.child[0] = copy(tree, src.left);
      node.child[1] = copy(tree, src.right);
      node.members = nodes_[node.child[0]].members;
      const auto& more = nodes_[node.child[1]].members;
      node.members.insert(node.members.end(), more.begin(), more.end());
    }
    node.boundary = boundary_of(node.members);
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
  }

  std::size_t boundary_of(const std::vector<VertexIndex>& members) {
    for (VertexIndex v : members) mark_[v] = 1;
    std::size_t count = 0;
    for (VertexIndex v : members)
      for (VertexIndex w : adjacent_[v]) count += mark_[w] ? 0 : 1;
    for (VertexIndex v : members) mark_[v] = 0;
    return count;
  }

  /// With p = (a, b) and b = (c, d) where b sits on `side`, replaces b by
  /// (a, c) or (a, d) when that has a smaller boundary.
  bool try_rotate(std::size_t p, int side) {
    const std::size_t a = nodes_[p].child[1 - side], b = nodes_[p].child[side];
    if (nodes_[b].leaf) return false;
    for (int keep = 0; keep < 2; ++keep) {
      const std::size_t c = nodes_[b].child[keep], d = nodes_[b].child[1 - keep];
      std::vector<VertexIndex> members = nodes_[a].members;
      members.insert(members.end(), nodes_[c].members.begin(), nodes_[c].members.end());
      const std::size_t boundary = boundary_of(members);
      if (boundary >= nodes_[b].boundary) continue;
      nodes_[b].child[0] = a;
      nodes_[b].child[1] = c;
      nodes_[b].members = std::move(members);
      nodes_[b].boundary = boundary;
      nodes_[p].child[0] = b;
      nodes_[p].child[1] = d;
      return true;
    }
    return false;
  }

  ReassemblingTree::NodeId emit(ReassemblingTree& out, std::size_t id) const {
    const Node& node = nodes_[id];
    if (node.leaf) return out.add_leaf(node.vertex);
    const auto left = emit(out, node.child[0]);
    const auto right = emit(out, node.child[1]);
    return out.add_merge(left, right);
  }

  std::vector<std::vector<VertexIndex>> adjacent_;
  std::vector<char> mark_;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

}  // namespace

ReassemblingTree improve_tree(const FlowNetwork& net, const ReassemblingTree& tree) {
  if (tree.empty()) return tree;
  Rotator rotator(net, tree);
  rotator.run();
  return rotator.build();
}

ReassemblingTree sweep_tree(const FlowNetwork& net, const std::vector<std::size_t>& groups,
                            const std::vector<std::size_t>& starts) {
  if (net.vertex_count() == 0) return {};
  if (groups.size() != net.vertex_count()) throw Error("sweep_tree: one group per vertex");
  // Renumber groups densely, keeping their order.
  std::vector<std::size_t> labels(groups.begin(), groups.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<std::size_t> group_of(groups.size());
  std::vector<std::vector<VertexIndex>> members(labels.size());
  for (VertexIndex v = 0; v < groups.size(); ++v) {
    group_of[v] = std::lower_bound(labels.begin(), labels.end(), groups[v]) - labels.begin();
    members[group_of[v]].push_back(v);
  }
  std::vector<std::size_t> tried;
  for (std::size_t s : starts) {
    auto it = std::lower_bound(labels.begin(), labels.end(), s);
    if (it != labels.end() && *it == s) tried.push_back(it - labels.begin());
  }
  if (tried.empty()) tried.push_back(0);

  ReassemblingTree best;
  std::size_t best_alpha = 0;
  for (std::size_t i = 0; i < tried.size(); ++i) {
    ReassemblingTree t = sweep_from(net, group_of, members, tried[i]);
    const std::size_t alpha = alpha_measure(net, t);
    if (i == 0 || alpha < best_alpha) {
      best_alpha = alpha;
      best = std::move(t);
    }
  }
  return best;
}

ReassemblingTree greedy_tree(const FlowNetwork& net, const std::vector<std::size_t>& groups) {
  if (!groups.empty() && groups.size() != net.vertex_count()) throw Error("greedy_tree: one group per vertex");
  return Agglomerator(net, groups).run();
}

ReassemblingTree bfs_comb_tree(const FlowNetwork& net) {
  const std::size_t n = net.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexIndex> order;
  for (VertexIndex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::queue<VertexIndex> queue;
    queue.push(s);
    while (!queue.empty()) {
      const VertexIndex v = queue.front();
      queue.pop();
      order.push_back(v);
      for (VertexIndex w : neighbours(net, v)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push(w);
        }
      }
    }
  }
  return ReassemblingTree::left_comb(order);
}

ReassemblingTree random_tree(const FlowNetwork& net, std::mt19937_64& rng) {
  ReassemblingTree tree;
  std::vector<ReassemblingTree::NodeId> pool;
  std::vector<VertexIndex> order(net.vertex_count());
  for (VertexIndex v = 0; v < order.size(); ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  for (VertexIndex v : order) pool.push_back(tree.add_leaf(v));
  while (pool.size() > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const std::size_t i = pick(rng);
    std::swap(pool[i], pool.back());
    const auto a = pool.back();
    pool.pop_back();
    const std::size_t j = std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng);
    pool[j] = tree.add_merge(a, pool[j]);
  }
  return tree;
}

}  // namespace flowtype
