#include "flowtype/reassembly.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <string>

#include "flowtype/oracle.hpp"

namespace flowtype {

// --- tree ----------------------------------------------------------------------

ReassemblingTree::NodeId ReassemblingTree::add_leaf(VertexIndex v) {
  nodes_.push_back(Node{v, 0, 0});
  return nodes_.size() - 1;
}

ReassemblingTree::NodeId ReassemblingTree::add_merge(NodeId left, NodeId right) {
  if (left >= nodes_.size() || right >= nodes_.size()) throw Error("tree merge of unknown node");
  nodes_.push_back(Node{std::nullopt, left, right});
  return nodes_.size() - 1;
}

ReassemblingTree::NodeId ReassemblingTree::root() const {
  if (nodes_.empty()) throw Error("empty reassembling tree");
  return root_.value_or(nodes_.size() - 1);
}

std::vector<VertexIndex> ReassemblingTree::vertices_of(NodeId id) const {
  std::vector<VertexIndex> out;
  std::vector<NodeId> stack{id};
  while (!stack.empty()) {
    const Node& n = nodes_.at(stack.back());
    stack.pop_back();
    if (n.vertex) {
      out.push_back(*n.vertex);
    } else {
      stack.push_back(n.right);
      stack.push_back(n.left);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void ReassemblingTree::validate(const FlowNetwork& net) const {
  const std::size_t n = net.vertex_count();
  if (n == 0) {
    if (!nodes_.empty()) throw Error("tree for an empty network must be empty");
    return;
  }
  if (nodes_.empty()) throw Error("empty reassembling tree");
  std::vector<int> node_uses(nodes_.size(), 0);
  std::vector<int> vertex_uses(n, 0);
  std::size_t reachable = 0;
  std::vector<NodeId> stack{root()};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    if (id >= nodes_.size()) throw Error("tree references unknown node");
    if (++node_uses[id] > 1) throw Error("tree node used twice (children must be disjoint)");
    ++reachable;
    const Node& node = nodes_[id];
    if (node.vertex) {
      if (*node.vertex >= n) throw Error("tree leaf names an unknown vertex");
      ++vertex_uses[*node.vertex];
    } else {
      stack.push_back(node.left);
      stack.push_back(node.right);
    }
  }
  for (VertexIndex v = 0; v < n; ++v) {
    if (vertex_uses[v] != 1) {
      throw Error("vertex '" + net.vertex_id(v) + "' appears " + std::to_string(vertex_uses[v]) +
                  " times among the tree leaves");
    }
  }
  if (reachable != 2 * n - 1) throw Error("tree must have 2n-1 nodes");
}

ReassemblingTree ReassemblingTree::left_comb(std::span<const VertexIndex> order) {
  ReassemblingTree tree;
  if (order.empty()) return tree;
  NodeId acc = tree.add_leaf(order[0]);
  for (std::size_t i = 1; i < order.size(); ++i) acc = tree.add_merge(acc, tree.add_leaf(order[i]));
  return tree;
}

namespace {

/// Post-order over the tree; visit(node, children-or-leaf) returns nothing.
template <typename Visit>
void post_order(const ReassemblingTree& tree, Visit&& visit) {
  if (tree.empty()) return;
  std::vector<std::pair<ReassemblingTree::NodeId, bool>> stack{{tree.root(), false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const auto& node = tree.node(id);
    if (node.vertex || expanded) {
      visit(id);
      continue;
    }
    stack.push_back({id, true});
    stack.push_back({node.right, false});
    stack.push_back({node.left, false});
  }
}

struct Measures {
  std::size_t internal = 0;
  std::size_t with_dangling = 0;
  std::size_t delta = 0;  // largest component the lazy splice order builds
};

Measures tree_measures(const FlowNetwork& net, const ReassemblingTree& tree) {
  tree.validate(net);
  Measures result;
  std::vector<std::size_t> owner(net.vertex_count(), static_cast<std::size_t>(-1));  // vertex -> current subtree node
  std::vector<std::size_t> internal(tree.size()), full(tree.size());
  std::vector<std::vector<VertexIndex>> members(tree.size());
  post_order(tree, [&](ReassemblingTree::NodeId id) {
    const auto& node = tree.node(id);
    if (node.vertex) {
      const VertexIndex v = *node.vertex;
      std::size_t dangling = 0;
      for (EdgeIndex e : net.in_edges(v)) dangling += net.edge(e).is_input();
      for (EdgeIndex e : net.out_edges(v)) dangling += net.edge(e).is_output();
      full[id] = net.degree(v);
      internal[id] = full[id] - dangling;
      owner[v] = id;
      members[id] = {v};
    } else {
      std::size_t left = node.left, right = node.right;
      if (members[left].size() < members[right].size()) std::swap(left, right);
      std::size_t cross = 0;
      for (VertexIndex v : members[right]) {
        for (EdgeIndex e : net.in_edges(v))
          if (net.edge(e).is_internal() && owner[net.edge(e).tail] == left) ++cross;
        for (EdgeIndex e : net.out_edges(v))
          if (net.edge(e).is_internal() && owner[net.edge(e).head] == left) ++cross;
      }
      internal[id] = internal[left] + internal[right] - 2 * cross;
      full[id] = full[left] + full[right] - 2 * cross;
      result.delta = std::max(result.delta, full[left] + full[right] - (cross > 0 ? 2 : 0));
      for (VertexIndex v : members[left]) owner[v] = id;
      for (VertexIndex v : members[right]) owner[v] = id;
      members[id] = std::move(members[left]);
      members[id].insert(members[id].end(), members[right].begin(), members[right].end());
      members[right].clear();
    }
    result.internal = std::max(result.internal, internal[id]);
    result.with_dangling = std::max(result.with_dangling, full[id]);
    result.delta = std::max(result.delta, full[id]);
  });
  return result;
}

}  // namespace

std::size_t alpha_measure(const FlowNetwork& net, const ReassemblingTree& tree) {
  return tree_measures(net, tree).internal;
}

std::size_t boundary_measure(const FlowNetwork& net, const ReassemblingTree& tree) {
  return tree_measures(net, tree).with_dangling;
}

std::size_t predicted_delta(const FlowNetwork& net, const ReassemblingTree& tree) {
  return tree_measures(net, tree).delta;
}

std::vector<SpliceEvent> tree_to_splice_sequence(const FlowNetwork& net, const ReassemblingTree& tree) {
  tree.validate(net);
  const std::size_t n = net.vertex_count();
  std::vector<SpliceEvent> events;
  std::vector<std::size_t> component_of_node(tree.size());
  std::vector<std::size_t> owner(n, static_cast<std::size_t>(-1));  // vertex -> tree node currently holding it
  std::vector<std::vector<VertexIndex>> members(tree.size());

  post_order(tree, [&](ReassemblingTree::NodeId id) {
    const auto& node = tree.node(id);
    if (node.vertex) {
      component_of_node[id] = *node.vertex;
      owner[*node.vertex] = id;
      members[id] = {*node.vertex};
      return;
    }
    const auto left = node.left, right = node.right;
    std::vector<EdgeIndex> cross;
    const bool scan_right = members[right].size() <= members[left].size();
    const auto scanned = scan_right ? right : left;
    const auto other = scan_right ? left : right;
    for (VertexIndex v : members[scanned]) {
      for (EdgeIndex e : net.in_edges(v))
        if (net.edge(e).is_internal() && owner[net.edge(e).tail] == other) cross.push_back(e);
      for (EdgeIndex e : net.out_edges(v))
        if (net.edge(e).is_internal() && owner[net.edge(e).head] == other) cross.push_back(e);
    }
    std::sort(cross.begin(), cross.end());

    std::size_t current;
    if (cross.empty()) {
      events.push_back({SpliceKind::kUnion, 0, component_of_node[left], component_of_node[right]});
      current = n + events.size() - 1;
    } else {
      events.push_back({SpliceKind::kCase1, cross[0], component_of_node[left], component_of_node[right]});
      current = n + events.size() - 1;
      for (std::size_t i = 1; i < cross.size(); ++i) {
        events.push_back({SpliceKind::kCase2, cross[i], current, 0});
        current = n + events.size() - 1;
      }
    }
    component_of_node[id] = current;
    for (VertexIndex v : members[left]) owner[v] = id;
    for (VertexIndex v : members[right]) owner[v] = id;
    members[id] = std::move(members[left]);
    members[id].insert(members[id].end(), members[right].begin(), members[right].end());
    members[right].clear();
  });
  return events;
}

// --- splicing kernels ------------------------------------------------------------

void OpTally::merge(const OpTally& o) {
  total += o.total;
  max_plus_minus_per_entry = std::max(max_plus_minus_per_entry, o.max_plus_minus_per_entry);
  max_min_per_entry = std::max(max_min_per_entry, o.max_min_per_entry);
  entries += o.entries;
}

namespace {

/// Table value that only supports the three operations the recurrences are
/// allowed to use; each use is counted against the current entry.
class Tallied {
 public:
  Tallied(Capacity v, OpCounts& ops) : value_(v), ops_(&ops) {}
  Capacity value() const { return value_; }

  friend Tallied operator+(Tallied a, Tallied b) {
    ++a.ops_->plus;
    return Tallied(a.value_ + b.value_, *a.ops_);
  }
  friend Tallied operator-(Tallied a, Tallied b) {
    ++a.ops_->minus;
    return Tallied(a.value_ - b.value_, *a.ops_);
  }
  friend Tallied min(Tallied a, Tallied b) {
    ++a.ops_->min;
    return Tallied(flowtype::min(a.value_, b.value_), *a.ops_);
  }

 private:
  Capacity value_;
  OpCounts* ops_;
};

// The kernels can only add, subtract and take minima.
template <class T>
concept OtherArithmetic = requires(T a, T b) { a * b; } || requires(T a, T b) { a / b; } ||
                          requires(T a, T b) { a < b; } || requires(T a) { -a; };
static_assert(!OtherArithmetic<Tallied>);

/// Accumulates per-entry op counts into an optional OpTally.
class EntryCounter {
 public:
  explicit EntryCounter(OpTally* tally) : tally_(tally) {}
  OpCounts& ops() { return entry_; }
  Tallied read(const std::vector<Capacity>& table, std::size_t i) { return Tallied(table[i], entry_); }

  void finish_entry() {
    if (tally_) {
      tally_->total += entry_;
      tally_->max_plus_minus_per_entry = std::max(tally_->max_plus_minus_per_entry, entry_.plus + entry_.minus);
      tally_->max_min_per_entry = std::max(tally_->max_min_per_entry, entry_.min);
      ++tally_->entries;
    }
    entry_ = {};
  }

 private:
  OpTally* tally_;
  OpCounts entry_;
};

void check_boundary(std::size_t p, std::size_t q) {
  if (p + q > kMaxComponentBoundary) {
    throw Error("component with " + std::to_string(p + q) + " dangling edges exceeds the table limit of " +
                std::to_string(kMaxComponentBoundary));
  }
}

std::size_t position_of(const std::vector<EdgeIndex>& list, EdgeIndex e) {
  auto it = std::lower_bound(list.begin(), list.end(), e);
  if (it == list.end() || *it != e) return list.size();
  return static_cast<std::size_t>(it - list.begin());
}

/// Where each dangling half of a merged component came from.
struct Source {
  int part;  // 0 or 1
  std::size_t bit;  // bit in the part's table index
};

/// For every subset mask of the merged list, the contribution to the table
/// index of each part. Built by lowest-bit expansion.
std::array<std::vector<Mask>, 2> index_maps(const std::vector<Source>& sources) {
  const std::size_t size = std::size_t{1} << sources.size();
  std::array<std::vector<Mask>, 2> maps{std::vector<Mask>(size), std::vector<Mask>(size)};
  for (Mask m = 1; m < size; ++m) {
    const Mask rest = m & (m - 1);
    const Source& s = sources[std::countr_zero(m)];
    maps[0][m] = maps[0][rest];
    maps[1][m] = maps[1][rest];
    maps[s.part][m] |= Mask{1} << s.bit;
  }
  return maps;
}

struct MergedLayout {
  Component shell;  // lists and vertices, empty table
  std::vector<Source> in_sources;
  std::vector<Source> out_sources;
};

/// Merges the dangling lists of two parts, dropping `skip_in` from part
/// `skip_in_part`'s inputs and `skip_out` from part `skip_out_part`'s outputs.
MergedLayout merge_layout(const Component* parts[2], std::optional<std::pair<int, EdgeIndex>> skip_in,
                          std::optional<std::pair<int, EdgeIndex>> skip_out) {
  MergedLayout out;
  struct Item {
    EdgeIndex edge;
    Source src;
  };
  std::vector<Item> ins, outs;
  for (int part = 0; part < 2; ++part) {
    const Component* c = parts[part];
    if (!c) continue;
    for (std::size_t i = 0; i < c->inputs.size(); ++i) {
      if (skip_in && skip_in->first == part && skip_in->second == c->inputs[i]) continue;
      ins.push_back({c->inputs[i], {part, i}});
    }
    for (std::size_t i = 0; i < c->outputs.size(); ++i) {
      if (skip_out && skip_out->first == part && skip_out->second == c->outputs[i]) continue;
      outs.push_back({c->outputs[i], {part, c->inputs.size() + i}});
    }
    out.shell.vertices.insert(out.shell.vertices.end(), c->vertices.begin(), c->vertices.end());
  }
  auto by_edge = [](const Item& a, const Item& b) { return a.edge < b.edge; };
  std::sort(ins.begin(), ins.end(), by_edge);
  std::sort(outs.begin(), outs.end(), by_edge);
  std::sort(out.shell.vertices.begin(), out.shell.vertices.end());
  for (const Item& i : ins) {
    out.shell.inputs.push_back(i.edge);
    out.in_sources.push_back(i.src);
  }
  for (const Item& o : outs) {
    out.shell.outputs.push_back(o.edge);
    out.out_sources.push_back(o.src);
  }
  check_boundary(out.shell.inputs.size(), out.shell.outputs.size());
  return out;
}

/// Runs entry(idx0, idx1) -> Tallied for every (A, B) of the merged layout.
template <typename Entry>
Component fill(MergedLayout layout, OpTally* tally, Entry&& entry) {
  Component c = std::move(layout.shell);
  const auto in_maps = index_maps(layout.in_sources);
  const auto out_maps = index_maps(layout.out_sources);
  const std::size_t p = c.inputs.size(), q = c.outputs.size();
  c.table.resize(std::size_t{1} << (p + q));
  EntryCounter counter(tally);
  for (Mask b = 0; b < (Mask{1} << q); ++b) {
    for (Mask a = 0; a < (Mask{1} << p); ++a) {
      const Mask idx0 = in_maps[0][a] | out_maps[0][b];
      const Mask idx1 = in_maps[1][a] | out_maps[1][b];
      c.table[a | (b << p)] = entry(counter, idx0, idx1).value();
      counter.finish_entry();
    }
  }
  return c;
}

}  // namespace

Component basis_component(const FlowNetwork& net, VertexIndex v, OpTally* tally) {
  Component c;
  c.vertices = {v};
  c.inputs.assign(net.in_edges(v).begin(), net.in_edges(v).end());
  c.outputs.assign(net.out_edges(v).begin(), net.out_edges(v).end());
  const std::size_t p = c.inputs.size(), q = c.outputs.size();
  check_boundary(p, q);

  // One vertex: maxFromTo(A, B) = min(c(A), c(B)).
  EntryCounter counter(tally);
  std::vector<Capacity> in_sum(std::size_t{1} << p), out_sum(std::size_t{1} << q);
  auto subset_sums = [&](std::vector<Capacity>& sums, const std::vector<EdgeIndex>& edges) {
    for (Mask m = 1; m < sums.size(); ++m) {
      const Capacity cap = net.edge(edges[std::countr_zero(m)]).cap;
      sums[m] = (counter.read(sums, m & (m - 1)) + Tallied(cap, counter.ops())).value();
      counter.finish_entry();
    }
  };
  subset_sums(in_sum, c.inputs);
  subset_sums(out_sum, c.outputs);
  c.table.resize(std::size_t{1} << (p + q));
  for (Mask b = 0; b < out_sum.size(); ++b) {
    for (Mask a = 0; a < in_sum.size(); ++a) {
      c.table[a | (b << p)] = min(counter.read(in_sum, a), counter.read(out_sum, b)).value();
      counter.finish_entry();
    }
  }
  return c;
}

Component splice_case1(const Component& a, const Component& b, EdgeIndex e, OpTally* tally) {
  // head_part holds the head half of e (a dangling input); tail_part the tail half.
  int head_part;
  if (position_of(a.inputs, e) < a.inputs.size() && position_of(b.outputs, e) < b.outputs.size()) {
    head_part = 0;
  } else if (position_of(b.inputs, e) < b.inputs.size() && position_of(a.outputs, e) < a.outputs.size()) {
    head_part = 1;
  } else {
    throw Error("splice_case1: edge halves do not dangle from the two components");
  }
  const Component* parts[2] = {&a, &b};
  const Component& head = *parts[head_part];
  const Component& tail = *parts[1 - head_part];
  const Mask head_bit = Mask{1} << position_of(head.inputs, e);
  const Mask tail_bit = Mask{1} << (tail.inputs.size() + position_of(tail.outputs, e));

  auto layout = merge_layout(parts, std::pair{head_part, e}, std::pair{1 - head_part, e});
  return fill(std::move(layout), tally, [&](EntryCounter& k, Mask idx0, Mask idx1) {
    const Mask head_idx = head_part == 0 ? idx0 : idx1;
    const Mask tail_idx = head_part == 0 ? idx1 : idx0;
    // Flow avoiding e, plus what e can carry: the extra the head side can
    // absorb through e versus the extra the tail side can push into e.
    const Tallied head_base = k.read(head.table, head_idx);
    const Tallied tail_base = k.read(tail.table, tail_idx);
    const Tallied head_gain = k.read(head.table, head_idx | head_bit) - head_base;
    const Tallied tail_gain = k.read(tail.table, tail_idx | tail_bit) - tail_base;
    return head_base + tail_base + min(head_gain, tail_gain);
  });
}

Component splice_case2(const Component& c, EdgeIndex e, OpTally* tally) {
  const std::size_t in_pos = position_of(c.inputs, e);
  const std::size_t out_pos = position_of(c.outputs, e);
  if (in_pos == c.inputs.size() || out_pos == c.outputs.size()) {
    throw Error("splice_case2: both halves of the edge must dangle from the component");
  }
  const Mask in_bit = Mask{1} << in_pos;
  const Mask out_bit = Mask{1} << (c.inputs.size() + out_pos);
  const Component* parts[2] = {&c, nullptr};
  auto layout = merge_layout(parts, std::pair{0, e}, std::pair{0, e});
  return fill(std::move(layout), tally, [&](EntryCounter& k, Mask idx, Mask) {
    const Tallied base = k.read(c.table, idx);
    return base + min(k.read(c.table, idx | in_bit) - base, k.read(c.table, idx | out_bit) - base);
  });
}

Component union_components(const Component& a, const Component& b, OpTally* tally) {
  const Component* parts[2] = {&a, &b};
  auto layout = merge_layout(parts, std::nullopt, std::nullopt);
  return fill(std::move(layout), tally, [&](EntryCounter& k, Mask idx0, Mask idx1) {
    return k.read(a.table, idx0) + k.read(b.table, idx1);
  });
}

// --- driver ---------------------------------------------------------------------

ReassemblyResult run_reassembling(const FlowNetwork& net, const ReassemblingTree& tree, const EngineOptions& options) {
  const auto events = tree_to_splice_sequence(net, tree);
  const auto measures = tree_measures(net, tree);
  ReassemblyResult result;
  EngineStats& stats = result.stats;
  stats.alpha = measures.internal;
  stats.boundary_alpha = measures.with_dangling;

  const std::size_t n = net.vertex_count();
  if (n == 0) {
    result.full.table = {Capacity(0)};
    stats.components = 1;
    stats.entries = 1;
    return result;
  }

  std::vector<std::optional<Component>> slots(n + events.size());
  auto publish = [&](std::size_t id, Component c, bool from_union) {
    stats.delta = std::max(stats.delta, c.boundary());
    (from_union ? stats.union_entries : stats.entries) += c.table.size();
    ++stats.components;
    if (options.observer) options.observer(c);
    slots[id] = std::move(c);
  };
  auto take = [&](std::size_t id) {
    if (!slots[id]) throw Error("splice sequence consumes component " + std::to_string(id) + " twice");
    Component c = std::move(*slots[id]);
    slots[id].reset();
    return c;
  };

  for (VertexIndex v = 0; v < n; ++v) publish(v, basis_component(net, v, &stats.basis_ops), false);
  for (std::size_t k = 0; k < events.size(); ++k) {
    const SpliceEvent& ev = events[k];
    OpTally tally;
    Component built;
    switch (ev.kind) {
      case SpliceKind::kUnion: {
        const Component a = take(ev.first), b = take(ev.second);
        built = union_components(a, b, &stats.union_ops);
        ++stats.unions;
        publish(n + k, std::move(built), true);
        continue;
      }
      case SpliceKind::kCase1: {
        const Component a = take(ev.first), b = take(ev.second);
        built = splice_case1(a, b, ev.edge, &tally);
        ++stats.splices;
        break;
      }
      case SpliceKind::kCase2: {
        const Component a = take(ev.first);
        built = splice_case2(a, ev.edge, &tally);
        ++stats.splices;
        break;
      }
    }
    stats.splice_ops.merge(tally);
    publish(n + k, std::move(built), false);
  }
  result.full = take(events.empty() ? 0 : n + events.size() - 1);
  return result;
}

Typing principal_typing_reassembled(const FlowNetwork& net, const ReassemblingTree& tree) {
  const auto result = run_reassembling(net, tree);
  // The final component's dangling lists are exactly inputs() / outputs().
  return typing_from_table(net, result.full.table);
}

// --- component sub-networks -----------------------------------------------------

Mask ComponentNetwork::inputs_mask(Mask m) const {
  Mask out = 0;
  for (std::size_t i = 0; i < input_position.size(); ++i)
    if (m >> i & 1) out |= Mask{1} << input_position[i];
  return out;
}

Mask ComponentNetwork::outputs_mask(Mask m) const {
  Mask out = 0;
  for (std::size_t i = 0; i < output_position.size(); ++i)
    if (m >> i & 1) out |= Mask{1} << output_position[i];
  return out;
}

ComponentNetwork component_network(const FlowNetwork& net, const Component& c) {
  NetworkSpec spec;
  spec.name = net.name() + "/component";
  spec.scale_hint = net.scale();
  std::vector<char> inside(net.vertex_count(), 0);
  for (VertexIndex v : c.vertices) {
    inside[v] = 1;
    spec.vertices.push_back(net.vertex_id(v));
  }
  std::vector<char> dangles_in(net.edge_count(), 0), dangles_out(net.edge_count(), 0);
  for (EdgeIndex e : c.inputs) dangles_in[e] = 1;
  for (EdgeIndex e : c.outputs) dangles_out[e] = 1;

  std::vector<std::string> in_names, out_names;
  for (EdgeIndex e : c.inputs) in_names.push_back(dangles_out[e] ? net.edge(e).id + "#in" : net.edge(e).id);
  for (EdgeIndex e : c.outputs) out_names.push_back(dangles_in[e] ? net.edge(e).id + "#out" : net.edge(e).id);

  for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
    const Edge& edge = net.edge(e);
    const bool tail_in = edge.tail != kNoVertex && inside[edge.tail];
    const bool head_in = edge.head != kNoVertex && inside[edge.head];
    if (!tail_in && !head_in) continue;
    const Rational cap = net.to_rational(edge.cap);
    if (dangles_in[e]) {
      spec.edges.push_back({in_names[position_of(c.inputs, e)], std::nullopt, net.vertex_id(edge.head), cap});
    }
    if (dangles_out[e]) {
      spec.edges.push_back({out_names[position_of(c.outputs, e)], net.vertex_id(edge.tail), std::nullopt, cap});
    }
    if (!dangles_in[e] && !dangles_out[e]) {
      if (!edge.is_internal() || !tail_in || !head_in) throw Error("component lists are inconsistent with its vertices");
      spec.edges.push_back({edge.id, net.vertex_id(edge.tail), net.vertex_id(edge.head), cap});
    }
  }
  ComponentNetwork out{FlowNetwork(spec), {}, {}};
  for (const auto& name : in_names) out.input_position.push_back(out.net.input_position(*out.net.find_edge(name)));
  for (const auto& name : out_names) out.output_position.push_back(out.net.output_position(*out.net.find_edge(name)));
  return out;
}

}  // namespace flowtype
