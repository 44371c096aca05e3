#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "flowtype/network.hpp"

namespace flowtype {

/// Rooted binary tree whose leaves are single vertices and whose internal
/// nodes stand for the union of their children.
class ReassemblingTree {
 public:
  using NodeId = std::size_t;

  struct Node {
    std::optional<VertexIndex> vertex;  // set on leaves
    NodeId left = 0;
    NodeId right = 0;
  };

  NodeId add_leaf(VertexIndex v);
  NodeId add_merge(NodeId left, NodeId right);
  /// Defaults to the most recently added node.
  void set_root(NodeId root) { root_ = root; }

  NodeId root() const;
  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  std::vector<VertexIndex> vertices_of(NodeId id) const;

  /// Throws Error unless this is a reassembling of net: exactly one leaf per
  /// vertex, 2n-1 reachable nodes, disjoint children.
  void validate(const FlowNetwork& net) const;

  /// Left comb over the given order: ((v0 v1) v2) ...
  static ReassemblingTree left_comb(std::span<const VertexIndex> order);

 private:
  std::vector<Node> nodes_;
  std::optional<NodeId> root_;
};

/// Maximum, over tree nodes, of the number of internal edges with exactly
/// one endpoint inside the node.
std::size_t alpha_measure(const FlowNetwork& net, const ReassemblingTree& tree);

/// Same, but dangling edges incident to the node also count. This is the
/// quantity that bounds component sizes when splicing lazily.
std::size_t boundary_measure(const FlowNetwork& net, const ReassemblingTree& tree);

/// Largest dangling-edge count of any component that run_reassembling will
/// build for this tree, computed without building tables.
std::size_t predicted_delta(const FlowNetwork& net, const ReassemblingTree& tree);

// --- splice sequence ---------------------------------------------------------

enum class SpliceKind {
  kUnion,  // two components with no edge between them
  kCase1,  // edge between two distinct components
  kCase2,  // edge whose halves already dangle from the same component
};

/// Components are numbered: vertex v's basis component is v, and event k
/// produces component n + k.
struct SpliceEvent {
  SpliceKind kind;
  EdgeIndex edge = 0;  // unused for kUnion
  std::size_t first = 0;
  std::size_t second = 0;  // unused for kCase2
};

std::vector<SpliceEvent> tree_to_splice_sequence(const FlowNetwork& net, const ReassemblingTree& tree);

// --- components and splicing ---------------------------------------------------

struct OpCounts {
  std::uint64_t min = 0;
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;

  OpCounts& operator+=(const OpCounts& o) {
    min += o.min;
    plus += o.plus;
    minus += o.minus;
    return *this;
  }
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

/// Per-kernel accounting: totals plus the worst single table entry.
struct OpTally {
  OpCounts total;
  std::uint64_t max_plus_minus_per_entry = 0;
  std::uint64_t max_min_per_entry = 0;
  std::uint64_t entries = 0;

  void merge(const OpTally& o);
};

/// A partially reassembled sub-network. Dangling lists hold edge indices in
/// ascending order; an internal edge of the full network appears in
/// `inputs` of the component holding its head and in `outputs` of the one
/// holding its tail until it is spliced.
struct Component {
  std::vector<VertexIndex> vertices;
  std::vector<EdgeIndex> inputs;
  std::vector<EdgeIndex> outputs;
  /// maxFromTo over every (A, B), at index A | (B << inputs.size()).
  std::vector<Capacity> table;

  std::size_t boundary() const { return inputs.size() + outputs.size(); }
  std::size_t index(Mask a, Mask b) const { return a | (b << inputs.size()); }
  Capacity at(Mask a, Mask b) const { return table[index(a, b)]; }
};

/// Largest dangling-edge count for which a component table is allocated.
inline constexpr std::size_t kMaxComponentBoundary = 26;

Component basis_component(const FlowNetwork& net, VertexIndex v, OpTally* tally = nullptr);
/// Splices e, whose head half dangles from one of the two components and
/// whose tail half dangles from the other (either order).
Component splice_case1(const Component& a, const Component& b, EdgeIndex e, OpTally* tally = nullptr);
Component splice_case2(const Component& c, EdgeIndex e, OpTally* tally = nullptr);
Component union_components(const Component& a, const Component& b, OpTally* tally = nullptr);

struct EngineStats {
  std::size_t delta = 0;  // largest p + q over all components
  std::size_t alpha = 0;
  std::size_t boundary_alpha = 0;
  std::size_t components = 0;
  std::size_t splices = 0;
  std::size_t unions = 0;
  std::uint64_t entries = 0;  // table entries of basis and splice components
  /// Unions of parts that share no edge are kept apart: their tables only
  /// add up entries of tables already built.
  std::uint64_t union_entries = 0;
  OpTally splice_ops;
  OpTally basis_ops;
  OpTally union_ops;
};

struct EngineOptions {
  /// Called with every component as soon as it is built, basis included.
  std::function<void(const Component&)> observer;
};

struct ReassemblyResult {
  Component full;
  EngineStats stats;
};

ReassemblyResult run_reassembling(const FlowNetwork& net, const ReassemblingTree& tree,
                                  const EngineOptions& options = {});

/// Principal typing read off the final maxFromTo table.
Typing principal_typing_reassembled(const FlowNetwork& net, const ReassemblingTree& tree);

/// Sub-network induced by the component's vertices with its dangling halves
/// turned into IO edges. A half keeps its edge id unless both halves dangle
/// from this component, in which case they become "<id>#in" / "<id>#out".
struct ComponentNetwork {
  FlowNetwork net;
  /// Position in net.inputs() / net.outputs() of each component half.
  std::vector<std::size_t> input_position;
  std::vector<std::size_t> output_position;

  Mask inputs_mask(Mask component_inputs) const;
  Mask outputs_mask(Mask component_outputs) const;
};

ComponentNetwork component_network(const FlowNetwork& net, const Component& c);

}  // namespace flowtype
