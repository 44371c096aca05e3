#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "flowtype/rational.hpp"

namespace flowtype {

using VertexIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;
using Mask = std::uint64_t;

inline constexpr VertexIndex kNoVertex = UINT32_MAX;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Signed flow amount measured in units of 1/scale of the owning network.
/// Network capacities are non-negative; differences may go negative.
class Capacity {
 public:
  constexpr Capacity() = default;
  constexpr explicit Capacity(std::int64_t units) : units_(units) {}

  constexpr std::int64_t units() const { return units_; }

  friend constexpr auto operator<=>(Capacity, Capacity) = default;
  friend constexpr Capacity operator+(Capacity a, Capacity b) { return Capacity(a.units_ + b.units_); }
  friend constexpr Capacity operator-(Capacity a, Capacity b) { return Capacity(a.units_ - b.units_); }
  constexpr Capacity operator-() const { return Capacity(-units_); }
  constexpr Capacity& operator+=(Capacity o) {
    units_ += o.units_;
    return *this;
  }
  constexpr Capacity& operator-=(Capacity o) {
    units_ -= o.units_;
    return *this;
  }

 private:
  std::int64_t units_ = 0;
};

constexpr Capacity min(Capacity a, Capacity b) { return b < a ? b : a; }

// --- raw input -------------------------------------------------------------

struct EdgeSpec {
  std::string id;
  std::optional<std::string> tail;
  std::optional<std::string> head;
  Rational cap;
};

/// Unvalidated network description, as read from JSON or built by code.
struct NetworkSpec {
  std::string name = "network";
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  /// The network's unit scale is lcm(all denominators, scale_hint). Lets
  /// derived networks share their parent's units exactly.
  std::int64_t scale_hint = 1;
};

/// Lists every invariant violation; empty iff `spec` describes a valid
/// flow network.
std::vector<std::string> validate_network(const NetworkSpec& spec);

// --- validated network -------------------------------------------------------

struct Edge {
  std::string id;
  VertexIndex tail = kNoVertex;
  VertexIndex head = kNoVertex;
  Capacity cap;

  bool is_input() const { return tail == kNoVertex; }
  bool is_output() const { return head == kNoVertex; }
  bool is_internal() const { return tail != kNoVertex && head != kNoVertex; }
};

/// Immutable flow network. Vertices and edges are stored in ascending
/// lexicographic id order, which fixes every downstream tie-break.
class FlowNetwork {
 public:
  FlowNetwork() = default;
  /// Throws Error listing the violations when `spec` is invalid.
  explicit FlowNetwork(const NetworkSpec& spec);

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_id(VertexIndex v) const { return vertex_ids_[v]; }
  std::optional<VertexIndex> find_vertex(const std::string& id) const;
  std::optional<EdgeIndex> find_edge(const std::string& id) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }

  /// Input, output and internal edge indices, each ascending.
  std::span<const EdgeIndex> inputs() const { return inputs_; }
  std::span<const EdgeIndex> outputs() const { return outputs_; }
  std::span<const EdgeIndex> internal() const { return internal_; }

  /// Edges entering / leaving v (dangling edges included).
  std::span<const EdgeIndex> in_edges(VertexIndex v) const { return in_edges_[v]; }
  std::span<const EdgeIndex> out_edges(VertexIndex v) const { return out_edges_[v]; }
  std::size_t degree(VertexIndex v) const { return in_edges_[v].size() + out_edges_[v].size(); }

  std::int64_t scale() const { return scale_; }
  Rational to_rational(Capacity c) const { return Rational(c.units(), scale_); }
  /// Throws Error when r is not a multiple of 1/scale.
  Capacity to_capacity(const Rational& r) const;

  /// Position of an IO edge within inputs() / outputs().
  std::size_t input_position(EdgeIndex e) const { return io_position_.at(e); }
  std::size_t output_position(EdgeIndex e) const { return io_position_.at(e); }

  NetworkSpec to_spec() const;

 private:
  std::string name_;
  std::vector<std::string> vertex_ids_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
  std::vector<EdgeIndex> inputs_, outputs_, internal_;
  std::unordered_map<EdgeIndex, std::size_t> io_position_;
  std::vector<std::vector<EdgeIndex>> in_edges_, out_edges_;
  std::int64_t scale_ = 1;
};

// --- flows, assignments, typings -------------------------------------------

/// Total assignment over E(G), indexed by EdgeIndex.
struct Flow {
  std::vector<Capacity> values;

  static Flow zero(const FlowNetwork& net) { return Flow{std::vector<Capacity>(net.edge_count())}; }
  Capacity operator[](EdgeIndex e) const { return values[e]; }
  Capacity& operator[](EdgeIndex e) { return values[e]; }
  friend bool operator==(const Flow&, const Flow&) = default;
};

/// Values on the dangling edges, aligned with inputs() and outputs().
struct IOAssignment {
  std::vector<Capacity> inputs;
  std::vector<Capacity> outputs;
  friend bool operator==(const IOAssignment&, const IOAssignment&) = default;
};

struct Interval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Map from (A ⊆ inputs, B ⊆ outputs) to a closed interval. Subsets are bit
/// masks over the network's inputs() / outputs() order; the entry for (A, B)
/// lives at index A | (B << |inputs|).
struct Typing {
  std::string network;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<Interval> entries;

  std::size_t index(Mask a, Mask b) const { return a | (b << inputs.size()); }
  const Interval& at(Mask a, Mask b) const { return entries.at(index(a, b)); }
  Interval& at(Mask a, Mask b) { return entries.at(index(a, b)); }
  Mask full_inputs() const { return (Mask{1} << inputs.size()) - 1; }
  Mask full_outputs() const { return (Mask{1} << outputs.size()) - 1; }

  friend bool operator==(const Typing& a, const Typing& b) {
    return a.inputs == b.inputs && a.outputs == b.outputs && a.entries == b.entries;
  }
};

/// Largest |E_io| for which a typing table is materialised.
inline constexpr std::size_t kMaxTypingIO = 24;

bool is_feasible(const FlowNetwork& net, const Flow& f);
Capacity flow_value(const FlowNetwork& net, const Flow& f);
Flow add_flows(const Flow& f, const Flow& g);
IOAssignment io_restriction(const FlowNetwork& net, const Flow& f);
bool satisfies_typing(const FlowNetwork& net, const IOAssignment& g, const Typing& tau);

/// Sum of capacities of the inputs (or outputs) selected by mask.
Capacity input_capacity(const FlowNetwork& net, Mask a);
Capacity output_capacity(const FlowNetwork& net, Mask b);

}  // namespace flowtype
