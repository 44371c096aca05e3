#include "flowtype/network.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace flowtype {

namespace {

// Totals of scaled capacities must stay far from int64 overflow: the engine
// adds and subtracts sums of capacities.
constexpr std::int64_t kMaxTotalUnits = std::int64_t{1} << 52;

std::int64_t common_scale(const NetworkSpec& spec) {
  std::int64_t scale = spec.scale_hint > 0 ? spec.scale_hint : 1;
  for (const auto& e : spec.edges) scale = checked_lcm(scale, e.cap.den());
  return scale;
}

}  // namespace

std::vector<std::string> validate_network(const NetworkSpec& spec) {
  std::vector<std::string> problems;
  std::set<std::string> vertices;
  for (const auto& v : spec.vertices) {
    if (!vertices.insert(v).second) problems.push_back("duplicate vertex '" + v + "'");
  }
  std::set<std::string> edge_ids;
  std::set<std::pair<std::string, std::string>> arcs;
  for (const auto& e : spec.edges) {
    const std::string where = "edge '" + e.id + "': ";
    if (!edge_ids.insert(e.id).second) problems.push_back(where + "duplicate edge id");
    if (!e.tail && !e.head) {
      problems.push_back(where + "floating edge (no endpoint)");
      continue;
    }
    if (e.tail && !vertices.count(*e.tail)) problems.push_back(where + "unknown tail '" + *e.tail + "'");
    if (e.head && !vertices.count(*e.head)) problems.push_back(where + "unknown head '" + *e.head + "'");
    if (e.tail && e.head) {
      if (*e.tail == *e.head) {
        problems.push_back(where + "self-loop");
      } else if (!arcs.emplace(*e.tail, *e.head).second) {
        problems.push_back(where + "multi-edge " + *e.tail + "->" + *e.head);
      }
    }
    if (e.cap < Rational(0)) problems.push_back(where + "negative capacity " + e.cap.str());
  }
  if (problems.empty()) {
    try {
      const std::int64_t scale = common_scale(spec);
      std::int64_t total = 0;
      for (const auto& e : spec.edges) {
        std::int64_t units = 0;
        if (__builtin_mul_overflow(e.cap.num(), scale / e.cap.den(), &units) ||
            __builtin_add_overflow(total, units, &total) || total > kMaxTotalUnits) {
          problems.push_back("capacities too large for exact 64-bit arithmetic");
          break;
        }
      }
    } catch (const std::overflow_error&) {
      problems.push_back("capacity denominators overflow a common scale");
    }
  }
  return problems;
}

FlowNetwork::FlowNetwork(const NetworkSpec& spec) : name_(spec.name) {
  if (auto problems = validate_network(spec); !problems.empty()) {
    std::string msg = "invalid network '" + spec.name + "':";
    for (const auto& p : problems) msg += "\n  " + p;
    throw Error(msg);
  }
  scale_ = common_scale(spec);

  vertex_ids_ = spec.vertices;
  std::sort(vertex_ids_.begin(), vertex_ids_.end());
  for (VertexIndex v = 0; v < vertex_ids_.size(); ++v) vertex_lookup_.emplace(vertex_ids_[v], v);

  std::vector<const EdgeSpec*> sorted;
  for (const auto& e : spec.edges) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->id < b->id; });

  in_edges_.resize(vertex_ids_.size());
  out_edges_.resize(vertex_ids_.size());
  for (const EdgeSpec* es : sorted) {
    Edge e;
    e.id = es->id;
    e.tail = es->tail ? vertex_lookup_.at(*es->tail) : kNoVertex;
    e.head = es->head ? vertex_lookup_.at(*es->head) : kNoVertex;
    e.cap = Capacity(es->cap.num() * (scale_ / es->cap.den()));
    const auto idx = static_cast<EdgeIndex>(edges_.size());
    edge_lookup_.emplace(e.id, idx);
    if (e.is_input()) {
      io_position_[idx] = inputs_.size();
      inputs_.push_back(idx);
    } else if (e.is_output()) {
      io_position_[idx] = outputs_.size();
      outputs_.push_back(idx);
    } else {
      internal_.push_back(idx);
    }
    if (e.tail != kNoVertex) out_edges_[e.tail].push_back(idx);
    if (e.head != kNoVertex) in_edges_[e.head].push_back(idx);
    edges_.push_back(std::move(e));
  }
}

std::optional<VertexIndex> FlowNetwork::find_vertex(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> FlowNetwork::find_edge(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

Capacity FlowNetwork::to_capacity(const Rational& r) const {
  if (scale_ % r.den() != 0) throw Error("value " + r.str() + " is not representable at scale 1/" + std::to_string(scale_));
  return Capacity(r.num() * (scale_ / r.den()));
}

NetworkSpec FlowNetwork::to_spec() const {
  NetworkSpec spec;
  spec.name = name_;
  spec.vertices = vertex_ids_;
  spec.scale_hint = scale_;
  for (const auto& e : edges_) {
    EdgeSpec es;
    es.id = e.id;
    if (e.tail != kNoVertex) es.tail = vertex_ids_[e.tail];
    if (e.head != kNoVertex) es.head = vertex_ids_[e.head];
    es.cap = to_rational(e.cap);
    spec.edges.push_back(std::move(es));
  }
  return spec;
}

// --- operations --------------------------------------------------------------

namespace {

void require_domain(const FlowNetwork& net, const Flow& f) {
  if (f.values.size() != net.edge_count()) {
    throw Error("flow domain has " + std::to_string(f.values.size()) + " edges, network has " +
                std::to_string(net.edge_count()));
  }
}

}  // namespace

bool is_feasible(const FlowNetwork& net, const Flow& f) {
  require_domain(net, f);
  for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
    if (f[e] < Capacity(0) || f[e] > net.edge(e).cap) return false;
  }
  for (VertexIndex v = 0; v < net.vertex_count(); ++v) {
    Capacity balance;
    for (EdgeIndex e : net.in_edges(v)) balance += f[e];
    for (EdgeIndex e : net.out_edges(v)) balance -= f[e];
    if (balance != Capacity(0)) return false;
  }
  return true;
}

Capacity flow_value(const FlowNetwork& net, const Flow& f) {
  if (!is_feasible(net, f)) throw Error("flow_value of an infeasible flow");
  Capacity in, out;
  for (EdgeIndex e : net.inputs()) in += f[e];
  for (EdgeIndex e : net.outputs()) out += f[e];
  if (in != out) throw Error("global conservation violated");
  return in;
}

Flow add_flows(const Flow& f, const Flow& g) {
  if (f.values.size() != g.values.size()) throw Error("add_flows: domain mismatch");
  Flow sum = f;
  for (std::size_t e = 0; e < sum.values.size(); ++e) sum.values[e] += g.values[e];
  return sum;
}

IOAssignment io_restriction(const FlowNetwork& net, const Flow& f) {
  require_domain(net, f);
  IOAssignment g;
  for (EdgeIndex e : net.inputs()) g.inputs.push_back(f[e]);
  for (EdgeIndex e : net.outputs()) g.outputs.push_back(f[e]);
  return g;
}

bool satisfies_typing(const FlowNetwork& net, const IOAssignment& g, const Typing& tau) {
  const std::size_t p = net.inputs().size();
  const std::size_t q = net.outputs().size();
  if (g.inputs.size() != p || g.outputs.size() != q) throw Error("IO assignment domain mismatch");
  if (tau.inputs.size() != p || tau.outputs.size() != q || tau.entries.size() != (std::size_t{1} << (p + q))) {
    throw Error("typing is not total over the network's IO edges");
  }
  // Subset sums by incremental lowest-bit expansion.
  std::vector<Capacity> in_sum(std::size_t{1} << p), out_sum(std::size_t{1} << q);
  for (Mask a = 1; a < in_sum.size(); ++a) in_sum[a] = in_sum[a & (a - 1)] + g.inputs[std::countr_zero(a)];
  for (Mask b = 1; b < out_sum.size(); ++b) out_sum[b] = out_sum[b & (b - 1)] + g.outputs[std::countr_zero(b)];
  for (Mask a = 0; a < in_sum.size(); ++a) {
    for (Mask b = 0; b < out_sum.size(); ++b) {
      if (!tau.at(a, b).contains(net.to_rational(in_sum[a] - out_sum[b]))) return false;
    }
  }
  return true;
}

Capacity input_capacity(const FlowNetwork& net, Mask a) {
  Capacity sum;
  for (std::size_t i = 0; i < net.inputs().size(); ++i)
    if (a >> i & 1) sum += net.edge(net.inputs()[i]).cap;
  return sum;
}

Capacity output_capacity(const FlowNetwork& net, Mask b) {
  Capacity sum;
  for (std::size_t i = 0; i < net.outputs().size(); ++i)
    if (b >> i & 1) sum += net.edge(net.outputs()[i]).cap;
  return sum;
}

}  // namespace flowtype
