#include "flowtype/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "flowtype/maxflow.hpp"

namespace flowtype {

namespace {

void require_pair(const FlowNetwork& net, SubsetPair pair) {
  const std::size_t p = net.inputs().size(), q = net.outputs().size();
  const Mask in_full = p >= 64 ? ~Mask{0} : (Mask{1} << p) - 1;
  const Mask out_full = q >= 64 ? ~Mask{0} : (Mask{1} << q) - 1;
  if ((pair.inputs & ~in_full) || (pair.outputs & ~out_full)) throw Error("subset pair outside the network's IO edges");
}

/// Vertices become nodes 0..n-1; internal edges become arcs with their
/// capacities. Dangling edges are attached by the callers.
MaxFlowGraph internal_graph(const FlowNetwork& net) {
  MaxFlowGraph g(net.vertex_count());
  for (EdgeIndex e : net.internal()) {
    const Edge& edge = net.edge(e);
    g.add_arc(edge.tail, edge.head, edge.cap.units());
  }
  return g;
}

struct Terminal {
  std::size_t node;
  std::vector<std::size_t> arcs;
};

// Fresh input edge joining the selected inputs: source -> hub -> head(a).
Terminal attach_inputs(MaxFlowGraph& g, const FlowNetwork& net, Mask a) {
  Terminal t{g.add_node(), {}};
  const std::size_t hub = g.add_node();
  g.add_arc(t.node, hub, input_capacity(net, a).units());
  for (std::size_t i = 0; i < net.inputs().size(); ++i) {
    if (!(a >> i & 1)) continue;
    const Edge& e = net.edge(net.inputs()[i]);
    t.arcs.push_back(g.add_arc(hub, e.head, e.cap.units()));
  }
  return t;
}

// Fresh output edge joining the selected outputs: tail(b) -> hub -> sink.
Terminal attach_outputs(MaxFlowGraph& g, const FlowNetwork& net, Mask b) {
  const std::size_t hub = g.add_node();
  Terminal t{g.add_node(), {}};
  g.add_arc(hub, t.node, output_capacity(net, b).units());
  for (std::size_t i = 0; i < net.outputs().size(); ++i) {
    if (!(b >> i & 1)) continue;
    const Edge& e = net.edge(net.outputs()[i]);
    t.arcs.push_back(g.add_arc(e.tail, hub, e.cap.units()));
  }
  return t;
}

std::int64_t arc_sum(const MaxFlowGraph& g, const std::vector<std::size_t>& arcs) {
  std::int64_t sum = 0;
  for (std::size_t a : arcs) sum += g.flow(a);
  return sum;
}

}  // namespace

Capacity max_from_to(const FlowNetwork& net, SubsetPair pair) {
  require_pair(net, pair);
  MaxFlowGraph g = internal_graph(net);
  const Terminal source = attach_inputs(g, net, pair.inputs);
  const Terminal sink = attach_outputs(g, net, pair.outputs);
  const std::int64_t value = g.max_flow(source.node, sink.node);
  const std::int64_t via_inputs = arc_sum(g, source.arcs);
  const std::int64_t via_outputs = arc_sum(g, sink.arcs);
  if (via_inputs != value || via_outputs != value) {
    throw std::logic_error("max_from_to: f(A) and f(B) disagree");
  }
  return Capacity(value);
}

std::vector<Capacity> max_from_to_table(const FlowNetwork& net) {
  const std::size_t p = net.inputs().size(), q = net.outputs().size();
  if (p + q > kMaxTypingIO) throw Error("too many dangling edges for a full table");
  std::vector<Capacity> table(std::size_t{1} << (p + q));
  for (Mask a = 0; a < (Mask{1} << p); ++a)
    for (Mask b = 0; b < (Mask{1} << q); ++b) table[a | (b << p)] = max_from_to(net, {a, b});
  return table;
}

namespace {

enum class AftShape { kInputs, kOutputs };

AftShape classify(const AftQuery& q) {
  if (q.first.outputs == q.after.outputs && (q.first.inputs & q.after.inputs) == 0) return AftShape::kInputs;
  if (q.first.inputs == q.after.inputs && (q.first.outputs & q.after.outputs) == 0) return AftShape::kOutputs;
  throw Error("maxFromToAft: arguments must share B with disjoint A, or share A with disjoint B");
}

}  // namespace

Capacity max_from_to_aft(const FlowNetwork& net, const AftQuery& query) {
  const SubsetPair& a = query.first;
  const SubsetPair& c = query.after;
  switch (classify(query)) {
    case AftShape::kInputs:
      return max_from_to(net, {a.inputs | c.inputs, c.outputs}) - max_from_to(net, c);
    case AftShape::kOutputs:
      return max_from_to(net, {c.inputs, a.outputs | c.outputs}) - max_from_to(net, c);
  }
  return Capacity(0);
}

Capacity max_from_to_aft_two_phase(const FlowNetwork& net, const AftQuery& query) {
  const AftShape shape = classify(query);
  require_pair(net, query.first);
  require_pair(net, query.after);
  MaxFlowGraph g = internal_graph(net);
  if (shape == AftShape::kInputs) {
    const Terminal conditioned = attach_inputs(g, net, query.after.inputs);
    const Terminal extra = attach_inputs(g, net, query.first.inputs);
    const Terminal sink = attach_outputs(g, net, query.after.outputs);
    g.max_flow(conditioned.node, sink.node);
    return Capacity(g.max_flow(extra.node, sink.node));
  }
  const Terminal source = attach_inputs(g, net, query.after.inputs);
  const Terminal conditioned = attach_outputs(g, net, query.after.outputs);
  const Terminal extra = attach_outputs(g, net, query.first.outputs);
  g.max_flow(source.node, conditioned.node);
  return Capacity(g.max_flow(source.node, extra.node));
}

Typing typing_from_table(const FlowNetwork& net, const std::vector<Capacity>& table) {
  const std::size_t p = net.inputs().size(), q = net.outputs().size();
  Typing tau;
  tau.network = net.name();
  for (EdgeIndex e : net.inputs()) tau.inputs.push_back(net.edge(e).id);
  for (EdgeIndex e : net.outputs()) tau.outputs.push_back(net.edge(e).id);
  tau.entries.resize(std::size_t{1} << (p + q));
  const Mask all_in = tau.full_inputs(), all_out = tau.full_outputs();
  for (Mask a = 0; a <= all_in; ++a) {
    for (Mask b = 0; b <= all_out; ++b) {
      const Capacity lo = -table[(all_in & ~a) | (b << p)];
      const Capacity hi = table[a | ((all_out & ~b) << p)];
      tau.at(a, b) = Interval{net.to_rational(lo), net.to_rational(hi)};
    }
  }
  return tau;
}

Typing principal_typing_oracle(const FlowNetwork& net, std::size_t io_limit) {
  const std::size_t io = net.inputs().size() + net.outputs().size();
  if (io > io_limit) {
    throw Error("oracle refused: " + std::to_string(io) + " dangling edges exceeds the limit of " +
                std::to_string(io_limit));
  }
  return typing_from_table(net, max_from_to_table(net));
}

std::optional<Flow> extend_to_feasible(const FlowNetwork& net, const IOAssignment& g) {
  if (g.inputs.size() != net.inputs().size() || g.outputs.size() != net.outputs().size()) {
    throw Error("IO assignment domain mismatch");
  }
  Capacity total_in, total_out;
  for (std::size_t i = 0; i < g.inputs.size(); ++i) {
    if (g.inputs[i] < Capacity(0) || g.inputs[i] > net.edge(net.inputs()[i]).cap) return std::nullopt;
    total_in += g.inputs[i];
  }
  for (std::size_t i = 0; i < g.outputs.size(); ++i) {
    if (g.outputs[i] < Capacity(0) || g.outputs[i] > net.edge(net.outputs()[i]).cap) return std::nullopt;
    total_out += g.outputs[i];
  }
  if (total_in != total_out) return std::nullopt;

  // Fixed boundary values become exact-capacity source and sink arcs; the
  // assignment extends iff they all saturate.
  MaxFlowGraph mf(net.vertex_count());
  std::vector<std::size_t> internal_arcs;
  for (EdgeIndex e : net.internal()) {
    const Edge& edge = net.edge(e);
    internal_arcs.push_back(mf.add_arc(edge.tail, edge.head, edge.cap.units()));
  }
  const std::size_t source = mf.add_node(), sink = mf.add_node();
  for (std::size_t i = 0; i < g.inputs.size(); ++i) mf.add_arc(source, net.edge(net.inputs()[i]).head, g.inputs[i].units());
  for (std::size_t i = 0; i < g.outputs.size(); ++i) mf.add_arc(net.edge(net.outputs()[i]).tail, sink, g.outputs[i].units());
  if (mf.max_flow(source, sink) != total_in.units()) return std::nullopt;

  Flow f = Flow::zero(net);
  for (std::size_t i = 0; i < internal_arcs.size(); ++i) f[net.internal()[i]] = Capacity(mf.flow(internal_arcs[i]));
  for (std::size_t i = 0; i < g.inputs.size(); ++i) f[net.inputs()[i]] = g.inputs[i];
  for (std::size_t i = 0; i < g.outputs.size(); ++i) f[net.outputs()[i]] = g.outputs[i];
  return f;
}

Flow random_feasible_flow(const FlowNetwork& net, std::mt19937_64& rng) {
  Flow f = Flow::zero(net);
  const std::size_t p = net.inputs().size(), q = net.outputs().size();
  if (p == 0 || q == 0) return f;
  const Mask active = std::uniform_int_distribution<Mask>(1, (Mask{1} << p) - 1)(rng);
  const std::size_t rounds = std::uniform_int_distribution<std::size_t>(0, 2 * (p + q) + 2)(rng);

  struct Step {
    EdgeIndex edge;
    bool forward;
  };
  for (std::size_t round = 0; round < rounds; ++round) {
    std::vector<EdgeIndex> sources, sinks;
    for (std::size_t i = 0; i < p; ++i) {
      const EdgeIndex e = net.inputs()[i];
      if ((active >> i & 1) && f[e] < net.edge(e).cap) sources.push_back(e);
    }
    for (EdgeIndex e : net.outputs())
      if (f[e] < net.edge(e).cap) sinks.push_back(e);
    if (sources.empty() || sinks.empty()) break;
    const EdgeIndex in = sources[std::uniform_int_distribution<std::size_t>(0, sources.size() - 1)(rng)];
    std::vector<char> is_target(net.vertex_count(), 0);
    for (EdgeIndex e : sinks) is_target[net.edge(e).tail] = 1;

    // Randomised DFS over the residual network.
    std::vector<std::optional<Step>> via(net.vertex_count());
    std::vector<char> seen(net.vertex_count(), 0);
    std::vector<VertexIndex> stack{net.edge(in).head};
    seen[net.edge(in).head] = 1;
    std::optional<VertexIndex> reached;
    while (!stack.empty()) {
      const VertexIndex v = stack.back();
      stack.pop_back();
      if (is_target[v]) {
        reached = v;
        break;
      }
      std::vector<Step> moves;
      for (EdgeIndex e : net.out_edges(v))
        if (net.edge(e).is_internal() && f[e] < net.edge(e).cap && !seen[net.edge(e).head]) moves.push_back({e, true});
      for (EdgeIndex e : net.in_edges(v))
        if (net.edge(e).is_internal() && f[e] > Capacity(0) && !seen[net.edge(e).tail]) moves.push_back({e, false});
      std::shuffle(moves.begin(), moves.end(), rng);
      for (const Step& s : moves) {
        const VertexIndex w = s.forward ? net.edge(s.edge).head : net.edge(s.edge).tail;
        if (seen[w]) continue;
        seen[w] = 1;
        via[w] = s;
        stack.push_back(w);
      }
    }
    if (!reached) continue;

    std::vector<EdgeIndex> out_choices;
    for (EdgeIndex e : sinks)
      if (net.edge(e).tail == *reached) out_choices.push_back(e);
    const EdgeIndex out = out_choices[std::uniform_int_distribution<std::size_t>(0, out_choices.size() - 1)(rng)];
    Capacity bottleneck = min(net.edge(in).cap - f[in], net.edge(out).cap - f[out]);
    std::vector<Step> path;
    for (VertexIndex v = *reached; via[v];) {
      const Step s = *via[v];
      path.push_back(s);
      bottleneck = min(bottleneck, s.forward ? net.edge(s.edge).cap - f[s.edge] : f[s.edge]);
      v = s.forward ? net.edge(s.edge).tail : net.edge(s.edge).head;
    }
    if (bottleneck <= Capacity(0)) continue;
    const Capacity amount(std::uniform_int_distribution<std::int64_t>(1, bottleneck.units())(rng));
    f[in] += amount;
    f[out] += amount;
    for (const Step& s : path) {
      if (s.forward) f[s.edge] += amount;
      else f[s.edge] -= amount;
    }
  }
  return f;
}

std::string describe(const FlowNetwork& net, const IOAssignment& g) {
  std::ostringstream os;
  os << "{";
  const char* sep = "";
  for (std::size_t i = 0; i < g.inputs.size(); ++i, sep = ", ")
    os << sep << net.edge(net.inputs()[i]).id << ":" << net.to_rational(g.inputs[i]).str();
  for (std::size_t i = 0; i < g.outputs.size(); ++i, sep = ", ")
    os << sep << net.edge(net.outputs()[i]).id << ":" << net.to_rational(g.outputs[i]).str();
  os << "}";
  return os.str();
}

namespace {

/// Uniform draw from the box [0, c(e)] on every IO edge with one output
/// (picked at random) solved for so that inflow equals outflow; nullopt when
/// that output would leave its box.
std::optional<IOAssignment> candidate_assignment(const FlowNetwork& net, std::mt19937_64& rng) {
  IOAssignment g;
  Capacity total;
  for (EdgeIndex e : net.inputs()) {
    g.inputs.emplace_back(std::uniform_int_distribution<std::int64_t>(0, net.edge(e).cap.units())(rng));
    total += g.inputs.back();
  }
  const std::size_t q = net.outputs().size();
  if (q == 0) {
    if (total != Capacity(0)) return std::nullopt;
    return g;
  }
  const std::size_t solved = std::uniform_int_distribution<std::size_t>(0, q - 1)(rng);
  g.outputs.resize(q);
  for (std::size_t i = 0; i < q; ++i) {
    if (i == solved) continue;
    g.outputs[i] = Capacity(std::uniform_int_distribution<std::int64_t>(0, net.edge(net.outputs()[i]).cap.units())(rng));
    total -= g.outputs[i];
  }
  if (total < Capacity(0) || total > net.edge(net.outputs()[solved]).cap) return std::nullopt;
  g.outputs[solved] = total;
  return g;
}

}  // namespace

PrincipalityReport check_principal(const FlowNetwork& net, const Typing& tau, const SamplingOptions& options) {
  PrincipalityReport report;
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const Flow f = random_feasible_flow(net, rng);
    ++report.flows_checked;
    const IOAssignment g = io_restriction(net, f);
    if (!satisfies_typing(net, g, tau)) report.completeness_counterexamples.push_back(describe(net, g));
  }
  const std::size_t budget = options.samples * options.attempts_per_sample;
  for (std::size_t attempt = 0; attempt < budget && report.assignments_checked < options.samples; ++attempt) {
    auto g = candidate_assignment(net, rng);
    if (!g || !satisfies_typing(net, *g, tau)) {
      ++report.assignments_rejected;
      continue;
    }
    ++report.assignments_checked;
    if (!extend_to_feasible(net, *g)) report.soundness_counterexamples.push_back(describe(net, *g));
  }
  return report;
}

}  // namespace flowtype
