#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "flowtype/generators.hpp"
#include "flowtype/oracle.hpp"
#include "flowtype/reassembly.hpp"

namespace flowtype {
namespace {

std::int64_t units(const FlowNetwork& net, std::int64_t value) { return net.to_capacity(Rational(value)).units(); }

TEST(MaxFromTo, ChainBottleneck) {
  const FlowNetwork net(fixtures::chain());
  EXPECT_EQ(max_from_to(net, {1, 1}).units(), 3);
  EXPECT_EQ(max_from_to(net, {0, 1}).units(), 0);
  EXPECT_EQ(max_from_to(net, {1, 0}).units(), 0);
}

TEST(MaxFromTo, TriangleUsesBothPaths) {
  const FlowNetwork net(fixtures::triangle());
  EXPECT_EQ(max_from_to(net, {1, 1}).units(), 3);
}

TEST(MaxFromTo, MatchesIndependentMaxFlow) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const FlowNetwork net = random_small_network(rng);
    const auto table = max_from_to_table(net);
    const std::size_t p = net.inputs().size(), q = net.outputs().size();
    for (Mask a = 0; a < (Mask{1} << p); ++a) {
      for (Mask b = 0; b < (Mask{1} << q); ++b) {
        ASSERT_EQ(table[a | (b << p)].units(), testing::brute_max_from_to(net, a, b)) << "trial " << trial;
      }
    }
  }
}

TEST(MaxFromToAft, SingleVertexComponent) {
  // v2 of the chain on its own: input half of e (cap 3), output b (cap 4).
  const FlowNetwork net(fixtures::chain());
  const Component v2 = basis_component(net, *net.find_vertex("v2"));
  const ComponentNetwork sub = component_network(net, v2);
  const AftQuery query{{sub.inputs_mask(1), sub.outputs_mask(1)}, {0, sub.outputs_mask(1)}};
  EXPECT_EQ(max_from_to_aft(sub.net, query).units(), 3);
  EXPECT_EQ(max_from_to_aft_two_phase(sub.net, query).units(), 3);
}

TEST(MaxFromToAft, EmptyFirstPairIsZero) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const FlowNetwork net = random_small_network(rng);
    const Mask all_in = (Mask{1} << net.inputs().size()) - 1;
    const Mask all_out = (Mask{1} << net.outputs().size()) - 1;
    const AftQuery query{{0, all_out}, {all_in, all_out}};
    EXPECT_EQ(max_from_to_aft(net, query).units(), 0);
  }
}

TEST(MaxFromToAft, BackEdgeAddsNothing) {
  // N_cyc after splicing e: the back edge e' dangles as an extra input and
  // output of the merged component.
  const FlowNetwork net(fixtures::two_cycle());
  const EdgeIndex e = *net.find_edge("e");
  const Component merged =
      splice_case1(basis_component(net, *net.find_vertex("v1")), basis_component(net, *net.find_vertex("v2")), e);
  const ComponentNetwork sub = component_network(net, merged);
  Mask a = 0, back_in = 0, b = 0;
  for (std::size_t i = 0; i < merged.inputs.size(); ++i) {
    if (net.edge(merged.inputs[i]).id == "a") a |= Mask{1} << i;
    if (net.edge(merged.inputs[i]).id == "e'") back_in |= Mask{1} << i;
  }
  for (std::size_t j = 0; j < merged.outputs.size(); ++j)
    if (net.edge(merged.outputs[j]).id == "b") b |= Mask{1} << j;
  const AftQuery query{{sub.inputs_mask(back_in), sub.outputs_mask(b)}, {sub.inputs_mask(a), sub.outputs_mask(b)}};
  EXPECT_EQ(max_from_to_aft(sub.net, query).units(), 0);
  EXPECT_EQ(max_from_to_aft_two_phase(sub.net, query).units(), 0);
}

TEST(MaxFromToAft, DifferenceMatchesTwoPhase) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const FlowNetwork net = random_small_network(rng, {.max_vertices = 6, .max_io = 6});
    const std::size_t p = net.inputs().size(), q = net.outputs().size();
    for (Mask a1 = 0; a1 < (Mask{1} << p); ++a1) {
      for (Mask a2 = 0; a2 < (Mask{1} << p); ++a2) {
        if (a1 & a2) continue;
        for (Mask b = 0; b < (Mask{1} << q); ++b) {
          const AftQuery query{{a1, b}, {a2, b}};
          const auto diff = max_from_to_aft(net, query).units();
          EXPECT_GE(diff, 0);
          EXPECT_EQ(diff, max_from_to_aft_two_phase(net, query).units());
        }
      }
    }
    for (Mask b1 = 0; b1 < (Mask{1} << q); ++b1) {
      for (Mask b2 = 0; b2 < (Mask{1} << q); ++b2) {
        if (b1 & b2) continue;
        for (Mask a = 0; a < (Mask{1} << p); ++a) {
          const AftQuery query{{a, b1}, {a, b2}};
          const auto diff = max_from_to_aft(net, query).units();
          EXPECT_GE(diff, 0);
          EXPECT_EQ(diff, max_from_to_aft_two_phase(net, query).units());
        }
      }
    }
  }
}

TEST(MaxFromToAft, RejectsIllegalShape) {
  const FlowNetwork net(fixtures::chain());
  EXPECT_THROW(max_from_to_aft(net, AftQuery{{1, 1}, {1, 1}}), Error);
}

TEST(PrincipalTyping, ChainEntries) {
  const FlowNetwork net(fixtures::chain());
  const Typing tau = principal_typing_oracle(net);
  ASSERT_EQ(tau.entries.size(), 4u);
  EXPECT_EQ(tau.at(1, 0), (Interval{Rational(0), Rational(3)}));
  EXPECT_EQ(tau.at(1, 1), (Interval{Rational(0), Rational(0)}));
  EXPECT_EQ(tau.at(0, 1), (Interval{Rational(-3), Rational(0)}));
  EXPECT_EQ(tau.at(0, 0), (Interval{Rational(0), Rational(0)}));
}

TEST(PrincipalTyping, RefusesTooManyIoEdges) {
  NetworkSpec spec{"wide", {"v"}, {}};
  for (int i = 0; i < 5; ++i) spec.edges.push_back({"in" + std::to_string(i), std::nullopt, "v", Rational(1)});
  const FlowNetwork net(spec);
  EXPECT_THROW(principal_typing_oracle(net, 4), Error);
  EXPECT_NO_THROW(principal_typing_oracle(net, 5));
}

TEST(ExtendToFeasible, Chain) {
  const FlowNetwork net(fixtures::chain());
  const auto f = extend_to_feasible(net, IOAssignment{{Capacity(2)}, {Capacity(2)}});
  ASSERT_TRUE(f.has_value());
  for (EdgeIndex e = 0; e < net.edge_count(); ++e) EXPECT_EQ((*f)[e].units(), units(net, 2));
  EXPECT_FALSE(extend_to_feasible(net, IOAssignment{{Capacity(4)}, {Capacity(4)}}).has_value());
  const auto zero = extend_to_feasible(net, IOAssignment{{Capacity(0)}, {Capacity(0)}});
  ASSERT_TRUE(zero.has_value());
  EXPECT_EQ(*zero, Flow::zero(net));
}

TEST(ExtendToFeasible, RandomFlowsRestrictAndExtend) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 80; ++trial) {
    const FlowNetwork net = random_small_network(rng);
    const Flow f = random_feasible_flow(net, rng);
    ASSERT_TRUE(is_feasible(net, f));
    const auto g = extend_to_feasible(net, io_restriction(net, f));
    ASSERT_TRUE(g.has_value());
    EXPECT_TRUE(is_feasible(net, *g));
    EXPECT_EQ(io_restriction(net, *g), io_restriction(net, f));
  }
}

TEST(CheckPrincipal, OracleTypingIsPrincipal) {
  const FlowNetwork net(fixtures::chain());
  const auto report = check_principal(net, principal_typing_oracle(net));
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.flows_checked, 200u);
}

TEST(CheckPrincipal, TightenedEntryLosesCompleteness) {
  const FlowNetwork net(fixtures::chain());
  Typing tau = principal_typing_oracle(net);
  tau.at(1, 0) = Interval{Rational(0), Rational(2)};
  const auto report = check_principal(net, tau);
  EXPECT_FALSE(report.completeness_counterexamples.empty());
  EXPECT_TRUE(report.soundness_counterexamples.empty());
}

TEST(CheckPrincipal, LoosenedEntriesLoseSoundness) {
  // Widening ({a},∅) alone admits no new assignment, because ({a},{b})
  // still forces g(a) = g(b) and (∅,{b}) caps g(b) at 3. Both sides have to
  // move before an unreachable assignment such as a = b = 4 appears.
  const FlowNetwork net(fixtures::chain());
  Typing tau = principal_typing_oracle(net);
  tau.at(1, 0) = Interval{Rational(0), Rational(4)};
  EXPECT_TRUE(check_principal(net, tau).soundness_counterexamples.empty());
  tau.at(0, 1) = Interval{Rational(-4), Rational(0)};
  const auto report = check_principal(net, tau);
  EXPECT_TRUE(report.completeness_counterexamples.empty());
  EXPECT_FALSE(report.soundness_counterexamples.empty());
}

TEST(CheckPrincipal, RandomNetworks) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const FlowNetwork net = random_small_network(rng, {.max_io = 6});
    const auto report = check_principal(net, principal_typing_oracle(net), {.samples = 50, .seed = 1});
    EXPECT_TRUE(report.ok()) << trial;
  }
}

}  // namespace
}  // namespace flowtype
