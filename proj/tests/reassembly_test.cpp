#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "flowtype/generators.hpp"
#include "flowtype/oracle.hpp"
#include "flowtype/reassembly.hpp"
#include "flowtype/trees.hpp"

namespace flowtype {
namespace {

VertexIndex vertex(const FlowNetwork& net, const char* id) { return *net.find_vertex(id); }
EdgeIndex edge(const FlowNetwork& net, const char* id) { return *net.find_edge(id); }

ReassemblingTree pair_tree(const FlowNetwork& net, const char* x, const char* y) {
  ReassemblingTree t;
  t.add_merge(t.add_leaf(vertex(net, x)), t.add_leaf(vertex(net, y)));
  return t;
}

/// Random tree whose components stay small enough to tabulate.
ReassemblingTree bounded_random_tree(const FlowNetwork& net, std::mt19937_64& rng) {
  while (true) {
    ReassemblingTree t = random_tree(net, rng);
    if (predicted_delta(net, t) <= 20) return t;
  }
}

TEST(Tree, ValidateRejectsBrokenTrees) {
  const FlowNetwork net(fixtures::triangle());
  ReassemblingTree missing;
  missing.add_merge(missing.add_leaf(0), missing.add_leaf(1));
  EXPECT_THROW(missing.validate(net), Error);

  ReassemblingTree twice;
  const auto a = twice.add_merge(twice.add_leaf(0), twice.add_leaf(1));
  twice.add_merge(a, twice.add_merge(twice.add_leaf(2), twice.add_leaf(0)));
  EXPECT_THROW(twice.validate(net), Error);

  const std::vector<VertexIndex> order{2, 0, 1};
  EXPECT_NO_THROW(ReassemblingTree::left_comb(order).validate(net));
}

TEST(SpliceSequence, Chain) {
  const FlowNetwork net(fixtures::chain());
  const auto seq = tree_to_splice_sequence(net, pair_tree(net, "v1", "v2"));
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_EQ(seq[0].kind, SpliceKind::kCase1);
  EXPECT_EQ(seq[0].edge, edge(net, "e"));
}

TEST(SpliceSequence, TwoCycleEndsWithCase2) {
  const FlowNetwork net(fixtures::two_cycle());
  const auto seq = tree_to_splice_sequence(net, pair_tree(net, "v1", "v2"));
  ASSERT_EQ(seq.size(), 2u);
  EXPECT_EQ(seq[0].kind, SpliceKind::kCase1);
  EXPECT_EQ(seq[0].edge, edge(net, "e"));
  EXPECT_EQ(seq[1].kind, SpliceKind::kCase2);
  EXPECT_EQ(seq[1].edge, edge(net, "e'"));
}

TEST(SpliceSequence, TriangleOneCase1PerMerge) {
  const FlowNetwork net(fixtures::triangle());
  const std::vector<VertexIndex> order{vertex(net, "v1"), vertex(net, "v2"), vertex(net, "v3")};
  const auto seq = tree_to_splice_sequence(net, ReassemblingTree::left_comb(order));
  ASSERT_EQ(seq.size(), 3u);
  EXPECT_EQ(seq[0].kind, SpliceKind::kCase1);
  EXPECT_EQ(seq[0].edge, edge(net, "e12"));
  EXPECT_EQ(seq[1].kind, SpliceKind::kCase1);
  EXPECT_EQ(seq[2].kind, SpliceKind::kCase2);
}

TEST(SpliceSequence, DisconnectedPartsUseUnion) {
  const FlowNetwork net(NetworkSpec{"apart",
                                    {"u", "v"},
                                    {{"a", std::nullopt, "u", Rational(1)}, {"b", "v", std::nullopt, Rational(1)}}});
  const auto seq = tree_to_splice_sequence(net, pair_tree(net, "u", "v"));
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_EQ(seq[0].kind, SpliceKind::kUnion);
}

TEST(Basis, ChainFirstVertex) {
  const FlowNetwork net(fixtures::chain());
  const Component c = basis_component(net, vertex(net, "v1"));
  ASSERT_EQ(c.inputs.size(), 1u);
  ASSERT_EQ(c.outputs.size(), 1u);
  EXPECT_EQ(c.at(1, 1).units(), 3);
  EXPECT_EQ(c.at(0, 1).units(), 0);
  EXPECT_EQ(c.at(0, 0).units(), 0);
}

TEST(Basis, MinOfSideSums) {
  const FlowNetwork net(NetworkSpec{"join",
                                    {"v"},
                                    {{"a1", std::nullopt, "v", Rational(2)},
                                     {"a2", std::nullopt, "v", Rational(3)},
                                     {"b", "v", std::nullopt, Rational(4)}}});
  const Component c = basis_component(net, 0);
  EXPECT_EQ(c.at(3, 1).units(), 4);
  EXPECT_EQ(c.at(1, 1).units(), 2);
  EXPECT_EQ(c.at(2, 1).units(), 3);
  EXPECT_EQ(c.at(3, 0).units(), 0);
}

TEST(Splice, ChainCase1) {
  const FlowNetwork net(fixtures::chain());
  const Component k = splice_case1(basis_component(net, 0), basis_component(net, 1), edge(net, "e"));
  EXPECT_EQ(k.at(1, 1).units(), 3);
  EXPECT_EQ(k.at(0, 1).units(), 0);
  // Either argument order is accepted.
  const Component swapped = splice_case1(basis_component(net, 1), basis_component(net, 0), edge(net, "e"));
  EXPECT_EQ(swapped.table, k.table);
}

TEST(Splice, TriangleFirstSpliceMatchesOracle) {
  const FlowNetwork net(fixtures::triangle());
  const Component k =
      splice_case1(basis_component(net, vertex(net, "v1")), basis_component(net, vertex(net, "v2")), edge(net, "e12"));
  const ComponentNetwork sub = component_network(net, k);
  for (Mask a = 0; a < (Mask{1} << k.inputs.size()); ++a)
    for (Mask b = 0; b < (Mask{1} << k.outputs.size()); ++b)
      EXPECT_EQ(k.at(a, b).units(), testing::brute_max_from_to(sub.net, sub.inputs_mask(a), sub.outputs_mask(b)));
}

TEST(Splice, TwoCycleCase2) {
  const FlowNetwork net(fixtures::two_cycle());
  const Component k = splice_case1(basis_component(net, 0), basis_component(net, 1), edge(net, "e"));
  const Component done = splice_case2(k, edge(net, "e'"));
  ASSERT_EQ(done.inputs.size(), 1u);
  ASSERT_EQ(done.outputs.size(), 1u);
  EXPECT_EQ(done.at(1, 1).units(), 3);
  EXPECT_EQ(done.at(0, 0).units(), 0);
}

TEST(Splice, RejectsWrongEdges) {
  const FlowNetwork net(fixtures::two_cycle());
  const Component v1 = basis_component(net, 0);
  EXPECT_THROW(splice_case2(v1, edge(net, "e")), Error);
  EXPECT_THROW(splice_case1(v1, v1, edge(net, "e")), Error);
}

TEST(Engine, ChainFinalTable) {
  const FlowNetwork net(fixtures::chain());
  const auto result = run_reassembling(net, pair_tree(net, "v1", "v2"));
  ASSERT_EQ(result.full.table.size(), 4u);
  EXPECT_EQ(result.full.at(0, 0).units(), 0);
  EXPECT_EQ(result.full.at(1, 0).units(), 0);
  EXPECT_EQ(result.full.at(0, 1).units(), 0);
  EXPECT_EQ(result.full.at(1, 1).units(), 3);
  EXPECT_EQ(result.stats.splices, 1u);
}

TEST(Engine, IsolatedVertex) {
  const FlowNetwork net(NetworkSpec{"single",
                                    {"v"},
                                    {{"a", std::nullopt, "v", Rational(1)}, {"b", "v", std::nullopt, Rational(1)}}});
  ReassemblingTree t;
  t.add_leaf(0);
  const auto result = run_reassembling(net, t);
  EXPECT_EQ(result.full.at(1, 1).units(), 1);
  EXPECT_EQ(result.stats.splices, 0u);
}

TEST(Engine, TriangleMatchesOracle) {
  const FlowNetwork net(fixtures::triangle());
  EXPECT_EQ(run_reassembling(net, bfs_comb_tree(net)).full.table, max_from_to_table(net));
}

TEST(Typing, ChainAndTwoCycle) {
  const FlowNetwork chain(fixtures::chain());
  const Typing tau = principal_typing_reassembled(chain, pair_tree(chain, "v1", "v2"));
  EXPECT_EQ(tau.at(1, 0), (Interval{Rational(0), Rational(3)}));
  EXPECT_EQ(tau.at(1, 1), (Interval{Rational(0), Rational(0)}));

  const FlowNetwork cyc(fixtures::two_cycle());
  EXPECT_EQ(principal_typing_reassembled(cyc, pair_tree(cyc, "v1", "v2")), principal_typing_oracle(cyc));
}

TEST(Typing, NoIoEdges) {
  const FlowNetwork net(NetworkSpec{"closed", {"u", "v"}, {{"e", "u", "v", Rational(2)}}});
  const Typing tau = principal_typing_reassembled(net, pair_tree(net, "u", "v"));
  ASSERT_EQ(tau.entries.size(), 1u);
  EXPECT_EQ(tau.entries[0], (Interval{Rational(0), Rational(0)}));
}

TEST(Alpha, SmallCases) {
  const FlowNetwork chain(fixtures::chain());
  EXPECT_EQ(alpha_measure(chain, pair_tree(chain, "v1", "v2")), 1u);

  const FlowNetwork single(NetworkSpec{"single", {"v"}, {{"a", std::nullopt, "v", Rational(1)}}});
  ReassemblingTree leaf;
  leaf.add_leaf(0);
  EXPECT_EQ(alpha_measure(single, leaf), 0u);
  EXPECT_EQ(boundary_measure(single, leaf), 1u);

  const FlowNetwork square(NetworkSpec{"square",
                                       {"p", "q", "r", "s"},
                                       {{"pq", "p", "q", Rational(1)},
                                        {"qr", "q", "r", Rational(1)},
                                        {"rs", "r", "s", Rational(1)},
                                        {"sp", "s", "p", Rational(1)}}});
  ReassemblingTree balanced;
  const auto left = balanced.add_merge(balanced.add_leaf(0), balanced.add_leaf(1));
  const auto right = balanced.add_merge(balanced.add_leaf(2), balanced.add_leaf(3));
  balanced.add_merge(left, right);
  EXPECT_EQ(alpha_measure(square, balanced), 2u);
}

// Every intermediate table equals max flow on the sub-network it stands for.
TEST(Property, IntermediateTablesMatchMaxFlow) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const FlowNetwork net = random_small_network(rng, {.max_vertices = 8, .max_io = 6, .max_internal = 12});
    const ReassemblingTree tree = bounded_random_tree(net, rng);
    EngineOptions options;
    options.observer = [&](const Component& c) {
      if (c.boundary() > 10) return;
      const ComponentNetwork sub = component_network(net, c);
      for (Mask a = 0; a < (Mask{1} << c.inputs.size()); ++a)
        for (Mask b = 0; b < (Mask{1} << c.outputs.size()); ++b)
          ASSERT_EQ(c.at(a, b).units(), testing::brute_max_from_to(sub.net, sub.inputs_mask(a), sub.outputs_mask(b)));
    };
    run_reassembling(net, tree, options);
  }
}

TEST(Property, OperationBoundsAndLazyDelta) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const FlowNetwork net = random_small_network(rng);
    const ReassemblingTree tree = bounded_random_tree(net, rng);
    const auto stats = run_reassembling(net, tree).stats;
    EXPECT_EQ(stats.union_ops.max_min_per_entry, 0u);
    EXPECT_LE(stats.union_ops.max_plus_minus_per_entry, 1u);
    EXPECT_LE(stats.splice_ops.max_plus_minus_per_entry, 4u);
    EXPECT_LE(stats.splice_ops.max_min_per_entry, 2u);
    const std::uint64_t bound = (net.edge_count() + net.vertex_count()) << stats.delta;
    EXPECT_LE(stats.entries, bound);
    const std::size_t alpha_io = boundary_measure(net, tree);
    if (stats.delta > 0) {
      EXPECT_LE(stats.delta, 2 * alpha_io - 1);
    }
  }
}

TEST(Property, TypingIndependentOfTree) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const FlowNetwork net = random_small_network(rng);
    const Typing expected = principal_typing_oracle(net);
    EXPECT_EQ(principal_typing_reassembled(net, bfs_comb_tree(net)), expected);
    EXPECT_EQ(principal_typing_reassembled(net, greedy_tree(net)), expected);
    EXPECT_EQ(principal_typing_reassembled(net, bounded_random_tree(net, rng)), expected);
  }
}

TEST(Property, PredictedDeltaMatchesEngine) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const FlowNetwork net = random_small_network(rng);
    const ReassemblingTree tree = bounded_random_tree(net, rng);
    EXPECT_EQ(predicted_delta(net, tree), run_reassembling(net, tree).stats.delta);
  }
}

TEST(Trees, RotationsNeverRaiseAlpha) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const FlowNetwork net = random_small_network(rng);
    const ReassemblingTree tree = random_tree(net, rng);
    const ReassemblingTree better = improve_tree(net, tree);
    better.validate(net);
    EXPECT_LE(alpha_measure(net, better), alpha_measure(net, tree));
  }
}

}  // namespace
}  // namespace flowtype
