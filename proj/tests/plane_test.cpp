#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "flowtype/embed.hpp"
#include "flowtype/generators.hpp"
#include "flowtype/layered.hpp"
#include "flowtype/oracle.hpp"
#include "flowtype/plane.hpp"
#include "flowtype/regularize.hpp"

namespace flowtype {
namespace {

NetworkSpec complete_graph(std::size_t n) {
  NetworkSpec spec{"K" + std::to_string(n), {}, {}};
  for (std::size_t v = 0; v < n; ++v) spec.vertices.push_back("k" + std::to_string(v));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      spec.edges.push_back({"k" + std::to_string(u) + std::to_string(v), spec.vertices[u], spec.vertices[v], Rational(1)});
  return spec;
}

PlaneGraph triangle_with_stubs() {
  PlaneBuilder b("triangle-stubs");
  b.vertex("v1", {0, 0});
  b.vertex("v2", {2, 0});
  b.vertex("v3", {1, 1.7});
  b.edge("e12", "v1", "v2", Rational(2));
  b.edge("e23", "v2", "v3", Rational(2));
  b.edge("e13", "v1", "v3", Rational(1));
  b.input("a", "v1", Rational(3), -3 * std::numbers::pi / 4);
  b.input("c", "v2", Rational(2), -std::numbers::pi / 4);
  b.output("b", "v3", Rational(4), std::numbers::pi / 2);
  return b.build();
}

TEST(Faces, EulerCounts) {
  EXPECT_EQ(derive_faces(triangle_plane()).faces.size(), 2u);
  EXPECT_EQ(derive_faces(cube_plane()).faces.size(), 6u);
  EXPECT_EQ(derive_faces(prism_plane()).faces.size(), 5u);

  PlaneBuilder b("bar");
  b.vertex("u", {0, 0});
  b.vertex("v", {1, 0});
  b.edge("e", "u", "v", Rational(1));
  EXPECT_EQ(derive_faces(b.build()).faces.size(), 1u);
}

TEST(Faces, EveryDartOnceAndOneOuterFacePerPiece) {
  for (const PlaneGraph& pg : {cube_plane(), nested_cycles(3, 60), path_of_rings(2, 40)}) {
    const FaceSet fs = derive_faces(pg);
    std::size_t darts = 0, outer = 0;
    for (const Face& f : fs.faces) {
      darts += f.darts.size();
      outer += f.outer ? 1 : 0;
    }
    EXPECT_EQ(darts, 2 * pg.net.internal().size());
    EXPECT_EQ(outer, fs.pieces);
  }
}

TEST(Rotation, RejectsInconsistentRotation) {
  PlaneGraph pg = triangle_plane();
  pg.rotation[0].pop_back();
  EXPECT_THROW(validate_rotation(pg), Error);
}

TEST(Peel, Fixtures) {
  const auto tri = peel_edge_layers(triangle_plane());
  EXPECT_EQ(tri.k(), 1u);
  EXPECT_EQ(tri.layers[0].size(), 3u);

  const PlaneGraph prism = prism_plane();
  const auto layers = peel_edge_layers(prism);
  ASSERT_EQ(layers.k(), 2u);
  for (EdgeIndex e : layers.layers[0]) EXPECT_EQ(prism.net.edge(e).id.substr(0, 2), "oc");
  EXPECT_EQ(layers.layers[1].size(), 6u);

  EXPECT_EQ(peel_edge_layers(cube_plane()).k(), 2u);
}

TEST(Peel, NestedCyclesGiveK) {
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t n : {24, 60, 120}) EXPECT_EQ(peel_edge_layers(nested_cycles(k, n)).k(), k) << k << " " << n;
}

TEST(Peel, LayersPartitionInternalEdges) {
  for (const PlaneGraph& pg : {cube_plane(), nested_cycles(3, 60), random_planar(40, 3)}) {
    const auto layers = peel_edge_layers(pg);
    std::vector<int> seen(pg.net.edge_count(), 0);
    for (const auto& layer : layers.layers)
      for (EdgeIndex e : layer) ++seen[e];
    for (EdgeIndex e = 0; e < pg.net.edge_count(); ++e) EXPECT_EQ(seen[e], pg.net.edge(e).is_internal() ? 1 : 0);
  }
}

TEST(PeelVertices, Fixtures) {
  EXPECT_EQ(peel_vertex_layers(triangle_plane()), 1u);
  EXPECT_EQ(peel_vertex_layers(prism_plane()), 2u);
  EXPECT_EQ(peel_vertex_layers(cube_plane()), 2u);
}

TEST(Embed, CompleteGraphs) {
  const auto k4 = embed_small(FlowNetwork(complete_graph(4)));
  ASSERT_TRUE(k4.has_value());
  EXPECT_EQ(peel_edge_layers(*k4).k(), 2u);
  EXPECT_FALSE(embed_small(FlowNetwork(complete_graph(5))).has_value());
}

TEST(Embed, TreeHasOneLayer) {
  const FlowNetwork tree(NetworkSpec{"tree",
                                     {"r", "x", "y", "z"},
                                     {{"rx", "r", "x", Rational(1)},
                                      {"ry", "r", "y", Rational(1)},
                                      {"yz", "y", "z", Rational(1)},
                                      {"in", std::nullopt, "r", Rational(1)}}});
  const auto pg = embed_small(tree);
  ASSERT_TRUE(pg.has_value());
  EXPECT_EQ(peel_edge_layers(*pg).k(), 1u);
}

TEST(Embed, RespectsVertexLimit) { EXPECT_THROW(embed_small(FlowNetwork(complete_graph(4)), 3), Error); }

TEST(Regularize, ThreeRegularInputIsKept) {
  const PlaneGraph pg = triangle_with_stubs();
  ASSERT_TRUE(is_three_regular(pg.net));
  const auto out = three_regularize(pg);
  EXPECT_EQ(out.graph.net.vertex_count(), 3u);
  EXPECT_EQ(out.graph.net.edge_count(), 6u);
  EXPECT_EQ(principal_typing_oracle(out.graph.net), principal_typing_oracle(pg.net));
}

TEST(Regularize, DegreeFourVertex) {
  const FlowNetwork net(NetworkSpec{"hub",
                                    {"v"},
                                    {{"a1", std::nullopt, "v", Rational(1)},
                                     {"a2", std::nullopt, "v", Rational(2)},
                                     {"b1", "v", std::nullopt, Rational(1)},
                                     {"b2", "v", std::nullopt, Rational(2)}}});
  const auto out = three_regularize(net);
  EXPECT_TRUE(is_three_regular(out.graph.net));
  EXPECT_FALSE(has_two_edge_cycle(out.graph.net));
  EXPECT_EQ(principal_typing_oracle(out.graph.net), principal_typing_oracle(net));
}

TEST(Regularize, TwoCycleRemoved) {
  const FlowNetwork net(fixtures::two_cycle());
  const auto out = three_regularize(net);
  EXPECT_TRUE(is_three_regular(out.graph.net));
  EXPECT_FALSE(has_two_edge_cycle(out.graph.net));
  EXPECT_EQ(principal_typing_oracle(out.graph.net), principal_typing_oracle(net));
}

TEST(Regularize, DegreeOneVertexGetsOneGadget) {
  const FlowNetwork net(NetworkSpec{"leaf", {"v"}, {{"a", std::nullopt, "v", Rational(3)}}});
  const auto out = three_regularize(net);
  EXPECT_TRUE(is_three_regular(out.graph.net));
  EXPECT_EQ(out.graph.net.vertex_count(), 5u);
  EXPECT_EQ(out.graph.net.internal().size(), 7u);
  validate_rotation(out.graph);
  EXPECT_EQ(derive_faces(out.graph).faces.size(), 4u);
  EXPECT_EQ(principal_typing_oracle(out.graph.net), principal_typing_oracle(net));
}

TEST(Regularize, RandomNetworksKeepTheirTyping) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const FlowNetwork net = random_small_network(rng, {.max_io = 6});
    const auto out = three_regularize(net);
    ASSERT_TRUE(is_three_regular(out.graph.net)) << trial;
    ASSERT_FALSE(has_two_edge_cycle(out.graph.net)) << trial;
    EXPECT_EQ(principal_typing_oracle(out.graph.net), principal_typing_oracle(net)) << trial;
    validate_rotation(out.graph);
  }
}

TEST(Regularize, PlaneFamiliesKeepTheirLayerCount) {
  for (const PlaneGraph& pg : {prism_plane(3, true), cube_plane(), nested_cycles(2, 60), nested_cycles(3, 60),
                               path_of_rings(2, 40), path_of_rings(3, 100)}) {
    const auto out = three_regularize(pg);
    EXPECT_TRUE(is_three_regular(out.graph.net)) << pg.net.name();
    EXPECT_FALSE(has_two_edge_cycle(out.graph.net)) << pg.net.name();
    EXPECT_EQ(peel_edge_layers(out.graph).k(), peel_edge_layers(pg).k()) << pg.net.name();
  }
}

TEST(Regularize, RejectsUnusableInput) {
  // An isolated vertex has nothing to attach a gadget to.
  const FlowNetwork net(NetworkSpec{"lonely", {"v", "w"}, {{"a", std::nullopt, "w", Rational(1)}}});
  const auto out = three_regularize(net);
  EXPECT_FALSE(out.warnings.empty());
}

TEST(Layered, Targets) {
  const auto stubs = layered_reassembling(triangle_with_stubs());
  EXPECT_EQ(stubs.k, 1u);
  EXPECT_LE(stubs.alpha, 2u);

  const auto prism = layered_reassembling(prism_plane());
  EXPECT_EQ(prism.k, 2u);
  EXPECT_LE(prism.alpha, 4u);

  const auto rings = layered_reassembling(three_regularize(path_of_rings(2, 40)).graph);
  EXPECT_EQ(rings.k, 2u);
  EXPECT_LE(rings.alpha, 4u);
  EXPECT_TRUE(rings.warnings.empty());
}

TEST(Layered, TreeIsValid) {
  const PlaneGraph pg = three_regularize(nested_cycles(3, 90)).graph;
  const auto result = layered_reassembling(pg);
  result.tree.validate(pg.net);
  EXPECT_EQ(alpha_measure(pg.net, result.tree), result.alpha);
}

TEST(Layered, RequiresThreeRegular) { EXPECT_THROW(layered_reassembling(nested_cycles(2, 40)), Error); }

TEST(Property, VertexAndEdgeLayersAgree) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const PlaneGraph pg = three_regularize(random_planar(20 + seed % 30, seed)).graph;
    const std::size_t kv = peel_vertex_layers(pg), ke = peel_edge_layers(pg).k();
    EXPECT_LE(kv, ke) << seed;
    EXPECT_LE(ke, kv + 1) << seed;
  }
}

}  // namespace
}  // namespace flowtype
