#include <gtest/gtest.h>

#include "flowtype/generators.hpp"
#include "flowtype/io_json.hpp"
#include "flowtype/oracle.hpp"
#include "flowtype/trees.hpp"

namespace flowtype {
namespace {

TEST(Json, NetworkRoundTrip) {
  NetworkSpec spec = fixtures::triangle();
  spec.edges[1].cap = Rational(3, 2);
  const FlowNetwork net(spec);
  const Json j = network_to_json(net);
  const FlowNetwork back = network_from_json(j);
  EXPECT_EQ(dump_canonical(network_to_json(back)), dump_canonical(j));
  EXPECT_EQ(back.to_rational(back.edge(*back.find_edge("e12")).cap), Rational(3, 2));
}

TEST(Json, CapacityForms) {
  const Json j = Json::parse(R"({"vertices": ["v"], "edges": [
      {"id": "a", "tail": null, "head": "v", "cap": 4},
      {"id": "b", "tail": "v", "cap": "5/2"},
      {"id": "c", "head": "v", "cap": 3.0}]})");
  const NetworkSpec spec = network_spec_from_json(j);
  EXPECT_EQ(spec.edges[0].cap, Rational(4));
  EXPECT_EQ(spec.edges[1].cap, Rational(5, 2));
  EXPECT_FALSE(spec.edges[1].head.has_value());
  EXPECT_EQ(spec.edges[2].cap, Rational(3));

  const Json inexact = Json::parse(R"({"vertices": ["v"], "edges": [{"id": "a", "head": "v", "cap": 0.1}]})");
  EXPECT_THROW(network_spec_from_json(inexact), Error);
  EXPECT_THROW(network_spec_from_json(Json::parse(R"({"edges": []})")), Error);
}

TEST(Json, TypingIsSorted) {
  const FlowNetwork net(fixtures::chain());
  const Json j = typing_to_json(net, principal_typing_oracle(net));
  ASSERT_EQ(j.at("entries").size(), 4u);
  EXPECT_EQ(j.at("entries")[0].at("A").size() + j.at("entries")[0].at("B").size(), 0u);
  const Json& last = j.at("entries")[3];
  EXPECT_EQ(last.at("A"), Json::array({"a"}));
  EXPECT_EQ(last.at("B"), Json::array({"b"}));
  EXPECT_EQ(last.at("lo"), "0");
  // At equal size the empty input list comes first.
  EXPECT_EQ(j.at("entries")[1].at("B"), Json::array({"b"}));
  EXPECT_EQ(j.at("entries")[1].at("lo"), "-3");
  EXPECT_EQ(j.at("entries")[2].at("A"), Json::array({"a"}));
  EXPECT_EQ(j.at("entries")[2].at("hi"), "3");
}

TEST(Json, TreeRoundTrip) {
  const FlowNetwork net(fixtures::triangle());
  const ReassemblingTree tree = greedy_tree(net);
  const Json j = tree_to_json(net, tree);
  const ReassemblingTree back = tree_from_json(net, j);
  EXPECT_EQ(tree_to_json(net, back), j);
  EXPECT_THROW(tree_from_json(net, Json::parse(R"({"vertex": "v1"})")), Error);
}

TEST(Json, DeepCombRoundTrip) {
  const PlaneGraph pg = nested_cycles(2, 400);
  const ReassemblingTree comb = bfs_comb_tree(pg.net);
  const Json j = tree_to_json(pg.net, comb);
  EXPECT_EQ(alpha_measure(pg.net, tree_from_json(pg.net, j)), alpha_measure(pg.net, comb));
}

TEST(Json, PlaneGraphRoundTrip) {
  const PlaneGraph pg = prism_plane(3, true);
  const Json j = plane_graph_to_json(pg);
  ASSERT_TRUE(has_embedding(j));
  const FlowNetwork net = network_from_json(j);
  const PlaneGraph back = plane_graph_from_json(net, j);
  EXPECT_EQ(dump_canonical(plane_graph_to_json(back)), dump_canonical(j));
  EXPECT_EQ(peel_edge_layers(back).k(), peel_edge_layers(pg).k());
}

TEST(Json, BadRotationRejected) {
  const PlaneGraph pg = triangle_plane();
  Json j = plane_graph_to_json(pg);
  j["rotation"]["v1"] = Json::array({"e12"});
  EXPECT_THROW(plane_graph_from_json(pg.net, j), Error);
}

}  // namespace
}  // namespace flowtype
