#include <gtest/gtest.h>

#include <random>

#include "flowtype/generators.hpp"
#include "flowtype/network.hpp"
#include "flowtype/oracle.hpp"
#include "flowtype/rational.hpp"

namespace flowtype {
namespace {

Flow constant_flow(const FlowNetwork& net, std::int64_t value) {
  Flow f = Flow::zero(net);
  for (auto& x : f.values) x = net.to_capacity(Rational(value));
  return f;
}

bool mentions(const std::vector<std::string>& problems, const std::string& needle) {
  for (const auto& p : problems)
    if (p.find(needle) != std::string::npos) return true;
  return false;
}

TEST(Rational, ParsesAndNormalizes) {
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-2"), Rational(-2));
  EXPECT_EQ(Rational(4, -6).str(), "-2/3");
  EXPECT_EQ(Rational(5).str(), "5");
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(Validate, ChainIsWellFormed) { EXPECT_TRUE(validate_network(fixtures::chain()).empty()); }

TEST(Validate, SelfLoop) {
  NetworkSpec spec = fixtures::chain();
  spec.edges.push_back({"loop", "v1", "v1", Rational(1)});
  EXPECT_TRUE(mentions(validate_network(spec), "self-loop"));
  EXPECT_THROW(FlowNetwork{spec}, Error);
}

TEST(Validate, FloatingEdge) {
  NetworkSpec spec = fixtures::chain();
  spec.edges.push_back({"x", std::nullopt, std::nullopt, Rational(1)});
  EXPECT_TRUE(mentions(validate_network(spec), "floating edge"));
}

TEST(Validate, NegativeCapacityAndUnknownVertex) {
  NetworkSpec spec = fixtures::chain();
  spec.edges.push_back({"x", "v1", "nowhere", Rational(-1)});
  const auto problems = validate_network(spec);
  EXPECT_TRUE(mentions(problems, "negative capacity"));
  EXPECT_TRUE(mentions(problems, "unknown head"));
}

TEST(Network, PartitionOfEdges) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const FlowNetwork net = random_small_network(rng);
    EXPECT_EQ(net.inputs().size() + net.outputs().size() + net.internal().size(), net.edge_count());
    std::vector<int> seen(net.edge_count(), 0);
    for (auto list : {net.inputs(), net.outputs(), net.internal()})
      for (EdgeIndex e : list) ++seen[e];
    for (int s : seen) EXPECT_EQ(s, 1);
  }
}

TEST(Network, FractionalCapacitiesShareOneScale) {
  NetworkSpec spec = fixtures::chain();
  spec.edges[0].cap = Rational(1, 2);
  spec.edges[1].cap = Rational(2, 3);
  const FlowNetwork net(spec);
  EXPECT_EQ(net.scale(), 6);
  EXPECT_EQ(net.edge(*net.find_edge("a")).cap.units(), 3);
  EXPECT_EQ(net.to_rational(net.edge(*net.find_edge("e")).cap), Rational(2, 3));
}

TEST(Feasibility, Chain) {
  const FlowNetwork net(fixtures::chain());
  EXPECT_TRUE(is_feasible(net, constant_flow(net, 3)));
  EXPECT_FALSE(is_feasible(net, constant_flow(net, 4)));
  EXPECT_TRUE(is_feasible(net, Flow::zero(net)));
  Flow broken = constant_flow(net, 2);
  broken[*net.find_edge("b")] = net.to_capacity(Rational(1));
  EXPECT_FALSE(is_feasible(net, broken));
}

TEST(FlowValue, SumsInputs) {
  const FlowNetwork chain(fixtures::chain());
  EXPECT_EQ(chain.to_rational(flow_value(chain, constant_flow(chain, 3))), Rational(3));
  EXPECT_EQ(flow_value(chain, Flow::zero(chain)).units(), 0);

  const FlowNetwork join(NetworkSpec{"join",
                                     {"v"},
                                     {{"a1", std::nullopt, "v", Rational(2)},
                                      {"a2", std::nullopt, "v", Rational(3)},
                                      {"b", "v", std::nullopt, Rational(5)}}});
  Flow f = Flow::zero(join);
  for (EdgeIndex e = 0; e < join.edge_count(); ++e) f[e] = join.edge(e).cap;
  EXPECT_EQ(flow_value(join, f).units(), 5);
}

TEST(AddFlows, Pointwise) {
  const FlowNetwork chain(fixtures::chain());
  EXPECT_EQ(add_flows(constant_flow(chain, 1), constant_flow(chain, 2)), constant_flow(chain, 3));
  EXPECT_EQ(add_flows(constant_flow(chain, 2), Flow::zero(chain)), constant_flow(chain, 2));

  const FlowNetwork diamond(fixtures::diamond());
  auto path = [&](const std::string& first, const std::string& second) {
    Flow f = Flow::zero(diamond);
    for (const char* id : {"a", "b"}) f[*diamond.find_edge(id)] = Capacity(1);
    f[*diamond.find_edge(first)] = Capacity(1);
    f[*diamond.find_edge(second)] = Capacity(1);
    return f;
  };
  const Flow sum = add_flows(path("sx", "xt"), path("sy", "yt"));
  EXPECT_TRUE(is_feasible(diamond, sum));
  EXPECT_EQ(flow_value(diamond, sum).units(), 2);
}

TEST(IoRestriction, Projection) {
  const FlowNetwork chain(fixtures::chain());
  const IOAssignment g = io_restriction(chain, constant_flow(chain, 3));
  EXPECT_EQ(g.inputs, std::vector<Capacity>{Capacity(3)});
  EXPECT_EQ(g.outputs, std::vector<Capacity>{Capacity(3)});

  const FlowNetwork closed(NetworkSpec{"closed", {"u", "v"}, {{"e", "u", "v", Rational(1)}}});
  const IOAssignment empty = io_restriction(closed, Flow::zero(closed));
  EXPECT_TRUE(empty.inputs.empty() && empty.outputs.empty());

  const FlowNetwork diamond(fixtures::diamond());
  const IOAssignment d = io_restriction(diamond, Flow::zero(diamond));
  EXPECT_EQ(d.inputs.size() + d.outputs.size(), 2u);
}

TEST(SatisfiesTyping, ChainBottleneck) {
  const FlowNetwork chain(fixtures::chain());
  const Typing tau = principal_typing_oracle(chain);
  EXPECT_TRUE(satisfies_typing(chain, IOAssignment{{Capacity(3)}, {Capacity(3)}}, tau));
  EXPECT_FALSE(satisfies_typing(chain, IOAssignment{{Capacity(4)}, {Capacity(4)}}, tau));

  Typing vacuous = tau;
  for (auto& entry : vacuous.entries) entry = Interval{Rational(-1000000), Rational(1000000)};
  EXPECT_TRUE(satisfies_typing(chain, IOAssignment{{Capacity(7)}, {Capacity(1)}}, vacuous));
}

}  // namespace
}  // namespace flowtype
