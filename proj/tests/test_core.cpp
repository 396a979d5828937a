#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "sgd/core.hpp"

namespace sgd {
namespace {

using fixtures::c3_allneg;
using fixtures::graph;

TEST(SignedGraph, RejectsLoopsAndDuplicates) {
  EXPECT_THROW(graph(2, {{1, 1, '+'}}), GraphError);
  EXPECT_THROW(graph(3, {{1, 2, '+'}, {2, 1, '-'}}), GraphError);
  EXPECT_THROW(graph(2, {{1, 3, '+'}}), GraphError);
}

TEST(SignedGraph, AdjacencyIsSymmetric) {
  const SignedGraph g = c3_allneg();
  for (const Edge& e : g.edges()) {
    EXPECT_EQ(g.sign(e.u, e.v), e.sign);
    EXPECT_EQ(g.sign(e.v, e.u), e.sign);
  }
  EXPECT_EQ(g.neighbors(0).size(), 2u);
}

TEST(WeightedSignedGraph, WeightsMustBePositive) {
  const SignedGraph g = graph(2, {{1, 2, '+'}});
  EXPECT_THROW(WeightedSignedGraph(g, {0.0}), GraphError);
  EXPECT_THROW(WeightedSignedGraph(g, {-1.0}), GraphError);
  EXPECT_THROW(WeightedSignedGraph(g, {1.0, 2.0}), GraphError);
  EXPECT_TRUE(WeightedSignedGraph(g, {3.0}).integral());
  EXPECT_FALSE(WeightedSignedGraph(g, {2.5}).integral());
}

TEST(ParseEdgeList, AllNegativeTriangle) {
  const auto g = parse_edge_list("3\n1 2 -\n2 3 -\n1 3 -");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.base(), c3_allneg());
  EXPECT_TRUE(g.integral());
}

TEST(ParseEdgeList, WeightAndComments) {
  const auto g = parse_edge_list("# a comment\n\n2\n# another\n1 2 + 2.5\n");
  ASSERT_EQ(g.size(), 1);
  EXPECT_EQ(g.base().edge(0).sign, Sign::positive);
  EXPECT_DOUBLE_EQ(g.weight(0), 2.5);
  EXPECT_FALSE(g.integral());
}

TEST(ParseEdgeList, NumericSignTokens) {
  const auto g = parse_edge_list("3\n1 2 1\n2 3 -1\n");
  EXPECT_EQ(g.base().edge(0).sign, Sign::positive);
  EXPECT_EQ(g.base().edge(1).sign, Sign::negative);
}

void expect_parse_error(const char* text, std::size_t line, const std::string& needle) {
  try {
    parse_edge_list(text);
    FAIL() << "expected ParseError for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

TEST(ParseEdgeList, ErrorsCarryLineNumbers) {
  expect_parse_error("2\n1 1 +", 2, "loop");
  expect_parse_error("2\n1 2 x", 2, "sign token");
  expect_parse_error("2\n1 2 +2", 2, "sign token");
  expect_parse_error("2\n1 2 + 0", 2, "nonpositive weight");
  expect_parse_error("2\n1 2 + -3", 2, "nonpositive weight");
  expect_parse_error("3\n1 2 +\n# c\n2 1 -", 4, "duplicate edge");
  expect_parse_error("2\n1 2", 2, "malformed");
  expect_parse_error("2\n1 2 + 1 7", 2, "malformed");
  expect_parse_error("2\n1 5 +", 2, "outside");
  expect_parse_error("two\n", 1, "vertex count");
  expect_parse_error("0\n", 1, "positive");
  expect_parse_error("# only comments\n", 0, "missing vertex count");
}

TEST(SerializeEdgeList, RoundTripsExactly) {
  const auto g = parse_edge_list("4\n1 2 + 2.5\n2 3 -\n3 4 - 3\n4 1 + 0.125\n");
  const std::string text = serialize_edge_list(g);
  EXPECT_EQ(text, "4\n1 2 + 2.5\n2 3 -\n3 4 - 3\n4 1 + 0.125\n");
  EXPECT_EQ(parse_edge_list(text), g);
  EXPECT_EQ(serialize_edge_list(parse_edge_list(text)), text);
}

TEST(Switch, AllNegativeTriangle) {
  const SignedGraph s = switch_signs(c3_allneg(), {{Sign::negative, Sign::positive, Sign::positive}});
  EXPECT_EQ(s.sign(0, 1), Sign::positive);
  EXPECT_EQ(s.sign(0, 2), Sign::positive);
  EXPECT_EQ(s.sign(1, 2), Sign::negative);
}

TEST(Switch, IdentityAndInvolution) {
  const SignedGraph g = generate(GraphKind::random, 7, NegativeProbability{0.4}, 11);
  EXPECT_EQ(switch_signs(g, SwitchingFunction::identity(7)), g);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto z = random_switching(7, seed);
    EXPECT_EQ(switch_signs(switch_signs(g, z), z), g);
  }
}

TEST(Switch, LengthMismatch) {
  EXPECT_THROW(switch_signs(c3_allneg(), SwitchingFunction::identity(2)), InvalidArgument);
}

TEST(PathSign, Examples) {
  const SignedGraph g = c3_allneg();
  const std::vector<int> w1{0, 1, 2}, w2{0, 1, 2, 0};
  EXPECT_EQ(path_sign(g, w1), Sign::positive);
  EXPECT_EQ(path_sign(g, w2), Sign::negative);
  const SignedGraph k2 = graph(2, {{1, 2, '+'}});
  const std::vector<int> w3{0, 1};
  EXPECT_EQ(path_sign(k2, w3), Sign::positive);
  const SignedGraph p = fixtures::p3('+', '+');
  const std::vector<int> bad{0, 2};
  EXPECT_THROW(path_sign(p, bad), InvalidArgument);
}

TEST(PathSign, MultiplicativeUnderConcatenation) {
  const SignedGraph g = generate(GraphKind::complete, 6, NegativeProbability{0.5}, 3);
  const std::vector<int> a{0, 3, 1, 5}, b{5, 2, 4}, ab{0, 3, 1, 5, 2, 4};
  EXPECT_EQ(path_sign(g, ab), path_sign(g, a) * path_sign(g, b));
}

TEST(PathSign, SwitchingPreservesCycleSigns) {
  const SignedGraph g = generate(GraphKind::complete, 6, NegativeProbability{0.5}, 9);
  const std::vector<std::vector<int>> cycles{{0, 1, 2, 0}, {0, 3, 5, 1, 0}, {1, 2, 3, 4, 5, 1}};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SignedGraph s = switch_signs(g, random_switching(6, seed));
    for (const auto& c : cycles) EXPECT_EQ(path_sign(s, c), path_sign(g, c));
  }
}

TEST(Generate, Families) {
  const SignedGraph c5 = generate(GraphKind::cycle, 5, AllNegative{}, 0);
  EXPECT_EQ(c5.size(), 5);
  for (const Edge& e : c5.edges()) EXPECT_EQ(e.sign, Sign::negative);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(c5.neighbors(v).size(), 2u);

  const SignedGraph p3 = generate(GraphKind::path, 3, AllPositive{}, 0);
  EXPECT_EQ(p3, fixtures::p3('+', '+'));

  const SignedGraph k4 = generate(GraphKind::complete, 4, NegativeEdges{{{0, 3}}}, 0);
  EXPECT_EQ(k4.size(), 6);
  EXPECT_EQ(k4.sign(3, 0), Sign::negative);
  EXPECT_EQ(k4.sign(1, 2), Sign::positive);
}

TEST(Generate, RandomIsDeterministicAndConnected) {
  const SignedGraph a = generate(GraphKind::random, 6, NegativeProbability{0.5}, 7);
  const SignedGraph b = generate(GraphKind::random, 6, NegativeProbability{0.5}, 7);
  EXPECT_EQ(a, b);
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    EXPECT_TRUE(is_connected(generate(GraphKind::random, 8, NegativeProbability{0.3}, seed)));
}

TEST(Generate, Errors) {
  EXPECT_THROW(generate(GraphKind::cycle, 2, AllPositive{}, 0), InvalidArgument);
  EXPECT_THROW(generate(GraphKind::path, 0, AllPositive{}, 0), InvalidArgument);
  EXPECT_THROW(generate(GraphKind::random, 4, NegativeProbability{1.5}, 0), InvalidArgument);
  EXPECT_THROW(generate(GraphKind::path, 3, NegativeEdges{{{0, 2}}}, 0), InvalidArgument);
  GeneratorOptions sparse;
  sparse.edge_probability = 0.0;
  sparse.max_attempts = 5;
  EXPECT_THROW(generate(GraphKind::random, 4, AllPositive{}, 0, sparse), Error);
}

TEST(Components, Examples) {
  EXPECT_EQ(components(generate(GraphKind::cycle, 4, AllPositive{}, 0)).size(), 1u);
  const auto two = components(graph(4, {{1, 2, '+'}, {3, 4, '-'}}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(two[1], (std::vector<int>{2, 3}));
  const auto singles = components(SignedGraph(3, {}));
  EXPECT_EQ(singles.size(), 3u);
}

TEST(Orientation, CanonicalTailIsLowerIndex) {
  const SignedGraph g = graph(3, {{3, 1, '+'}, {2, 3, '-'}});
  const auto o = Orientation::canonical(g);
  EXPECT_EQ(o.arcs[0], (std::pair{0, 2}));
  EXPECT_EQ(o.arcs[1], (std::pair{1, 2}));
}

}  // namespace
}  // namespace sgd
