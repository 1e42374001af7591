#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "ultragraph/extension.hpp"
#include "ultragraph/metrics.hpp"
#include "ultragraph/oracle.hpp"

namespace ultragraph {
namespace {

using test::graph;
using test::matrix;
using test::triple;

// ---- subdominant / shortest path -------------------------------------------

TEST(Subdominant, Triangle) {
  auto rho = subdominant_matrix(test::triangle(1, 2, 3));
  EXPECT_EQ(rho.at("a", "b"), Weight(1));
  EXPECT_EQ(rho.at("b", "c"), Weight(2));
  EXPECT_EQ(rho.at("a", "c"), Weight(2));
  EXPECT_EQ(rho.at("a", "a"), Weight(0));
  EXPECT_TRUE(satisfies(rho.axiom_class(), AxiomClass::Pseudoultrametric));
}

TEST(Subdominant, SingleEdge) {
  EXPECT_EQ(subdominant_matrix(graph({"a", "b"}, {{"a", "b", 5}})).at("a", "b"), Weight(5));
}

TEST(Subdominant, LadderTruncation) {
  auto g = oracle::example31_harmonic(3);
  EXPECT_EQ(subdominant_matrix(g).at("u", "v"), Weight(1, 3));
  EXPECT_EQ(oracle::oracle_subdominant(g, g.id("u"), g.id("v")), Weight(1, 3));
}

TEST(Subdominant, SingleVertex) {
  auto rho = subdominant_matrix(graph({"a"}, {}));
  EXPECT_EQ(rho.size(), 1u);
  EXPECT_EQ(rho.axiom_class(), AxiomClass::Ultrametric);
}

TEST(Subdominant, DisconnectedNamesBothSides) {
  auto g = graph({"a", "b", "c"}, {{"a", "b", 1}});
  try {
    subdominant_matrix(g);
    FAIL();
  } catch (const DisconnectedError& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnected);
    EXPECT_EQ(e.first(), "a");
    EXPECT_EQ(e.second(), "c");
  }
  EXPECT_THROW(shortest_path_matrix(g), DisconnectedError);
}

TEST(ShortestPath, Examples) {
  auto d = shortest_path_matrix(test::triangle(1, 2, 3));
  EXPECT_EQ(d.at("a", "c"), Weight(3));
  EXPECT_EQ(d.at("a", "b"), Weight(1));
  EXPECT_EQ(shortest_path_matrix(graph({"a", "b"}, {{"a", "b", 5}})).at("a", "b"), Weight(5));

  auto zero = shortest_path_matrix(graph({"a", "b", "c"}, {{"a", "b", 0}, {"b", "c", 0}}));
  EXPECT_EQ(zero.at("a", "c"), Weight(0));
  EXPECT_EQ(zero.axiom_class(), AxiomClass::Pseudoultrametric);
  EXPECT_FALSE(validate(zero, AxiomClass::Metric));
  EXPECT_TRUE(validate(zero, AxiomClass::Pseudometric));
}

TEST(ShortestPath, PrefersCheaperDetour) {
  auto d = shortest_path_matrix(test::triangle(1, 1, 5));
  EXPECT_EQ(d.at("a", "c"), Weight(2));
}

TEST(Subdominant, AgreesWithOracleOnSmallGraphs) {
  test::Sampler s(101);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = s.uniform(2, 8);
    auto shape = s.connected_shape(n, s.coin(0.5) ? 0.2 : 0.6);
    auto g = trial % 2 ? s.weigh_ties(n, shape) : s.weigh_wide(n, shape);
    auto rho = subdominant_matrix(g);
    auto d = shortest_path_matrix(g);
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b) {
        ASSERT_EQ(rho.at(a, b), oracle::oracle_subdominant(g, a, b)) << trial;
        ASSERT_EQ(d.at(a, b), oracle::oracle_shortest_path(g, a, b)) << trial;
      }
  }
}

TEST(Subdominant, IndependentOfMinimumSpanningTreeChoice) {
  test::Sampler s(102);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = s.uniform(2, 9);
    auto g = s.weigh_ties(n, s.connected_shape(n, 0.5));
    std::vector<std::size_t> order(g.edge_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), s.rng());
    auto first = minimum_spanning_forest(g);
    auto second = minimum_spanning_forest(g, order);
    ASSERT_EQ(first.size(), n - 1);
    EXPECT_EQ(tree_bottleneck_matrix(g, first), tree_bottleneck_matrix(g, second));
    EXPECT_EQ(tree_bottleneck_matrix(g, second), subdominant_matrix(g));
  }
}

TEST(Subdominant, AxiomsOrderAndEdgeDomination) {
  test::Sampler s(103);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = s.uniform(1, 10);
    auto g = s.weigh_ties(n, s.connected_shape(n, 0.35));
    auto rho = subdominant_matrix(g);
    auto d = shortest_path_matrix(g);
    EXPECT_TRUE(validate(rho, AxiomClass::Pseudoultrametric));
    EXPECT_TRUE(validate(d, AxiomClass::Pseudometric));
    auto order = compare(rho, d);
    EXPECT_TRUE(order == PartialOrder::Equal || order == PartialOrder::FirstLess) << to_string(order);
    for (const auto& e : g.edges()) {
      EXPECT_LE(rho.at(e.u, e.v), e.weight);
      EXPECT_LE(d.at(e.u, e.v), e.weight);
    }
  }
}

TEST(Subdominant, StrictlyPositiveWeightsGiveUltrametric) {
  test::Sampler s(104);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = s.uniform(2, 9);
    auto g = s.weigh(n, s.connected_shape(n, 0.4), [&] { return s.positive_weight(); });
    auto rho = subdominant_matrix(g);
    EXPECT_EQ(rho.axiom_class(), AxiomClass::Ultrametric);
    Weight lightest = g.edge(0).weight;
    for (const auto& e : g.edges()) lightest = std::min(lightest, e.weight);
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = 0; b < n; ++b)
        if (a != b) EXPECT_GE(rho.at(a, b), lightest);
  }
}

// ---- validate / classify ---------------------------------------------------

TEST(Validate, StrongTriangleViolationWitness) {
  auto m = triple(1, 2, 3);
  auto verdict = validate(m, AxiomClass::Pseudoultrametric);
  ASSERT_FALSE(verdict);
  EXPECT_EQ(verdict.violation->kind, Violation::Kind::StrongTriangle);
  const auto& v = *verdict.violation;
  EXPECT_GT(m.at(v.x, v.y), std::max(m.at(v.x, v.z), m.at(v.z, v.y)));
  EXPECT_EQ(m.axiom_class(), AxiomClass::Metric);
}

TEST(Validate, IsoscelesIsUltrametric) {
  EXPECT_TRUE(validate(triple(1, 2, 2), AxiomClass::Ultrametric));
  EXPECT_EQ(triple(1, 2, 2).axiom_class(), AxiomClass::Ultrametric);
}

TEST(Validate, ZeroOffDiagonal) {
  auto m = triple(0, 1, 1);
  auto verdict = validate(m, AxiomClass::Metric);
  ASSERT_FALSE(verdict);
  EXPECT_EQ(verdict.violation->kind, Violation::Kind::ZeroOffDiagonal);
  EXPECT_TRUE(validate(m, AxiomClass::Pseudoultrametric));
  EXPECT_EQ(m.axiom_class(), AxiomClass::Pseudoultrametric);
}

TEST(Validate, TriangleViolation) {
  auto m = triple(1, 1, 3);
  EXPECT_EQ(m.axiom_class(), AxiomClass::None);
  auto verdict = validate(m, AxiomClass::Pseudometric);
  ASSERT_FALSE(verdict);
  EXPECT_EQ(verdict.violation->kind, Violation::Kind::Triangle);
}

TEST(Validate, RawEntriesReportStructuralFaults) {
  std::vector<Weight> asym{0, 1, 2, 0};
  auto v = validate(asym, 2, AxiomClass::Pseudometric);
  ASSERT_FALSE(v);
  EXPECT_EQ(v.violation->kind, Violation::Kind::Asymmetric);
  std::vector<Weight> diag{1, 0, 0, 0};
  v = validate(diag, 2, AxiomClass::Pseudometric);
  ASSERT_FALSE(v);
  EXPECT_EQ(v.violation->kind, Violation::Kind::NonzeroDiagonal);
}

TEST(DistanceMatrix, RejectsMalformedInput) {
  EXPECT_THROW(DistanceMatrix({"a", "b"}, {0, 1, 1}), Error);
  EXPECT_THROW(DistanceMatrix({"a", "b"}, {0, 1, 2, 0}), Error);
  EXPECT_THROW(DistanceMatrix({"a", "b"}, {1, 1, 1, 0}), Error);
  EXPECT_THROW(DistanceMatrix({}, {}), Error);
}

TEST(Validate, RandomMatricesAgreeWithTripleScan) {
  // Fast closure check against the literal definition.
  test::Sampler s(105);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = s.uniform(1, 7);
    std::vector<Weight> e(n * n);
    if (trial % 3 == 0) {
      e = s.ultrametric(n);
      if (n > 1 && s.coin(0.5)) {
        std::size_t a = s.uniform(0, n - 1), b = (a + 1) % n;
        e[a * n + b] = e[b * n + a] = s.tie_weight();
      }
    } else {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) e[a * n + b] = e[b * n + a] = s.tie_weight();
    }
    bool strong = true, plain = true;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          if (e[x * n + y] > std::max(e[x * n + z], e[z * n + y])) strong = false;
          if (e[x * n + y] > e[x * n + z] + e[z * n + y]) plain = false;
        }
    EXPECT_EQ(bool(validate(e, n, AxiomClass::Pseudoultrametric)), strong);
    EXPECT_EQ(bool(validate(e, n, AxiomClass::Pseudometric)), plain);
  }
}

// ---- partial order ---------------------------------------------------------

TEST(Compare, Examples) {
  auto g = test::triangle(1, 2, 3);
  EXPECT_EQ(compare(subdominant_matrix(g), shortest_path_matrix(g)), PartialOrder::FirstLess);
  EXPECT_EQ(compare(shortest_path_matrix(g), subdominant_matrix(g)), PartialOrder::SecondLess);
  auto m = triple(1, 2, 2);
  EXPECT_EQ(compare(m, m), PartialOrder::Equal);
  EXPECT_EQ(compare(triple(0, 1, 1), triple(1, 0, 1)), PartialOrder::Incomparable);
}

TEST(Compare, VertexMismatch) {
  auto m = triple(1, 2, 2);
  auto other = matrix({"a", "b", "d"}, {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}});
  try {
    compare(m, other);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VertexMismatch);
  }
}

// ---- quotient / dendrogram -------------------------------------------------

TEST(Quotient, UltrametricIsIdentity) {
  auto m = triple(1, 2, 2);
  auto q = quotient(m);
  EXPECT_EQ(q.classes.size(), 3u);
  EXPECT_EQ(q.matrix, m);
}

TEST(Quotient, CollapsesZeroClasses) {
  auto m = matrix({"x", "y", "z"}, {{0, 0, 2}, {0, 0, 2}, {2, 2, 0}});
  auto q = quotient(m);
  ASSERT_EQ(q.classes.size(), 2u);
  EXPECT_EQ(q.classes[0], (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(q.classes[1], (std::vector<VertexId>{2}));
  EXPECT_EQ(q.matrix.vertices(), (std::vector<std::string>{"x|y", "z"}));
  EXPECT_EQ(q.matrix.at(0, 1), Weight(2));
  EXPECT_EQ(q.matrix.axiom_class(), AxiomClass::Ultrametric);
}

TEST(Quotient, ZeroMatrixIsOnePoint) {
  auto q = quotient(matrix({"a", "b", "c"}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(q.classes.size(), 1u);
  EXPECT_EQ(q.matrix.size(), 1u);
  EXPECT_EQ(q.matrix.at(0, 0), Weight(0));
}

TEST(Quotient, RejectsNonPseudoultrametric) {
  try {
    quotient(triple(1, 2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPseudoultrametric);
  }
}

TEST(Dendrogram, NestedMerge) {
  auto d = dendrogram(triple(1, 2, 2));
  const auto& root = d.node(d.root());
  EXPECT_EQ(root.height, Weight(1));
  ASSERT_EQ(root.children.size(), 2u);
  std::vector<std::size_t> sizes;
  for (auto c : root.children) sizes.push_back(d.leaves_under(c).size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2}));
  for (auto c : root.children)
    if (!d.node(c).leaf) EXPECT_EQ(d.node(c).height, Weight(1, 2));
}

TEST(Dendrogram, TwoPoints) {
  auto d = dendrogram(matrix({"a", "b"}, {{0, 3}, {3, 0}}));
  EXPECT_EQ(d.node(d.root()).height, Weight(3, 2));
  EXPECT_EQ(d.node(d.root()).children.size(), 2u);
}

TEST(Dendrogram, EquilateralTieIsOneMultiwayNode) {
  auto d = dendrogram(triple(2, 2, 2));
  EXPECT_EQ(d.node(d.root()).height, Weight(1));
  EXPECT_EQ(d.node(d.root()).children.size(), 3u);
  EXPECT_EQ(d.nodes().size(), 4u);
}

TEST(Dendrogram, RejectsPseudoultrametric) {
  try {
    dendrogram(triple(0, 1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotUltrametric);
  }
}

TEST(Dendrogram, RoundTripAndHeightsIncrease) {
  test::Sampler s(106);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = s.uniform(1, 9);
    DistanceMatrix m(test::vertex_names(n), s.ultrametric(n));
    auto q = quotient(m);
    auto d = dendrogram(q.matrix);
    EXPECT_EQ(d.to_matrix(), q.matrix);
    for (const auto& node : d.nodes()) {
      if (node.leaf) EXPECT_TRUE(node.height.is_zero());
      for (auto c : node.children) EXPECT_LT(d.node(c).height, node.height);
    }
    // Pulling the quotient back reproduces the original matrix.
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        EXPECT_EQ(m.at(a, b), q.matrix.at(q.classes.block_of(a), q.classes.block_of(b)));
  }
}

// ---- cycle property of pseudoultrametrics ----------------------------------

TEST(PseudoultrametricCycles, EveryCycleHasTwoHeaviestEdges) {
  test::Sampler s(107);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = s.uniform(3, 6);
    DistanceMatrix m(test::vertex_names(n), s.ultrametric(n));
    ASSERT_TRUE(satisfies(m.axiom_class(), AxiomClass::Pseudoultrametric));
    auto g = matrix_to_complete_graph(m);
    for (const auto& c : oracle::enumerate_simple_cycles(g)) EXPECT_GE(c.max_edge_multiplicity(g), 2u);
  }
}

// ---- complete graph view ---------------------------------------------------

TEST(MatrixToCompleteGraph, Examples) {
  auto one = matrix_to_complete_graph(matrix({"a", "b"}, {{0, 3}, {3, 0}}));
  ASSERT_EQ(one.edge_count(), 1u);
  EXPECT_EQ(one.edge(0).weight, Weight(3));

  auto tri = matrix_to_complete_graph(triple(1, 2, 2));
  EXPECT_EQ(tri.edge_count(), 3u);
  EXPECT_EQ(tri.weight(0, 1), Weight(1));
  EXPECT_EQ(tri.weight(1, 2), Weight(2));

  auto zero = matrix_to_complete_graph(DistanceMatrix(test::vertex_names(5), std::vector<Weight>(25)));
  EXPECT_EQ(zero.edge_count(), 10u);
  for (const auto& e : zero.edges()) EXPECT_TRUE(e.weight.is_zero());
}

// ---- betweenness exponent --------------------------------------------------

TEST(Exponent, BoundaryTripleIsExactlyOne) {
  auto e = betweenness_exponent(triple(1, 1, 2));
  ASSERT_FALSE(e.is_infinite());
  EXPECT_EQ(e.value(), 1.0);
}

TEST(Exponent, UltrametricIsInfinite) {
  EXPECT_TRUE(betweenness_exponent(triple(1, 2, 2)).is_infinite());
  EXPECT_TRUE(betweenness_exponent(triple(0, 1, 1)).is_infinite());
  EXPECT_TRUE(betweenness_exponent(matrix({"a"}, {{0}})).is_infinite());
}

TEST(Exponent, ThreeHalvesTriple) {
  auto e = betweenness_exponent(triple(1, 1, Weight(3, 2)));
  ASSERT_FALSE(e.is_infinite());
  EXPECT_NEAR(e.value(), std::log(2.0) / std::log(1.5), 1e-9);
}

TEST(Exponent, RespectsTolerance) {
  auto coarse = betweenness_exponent(triple(1, 1, Weight(3, 2)), 1e-3);
  EXPECT_NEAR(coarse.value(), std::log(2.0) / std::log(1.5), 1e-3);
}

TEST(Exponent, MinimumOverTriples) {
  // Triples (3/2,1,1) and (2,1,1) on four points: the boundary triple wins.
  auto m = matrix({"a", "b", "c", "d"},
                  {{0, 1, Weight(3, 2), 2}, {1, 0, 1, 1}, {Weight(3, 2), 1, 0, 2}, {2, 1, 2, 0}});
  ASSERT_TRUE(satisfies(m.axiom_class(), AxiomClass::Pseudometric));
  EXPECT_EQ(betweenness_exponent(m).value(), 1.0);
}

TEST(Exponent, RejectsNonPseudometric) {
  try {
    betweenness_exponent(triple(1, 1, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPseudometric);
  }
}

TEST(Exponent, InfiniteExactlyForPseudoultrametrics) {
  test::Sampler s(108);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = s.uniform(2, 8);
    auto g = s.weigh_ties(n, s.connected_shape(n, 0.4));
    for (const auto& m : {shortest_path_matrix(g), subdominant_matrix(g)}) {
      auto e = betweenness_exponent(m);
      EXPECT_EQ(e.is_infinite(), bool(validate(m, AxiomClass::Pseudoultrametric)));
      if (!e.is_infinite()) {
        EXPECT_GE(e.value(), 1.0);
        // d^α stays a pseudometric just below the supremum.
        const double alpha = e.value() - 1e-6;
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
              double xy = std::pow(m.at(x, y).to_double(), alpha);
              double bound = std::pow(m.at(x, z).to_double(), alpha) + std::pow(m.at(z, y).to_double(), alpha);
              EXPECT_LE(xy, bound * (1 + 1e-12));
            }
      }
    }
  }
}

}  // namespace
}  // namespace ultragraph
