#include <gtest/gtest.h>

#include <map>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sgd/balance.hpp"
#include "sgd/matrices.hpp"
#include "sgd/verify.hpp"

namespace sgd {
namespace {

using fixtures::c3_allneg;
using fixtures::c4_oneneg;
using fixtures::graph;

WeightedSignedGraph c4_associated(DistanceKind kind) {
  const SignedGraph g = c4_oneneg();
  return associated_complete(g, distance_table(g), kind);
}

TEST(DetExact, Examples) {
  EXPECT_EQ(det_exact(distance_laplacian(c3_allneg(), DistanceKind::pm)), 4);
  EXPECT_EQ(det_exact(distance_laplacian(fixtures::p3('+', '-'), DistanceKind::pm)), 0);
  EXPECT_EQ(det_exact(distance_laplacian(c4_oneneg(), DistanceKind::max)), 84);
  EXPECT_EQ(det_exact(distance_laplacian(c4_oneneg(), DistanceKind::min)), 84);
  EXPECT_EQ(det_exact(SquareMatrix(0)), 1);
}

TEST(DetExact, RejectsNonInteger) {
  EXPECT_THROW(det_exact(SquareMatrix{{1.5, 0}, {0, 1}}), InvalidArgument);
}

TEST(DetExact, NeedsPivoting) {
  EXPECT_EQ(det_exact(SquareMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(det_exact(SquareMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), -1);
  EXPECT_EQ(det_exact(SquareMatrix{{0, 0}, {0, 5}}), 0);
}

TEST(DetExact, MatchesLeibniz) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 7);
    SquareMatrix m(n);
    auto z = random_switching(n * n, seed);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) = static_cast<double>((i * 7 + j * 13 + static_cast<int>(seed)) % 11 - 5) *
                  to_int(z.zeta[static_cast<std::size_t>(i * n + j)]);
    EXPECT_EQ(det_exact(m), oracle::leibniz_det(m)) << "seed " << seed;
  }
}

TEST(DetExact, LargeEntriesStayExact) {
  // det [[a, 1], [1, a]] = a^2 - 1 overflows 64 bits for a = 2^40.
  const double a = std::ldexp(1.0, 40);
  const BigInt expected = (BigInt(1) << 80) - 1;
  EXPECT_EQ(det_exact(SquareMatrix{{a, 1}, {1, a}}), expected);
}

TEST(DetFloat, Examples) {
  EXPECT_DOUBLE_EQ(det_float(SquareMatrix::identity(5)).value, 1.0);
  EXPECT_NEAR(det_float(distance_laplacian(c3_allneg(), DistanceKind::pm)).value, 4.0, 1e-9);
  EXPECT_NEAR(det_float(weighted_laplacian(fixtures::weighted_triangle())).value, 120.0, 1e-6);
  const auto singular = det_float(distance_laplacian(fixtures::p3('+', '-'), DistanceKind::pm));
  EXPECT_TRUE(singular.singular);
  EXPECT_EQ(singular.value, 0.0);
}

TEST(DetFloat, AgreesWithExactOnIntegerMatrices) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 11);
    const SignedGraph g = generate(GraphKind::random, n, NegativeProbability{0.5}, seed);
    const SquareMatrix l = distance_laplacian(g, DistanceKind::max);
    const double exact = det_exact(l).convert_to<double>();
    const auto approx = det_float(l);
    if (exact == 0.0) {
      EXPECT_LT(std::abs(approx.value), 1e-6 * std::pow(l.max_abs(), n));
    } else {
      EXPECT_NEAR(approx.value / exact, 1.0, 1e-9) << "n=" << n;
    }
  }
}

TEST(IsBalancedSwitching, Examples) {
  const auto c4 = is_balanced_switching(generate(GraphKind::cycle, 4, AllPositive{}, 0));
  EXPECT_TRUE(c4.balanced);
  const auto& zeta = std::get<SwitchingFunction>(c4.certificate);
  EXPECT_EQ(zeta.zeta, SwitchingFunction::identity(4).zeta);

  const auto c3 = is_balanced_switching(c3_allneg());
  EXPECT_FALSE(c3.balanced);
  EXPECT_EQ(std::get<NegativeCycle>(c3.certificate).cycle.size(), 3u);
  EXPECT_TRUE(verify_certificate(c3_allneg(), c3));

  for (char a : {'+', '-'})
    for (char b : {'+', '-'}) EXPECT_TRUE(is_balanced_switching(fixtures::p3(a, b)).balanced);

  EXPECT_THROW(is_balanced_switching(graph(3, {{1, 2, '-'}})), DisconnectedError);
}

TEST(IsBalancedSwitching, MatchesExhaustiveSearchAndCertificatesVerify) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const SignedGraph g = random_instance(8, seed);
    const auto r = is_balanced_switching(g);
    EXPECT_EQ(r.balanced, oracle::exhaustive_balanced(g));
    EXPECT_TRUE(verify_certificate(g, r));
  }
}

TEST(Enumerate1Forests, AllNegativeTriangle) {
  const auto forests = enumerate_spanning_1forests(WeightedSignedGraph(c3_allneg()), false);
  ASSERT_EQ(forests.size(), 1u);
  EXPECT_TRUE(forests[0].contrabalanced());
  ASSERT_EQ(forests[0].components.size(), 1u);
  EXPECT_EQ(forests[0].components[0].cycle.size(), 3u);
  EXPECT_EQ(forests[0].components[0].cycle_sign, Sign::negative);
}

TEST(Enumerate1Forests, TreeHasNone) {
  const auto tree = graph(5, {{1, 2, '-'}, {2, 3, '+'}, {2, 4, '-'}, {4, 5, '-'}});
  EXPECT_TRUE(enumerate_spanning_1forests(WeightedSignedGraph(tree), false).empty());
}

TEST(Enumerate1Forests, C4AssociatedComplete) {
  // K4 has 15 four-edge subsets, all spanning unicyclic: 3 Hamiltonian
  // 4-cycles and 12 triangle-plus-pendant configurations.
  const auto k = c4_associated(DistanceKind::max);
  const auto all = enumerate_spanning_1forests(k, false);
  EXPECT_EQ(all.size(), 15u);
  const auto contra = enumerate_spanning_1forests(k, true);
  EXPECT_EQ(contra.size(), 8u);
  int four_cycles = 0, triangles = 0;
  for (const auto& f : contra) {
    ASSERT_EQ(f.components.size(), 1u);
    (f.components[0].cycle.size() == 4 ? four_cycles : triangles)++;
  }
  EXPECT_EQ(four_cycles, 2);
  EXPECT_EQ(triangles, 6);
}

TEST(Enumerate1Forests, StoredCycleSignMatchesPathSign) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = WeightedSignedGraph(generate(GraphKind::random, 6, NegativeProbability{0.5}, seed));
    for (const auto& f : enumerate_spanning_1forests(g, false)) {
      EXPECT_EQ(static_cast<int>(f.edges.size()), g.order());
      std::size_t covered = 0;
      for (const auto& t : f.components) {
        covered += t.vertices.size();
        std::vector<int> closed = t.cycle;
        closed.push_back(t.cycle.front());
        EXPECT_EQ(path_sign(g.base(), closed), t.cycle_sign);
      }
      EXPECT_EQ(covered, static_cast<std::size_t>(g.order()));
    }
  }
}

TEST(Enumerate1Forests, MatchesNaiveSubsetWalk) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const SignedGraph g = random_instance(7, seed);
    const auto fast = enumerate_spanning_1forests(WeightedSignedGraph(g), false);
    const auto naive = oracle::naive_1forests(g);
    ASSERT_EQ(fast.size(), naive.size());
    std::map<std::vector<int>, bool> expected;
    for (const auto& f : naive) expected[f.edges] = f.contrabalanced;
    for (const auto& f : fast) {
      ASSERT_TRUE(expected.count(f.edges));
      EXPECT_EQ(f.contrabalanced(), expected[f.edges]);
    }
  }
}

TEST(Enumerate1Forests, SizeBound) {
  const auto big = WeightedSignedGraph(generate(GraphKind::cycle, 11, AllNegative{}, 0));
  EXPECT_THROW(enumerate_spanning_1forests(big, true), InvalidArgument);
  EXPECT_THROW(forest_det(big), InvalidArgument);
}

TEST(ForestDet, Examples) {
  EXPECT_EQ(*forest_det(WeightedSignedGraph(c3_allneg())).exact, 4);
  EXPECT_EQ(*forest_det(fixtures::weighted_triangle()).exact, 120);
  const auto k = forest_det(c4_associated(DistanceKind::max));
  EXPECT_EQ(*k.exact, 84);
  EXPECT_EQ(k.forests, 8);
  EXPECT_EQ(*forest_det(c4_associated(DistanceKind::min)).exact, 84);
}

TEST(ForestDet, RealWeights) {
  const auto g = fixtures::weighted(3, {{1, 2, '-', 0.5}, {2, 3, '-', 1.5}, {1, 3, '-', 2.0}});
  const auto fd = forest_det(g);
  EXPECT_FALSE(fd.exact.has_value());
  EXPECT_NEAR(fd.value, 4 * 0.5 * 1.5 * 2.0, 1e-12);
  EXPECT_NEAR(fd.value, det_float(weighted_laplacian(g)).value, 1e-12);
}

TEST(ForestDet, EqualsDeterminantOnSmallGraphs) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto g = with_random_integer_weights(random_instance(6, seed), 1, 5, seed);
    const BigInt det = det_exact(weighted_laplacian(g));
    EXPECT_EQ(*forest_det(g).exact, det);
    EXPECT_EQ(oracle::naive_forest_sum(g), det);
    EXPECT_GE(det, 0);
  }
}

TEST(ForestDet, DisconnectedGraphs) {
  // Two negative triangles and a positive one joined into a 1-forest, plus a
  // spare edge so the sum has several terms.
  const auto g = fixtures::weighted(7, {{1, 2, '-', 2}, {2, 3, '-', 1}, {1, 3, '-', 3},
                                        {4, 5, '+', 1}, {5, 6, '-', 2}, {4, 6, '+', 1}, {6, 7, '+', 4}});
  EXPECT_EQ(*forest_det(g).exact, det_exact(weighted_laplacian(g)));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto a = random_instance(4, seed), b = random_instance(4, seed + 500);
    std::vector<Edge> edges = a.edges();
    for (Edge e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order(), e.sign});
    const auto u = with_random_integer_weights(SignedGraph(a.order() + b.order(), edges), 1, 4, seed);
    EXPECT_EQ(*forest_det(u).exact, det_exact(weighted_laplacian(u)));
  }
}

TEST(ClosedFormDet, Examples) {
  const auto tree = fixtures::weighted(4, {{1, 2, '-', 2}, {2, 3, '+', 3}, {2, 4, '-', 1.5}});
  const auto t = closed_form_det(tree);
  ASSERT_TRUE(t);
  EXPECT_EQ(t->shape, Shape::tree);
  EXPECT_EQ(t->value, 0.0);

  const auto uni = closed_form_det(WeightedSignedGraph(
      graph(4, {{1, 2, '-'}, {2, 3, '-'}, {1, 3, '-'}, {3, 4, '+'}})));
  ASSERT_TRUE(uni);
  EXPECT_EQ(uni->shape, Shape::unicyclic);
  EXPECT_EQ(*uni->exact, 4);

  const auto two = closed_form_det(WeightedSignedGraph(graph(
      6, {{1, 2, '-'}, {2, 3, '-'}, {1, 3, '-'}, {4, 5, '-'}, {5, 6, '-'}, {4, 6, '-'}})));
  ASSERT_TRUE(two);
  EXPECT_EQ(two->shape, Shape::one_forest);
  EXPECT_EQ(*two->exact, 16);

  const auto tri = closed_form_det(fixtures::weighted_triangle());
  ASSERT_TRUE(tri);
  EXPECT_EQ(tri->shape, Shape::cycle);
  EXPECT_EQ(*tri->exact, 120);
  EXPECT_DOUBLE_EQ(tri->value, 120.0);

  EXPECT_FALSE(closed_form_det(WeightedSignedGraph(generate(GraphKind::complete, 4, AllNegative{}, 0))));
  EXPECT_FALSE(closed_form_det(WeightedSignedGraph(graph(4, {{1, 2, '-'}, {2, 3, '-'}, {1, 3, '-'}}))));
}

// Random tree on [lo, hi) plus `extra` chords, all inside that range.
void add_piece(std::vector<Edge>& edges, int lo, int hi, int extra, std::uint64_t seed) {
  const auto z = random_switching(2 * (hi - lo), seed);
  auto sign = [&](int i) { return z.zeta[static_cast<std::size_t>(i)]; };
  for (int v = lo + 1; v < hi; ++v) {
    const int parent = lo + static_cast<int>((seed * 31 + static_cast<std::uint64_t>(v) * 17) %
                                             static_cast<std::uint64_t>(v - lo));
    edges.push_back({parent, v, sign(v - lo)});
  }
  for (; extra > 0; --extra) {
    std::vector<std::pair<int, int>> missing;
    for (int u = lo; u < hi; ++u)
      for (int v = u + 1; v < hi; ++v)
        if (std::none_of(edges.begin(), edges.end(), [&](const Edge& e) {
              return std::min(e.u, e.v) == u && std::max(e.u, e.v) == v;
            }))
          missing.emplace_back(u, v);
    if (missing.empty()) return;
    const auto [u, v] = missing[seed % missing.size()];
    edges.push_back({u, v, sign(hi - lo + extra)});
  }
}

TEST(ClosedFormDet, AgreesWithDeterminant) {
  std::map<Shape, int> seen;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    std::vector<Edge> edges;
    switch (seed % 4) {
      case 0: add_piece(edges, 0, n, 0, seed); break;
      case 1:
      case 2: add_piece(edges, 0, n, 1, seed); break;
      default:
        if (n < 6) {
          add_piece(edges, 0, n, 1, seed);
        } else {
          add_piece(edges, 0, n / 2, 1, seed);
          add_piece(edges, n / 2, n, 1, seed + 1);
        }
    }
    const auto g = with_random_integer_weights(SignedGraph(n, edges), 1, 6, seed);
    const auto cf = closed_form_det(g);
    ASSERT_TRUE(cf) << serialize_edge_list(g);
    ++seen[cf->shape];
    EXPECT_EQ(*cf->exact, det_exact(weighted_laplacian(g))) << serialize_edge_list(g);
  }
  for (Shape s : {Shape::tree, Shape::cycle, Shape::unicyclic, Shape::one_forest}) EXPECT_GT(seen[s], 0);
}

TEST(IsBalancedDet, Examples) {
  for (DetKind k : {DetKind::max, DetKind::min, DetKind::pm, DetKind::all}) {
    const auto r = is_balanced_det(fixtures::p3('+', '-'), k);
    EXPECT_TRUE(r.balanced);
    EXPECT_EQ(*r.determinant, 0);
  }
  const auto c3 = is_balanced_det(c3_allneg(), DetKind::all);
  EXPECT_FALSE(c3.balanced);
  EXPECT_EQ(*c3.determinant, 4);
  EXPECT_TRUE(verify_certificate(c3_allneg(), c3));

  const auto c4max = is_balanced_det(c4_oneneg(), DetKind::max);
  const auto c4min = is_balanced_det(c4_oneneg(), DetKind::min);
  EXPECT_FALSE(c4max.balanced);
  EXPECT_EQ(*c4max.determinant, 84);
  EXPECT_EQ(*c4min.determinant, 84);
  EXPECT_EQ(c4max.method, BalanceMethod::det_max);

  const auto c4pm = is_balanced_det(c4_oneneg(), DetKind::pm);
  EXPECT_FALSE(c4pm.balanced);
  EXPECT_FALSE(c4pm.determinant);
  EXPECT_EQ((std::get<std::pair<int, int>>(c4pm.certificate)), (std::pair{0, 2}));
  EXPECT_TRUE(verify_certificate(c4_oneneg(), c4pm));

  EXPECT_THROW(is_balanced_det(graph(3, {{1, 2, '+'}}), DetKind::max), DisconnectedError);
}

TEST(IsBalancedForest, Examples) {
  const auto c4 = is_balanced_forest(c4_oneneg(), DistanceKind::max);
  EXPECT_FALSE(c4.balanced);
  EXPECT_EQ(*c4.determinant, 84);
  EXPECT_TRUE(is_balanced_forest(fixtures::p3('-', '-'), DistanceKind::min).balanced);
}

TEST(BalanceDeciders, AgreeAndAreSwitchingInvariant) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const SignedGraph g = random_instance(6, seed);
    const bool expected = oracle::exhaustive_balanced(g);
    const auto all = is_balanced_det(g, DetKind::all);
    EXPECT_EQ(all.balanced, expected);
    EXPECT_TRUE(verify_certificate(g, all));
    EXPECT_EQ(is_balanced_forest(g, DistanceKind::max).balanced, expected);
    EXPECT_EQ(is_balanced_forest(g, DistanceKind::min).balanced, expected);

    const SignedGraph s = switch_signs(g, random_switching(g.order(), seed + 7));
    EXPECT_EQ(is_balanced_switching(s).balanced, expected);
    EXPECT_EQ(is_balanced_det(s, DetKind::max).balanced, expected);
    EXPECT_EQ(is_balanced_det(s, DetKind::min).balanced, expected);
    EXPECT_EQ(is_balanced_det(s, DetKind::pm).balanced, expected);
  }
}

}  // namespace
}  // namespace sgd
