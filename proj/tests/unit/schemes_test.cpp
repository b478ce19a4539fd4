#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "cutsparse/connectivity.hpp"
#include "cutsparse/flow.hpp"
#include "cutsparse/generators.hpp"
#include "cutsparse/ni_forest.hpp"
#include "cutsparse/schemes.hpp"
#include "oracles.hpp"

namespace cutsparse {
namespace {

const Scheme kAllSchemes[] = {Scheme::ni,       Scheme::step1,      Scheme::setlambda,
                              Scheme::decreasing, Scheme::standard, Scheme::resistance,
                              Scheme::strong};

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Graph weighted_triangle() {
  Graph g(3);
  g.add_edge(0, 1, 3);
  g.add_edge(1, 2, 2);
  g.add_edge(0, 2, 1);
  return g;
}

Graph two_triangles_with_bridge() {
  Graph g(6);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}}) {
    g.add_edge(u, v);
  }
  return g;
}

TEST(LambdaNi, Examples) {
  const SchemeResult k4 = lambda_ni_unweighted(complete_graph(4));
  EXPECT_EQ(sorted(k4.lambda.lambda), (std::vector<double>{1, 1, 1, 2, 2, 3}));
  EXPECT_EQ(k4.lambda.alpha, 2.0);
  double inv = 0;
  for (double l : k4.lambda.lambda) inv += 1.0 / l;
  EXPECT_NEAR(inv, 13.0 / 3.0, 1e-12);
  EXPECT_LE(inv, 3 * (1 + std::log(3.0)));
  for (double l : lambda_ni_unweighted(star_graph(4)).lambda.lambda) EXPECT_EQ(l, 1.0);
  Graph w(2);
  w.add_edge(0, 1, 2);
  EXPECT_THROW(lambda_ni_unweighted(w), std::invalid_argument);
}

TEST(LambdaStep1, Examples) {
  Graph single(2);
  single.add_edge(0, 1, 3);
  EXPECT_EQ(lambda_step1(single).lambda.lambda, (std::vector<double>{3}));
  const Graph unit = random_connected(12, 30, 6);
  EXPECT_EQ(lambda_step1(unit).lambda.lambda, lambda_ni_unweighted(unit).lambda.lambda);
  // Last copy index from the expanded-multigraph scan.
  const Graph tri = weighted_triangle();
  const auto [expanded, source] = expand_multigraph(tri);
  const NIDecomposition d = decompose_unweighted(expanded);
  std::vector<double> last(tri.edge_count(), 0);
  for (EdgeId c = 0; c < expanded.edge_count(); ++c) {
    last[source[c]] = std::max(last[source[c]], static_cast<double>(d.first_index(c)));
  }
  EXPECT_EQ(lambda_step1(tri).lambda.lambda, last);
}

TEST(LambdaSetLambda, Examples) {
  for (double l : lambda_setlambda(complete_graph(4)).lambda.lambda) EXPECT_EQ(l, 1.0);
  for (double l : lambda_setlambda(cycle_graph(8)).lambda.lambda) EXPECT_EQ(l, 1.0);
  for (double l : lambda_setlambda(complete_graph(8)).lambda.lambda) EXPECT_EQ(l, 2.0);
  EXPECT_EQ(lambda_setlambda(complete_graph(4)).lambda.alpha, 4.0);
}

TEST(LambdaSetLambda, K8TraceShowsTheShrinkThenAccept) {
  std::vector<SetLambdaSplit> trace;
  lambda_setlambda(complete_graph(8), true, &trace);
  // Level 0 shrinks K8 to one super vertex and accepts nothing; level 1
  // accepts all 28 edges (28 <= 8 * 4) and the piece falls into singletons.
  ASSERT_EQ(trace.size(), 2U);
  EXPECT_EQ(trace[0].level, 0);
  EXPECT_EQ(trace[0].super_vertices, 1U);
  EXPECT_EQ(trace[0].level_weight, 0);
  EXPECT_EQ(trace[1].level, 1);
  EXPECT_EQ(trace[1].super_vertices, 8U);
  EXPECT_EQ(trace[1].parts, 8U);
  EXPECT_EQ(trace[1].level_weight, 28);
}

TEST(LambdaDecreasing, Examples) {
  EXPECT_EQ(lambda_decreasing(weighted_triangle()).lambda.lambda, (std::vector<double>{1, 1, 3}));
  Graph huge(2);
  huge.add_edge(0, 1, 1'000'000'000);
  const SchemeResult r = lambda_decreasing(huge);
  EXPECT_EQ(r.lambda.lambda, (std::vector<double>{1}));
  SamplingParams p;
  const Skeleton sk = sample_skeleton(huge, r.lambda, p);
  ASSERT_EQ(sk.edges.size(), 1U);
  EXPECT_EQ(sk.edges[0].weight, Rational(1'000'000'000));
  const Graph star = star_graph(6);
  EXPECT_EQ(lambda_decreasing(star).lambda.lambda, lambda_ni_unweighted(star).lambda.lambda);
}

TEST(LambdaStandard, Examples) {
  const SchemeResult c4 = lambda_standard(cycle_graph(4));
  EXPECT_EQ(c4.lambda.lambda, (std::vector<double>(4, 2)));
  EXPECT_DOUBLE_EQ(c4.lambda.alpha, 5.0);
  EXPECT_EQ(lambda_standard(complete_graph(4)).lambda.lambda, (std::vector<double>(6, 3)));
  EXPECT_DOUBLE_EQ(lambda_standard(cycle_graph(6)).lambda.alpha, 3 + std::log2(6.0));
  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  EXPECT_THROW(lambda_standard(split), std::invalid_argument);
  EXPECT_THROW(lambda_resistance(split), std::invalid_argument);
  EXPECT_THROW(lambda_strong(split), std::invalid_argument);
}

TEST(LambdaResistance, Examples) {
  for (double l : lambda_resistance(cycle_graph(3)).lambda.lambda) EXPECT_NEAR(l, 1.5, 1e-12);
  Graph g(2);
  g.add_edge(0, 1, 2);
  EXPECT_NEAR(lambda_resistance(g).lambda.lambda[0], 2.0, 1e-12);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 3 + seed % 20;
    const Graph h = random_connected(n, std::min<std::size_t>(n * (n - 1) / 2, 2 * n), seed, 1 + seed % 5);
    const auto l = lambda_resistance(h, false).lambda.lambda;
    const auto k = standard_connectivity_all(h);
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      ASSERT_LE(l[e], static_cast<double>(k[e]) * (1 + 1e-9));
    }
  }
}

TEST(LambdaStrong, Examples) {
  const SchemeResult k4 = lambda_strong(complete_graph(4));
  EXPECT_EQ(k4.lambda.lambda, (std::vector<double>(6, 3)));
  EXPECT_EQ(k4.lambda.alpha, 1.0);
  const CertificateReport rep = check_certificate(complete_graph(4), k4.lambda, k4.certificate);
  EXPECT_TRUE(rep.ok());
  EXPECT_LT(rep.worst_overlap_ratio, 1.0L);
  EXPECT_EQ(lambda_strong(two_triangles_with_bridge()).lambda.lambda,
            (std::vector<double>{2, 2, 2, 2, 2, 2, 1}));
}

TEST(Certificates, EverySchemeOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 4 + seed % 9;
    const std::size_t m = std::min<std::size_t>(n * (n - 1) / 2, n + seed % (2 * n));
    const Graph weighted = random_connected(n, m, seed, 1 + seed % 100);
    for (Scheme s : kAllSchemes) {
      const Graph unit = weighted.with_unit_weights();
      const Graph& input = s == Scheme::ni ? unit : weighted;
      const SchemeResult r = compute_scheme(s, input);
      const CertificateReport rep = check_certificate(input, r.lambda, r.certificate);
      ASSERT_TRUE(rep.ok()) << scheme_name(s) << " seed " << seed << ": " << rep.containment.size()
                            << " containment, " << rep.pi_connectivity.size() << " pi, "
                            << rep.overlap.size() << " overlap";
    }
  }
}

TEST(SizeBounds, PerScheme) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 40;
    const std::size_t m = std::min<std::size_t>(n * (n - 1) / 2, n - 1 + seed % (4 * n));
    const Graph g = random_connected(n, m, seed, 1 + seed % 50);
    const auto sum_over = [&](const std::vector<double>& lambda) {
      Rational s = 0;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        s += Rational(g.edge(e).w) / exact_rational(lambda[e]);
      }
      return s;
    };
    const auto nn = static_cast<long long>(n);
    EXPECT_LE(sum_over(lambda_standard(g, false).lambda.lambda), nn - 1);
    EXPECT_LE(sum_over(lambda_strong(g, false).lambda.lambda), nn - 1);
    EXPECT_LE(sum_over(lambda_setlambda(g, false).lambda.lambda), 4 * nn);
    const auto r = effective_resistance_all(g);
    long double sum_r = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) sum_r += static_cast<long double>(g.edge(e).w) * r[e];
    EXPECT_LE(sum_r, static_cast<long double>(n - 1) + 1e-6L);
  }
}

// Every e with lambda_e = 2^j, j >= 1, is 2^(j-1)-heavy in the union of
// the buckets F_r with r >= j - 1.
TEST(LambdaSetLambda, SparseConnectivityBound) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 3 + seed % 10;
    const Graph g = random_connected(n, std::min<std::size_t>(n * (n - 1) / 2, 3 * n), seed,
                                     1 + seed % 20);
    const LambdaAssignment l = lambda_setlambda(g, false).lambda;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const int j = l.bucket(e);
      ASSERT_EQ(std::ldexp(1.0, j), l.lambda[e]);
      if (j < 1) continue;
      Graph h(n);
      for (EdgeId f = 0; f < g.edge_count(); ++f) {
        if (l.bucket(f) >= j - 1) h.add_edge(g.edge(f).u, g.edge(f).v, g.edge(f).w);
      }
      ASSERT_GE(max_flow(h, g.edge(e).u, g.edge(e).v), Weight{1} << (j - 1)) << "seed " << seed;
    }
  }
}

TEST(LambdaSetLambda, SplitBudget) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 5 + seed % 60;
    const Graph g = random_connected(n, std::min<std::size_t>(n * (n - 1) / 2, 5 * n), seed,
                                     1 + seed % 64);
    std::vector<SetLambdaSplit> trace;
    lambda_setlambda(g, false, &trace);
    ASSERT_FALSE(trace.empty());
    for (const SetLambdaSplit& s : trace) {
      ASSERT_LE(s.level_weight, static_cast<Weight>(s.parts) << (s.level + 1)) << "seed " << seed;
      ASSERT_LE(s.level_weight, static_cast<Weight>(s.super_vertices) << (s.level + 1));
    }
  }
}

TEST(TwoStep, SaturatedProbabilitiesReproduceTheGraph) {
  const Graph g = random_connected(8, 16, 1, 5);
  SamplingParams p;
  p.epsilon = 1.0;
  const Skeleton sk = sparsify_two_step(g, p);
  ASSERT_EQ(sk.edges.size(), g.edge_count());
  for (const SkeletonEdge& e : sk.edges) EXPECT_EQ(e.weight, Rational(g.edge(e.source).w));
  ASSERT_EQ(sk.provenance.stages.size(), 2U);
  EXPECT_EQ(sk.provenance.scheme, "two-step");
  EXPECT_EQ(sk.provenance.stages[0].scheme, "step1");
  EXPECT_EQ(sk.provenance.stages[1].scheme, "setlambda");
  EXPECT_DOUBLE_EQ(sk.provenance.stages[0].epsilon, 1.0 / 3.0);
}

TEST(TwoStep, DeterministicAndMonotone) {
  const Graph g = random_connected(100, 1500, 42);
  SamplingParams p;
  p.epsilon = 1.0;
  p.c0 = 0.02;
  p.seed = 5;
  TwoStepScaling scaling;
  Skeleton stage_one;
  const Skeleton a = sparsify_two_step(g, p, &scaling, &stage_one);
  const Skeleton b = sparsify_two_step(g, p);
  EXPECT_EQ(a.serialize(), b.serialize());
  EXPECT_LE(stage_one.edges.size(), g.edge_count());
  EXPECT_LE(a.edges.size(), stage_one.edges.size());
  EXPECT_GT(a.edges.size(), 0U);
  EXPECT_GE(scaling.scale, 1);
  for (const SkeletonEdge& e : a.edges) {
    EXPECT_EQ(e.u, g.edge(e.source).u);
    EXPECT_EQ(e.v, g.edge(e.source).v);
  }
}

TEST(TwoStep, TotalWeightIsUnbiased) {
  const Graph g = random_connected(30, 200, 9, 3);
  SamplingParams p;
  p.c0 = 0.05;
  const auto total = static_cast<double>(g.total_weight());
  double sum = 0;
  double sq = 0;
  constexpr int kSeeds = 400;
  for (int s = 0; s < kSeeds; ++s) {
    p.seed = static_cast<std::uint64_t>(s);
    double w = 0;
    for (const SkeletonEdge& e : sparsify_two_step(g, p).edges) w += static_cast<double>(e.weight);
    sum += w;
    sq += w * w;
  }
  const double mean = sum / kSeeds;
  const double se = std::sqrt(std::max(0.0, sq / kSeeds - mean * mean) / kSeeds);
  EXPECT_LE(std::abs(mean - total), 4 * se + 1e-6 * total);
}

}  // namespace
}  // namespace cutsparse
