#include <gtest/gtest.h>

#include <cmath>

#include "cutsparse/generators.hpp"
#include "cutsparse/random.hpp"
#include "cutsparse/sampler.hpp"
#include "cutsparse/schemes.hpp"

namespace cutsparse {
namespace {

SamplingParams params_with(double eps, double c0 = kDefaultC0, std::uint64_t seed = 0) {
  SamplingParams p;
  p.epsilon = eps;
  p.c0 = c0;
  p.seed = seed;
  return p;
}

LambdaAssignment constant_lambda(const Graph& g, double value, double alpha = 2.0) {
  return {Scheme::ni, alpha, std::vector<double>(g.edge_count(), value)};
}

TEST(EdgeProbability, Examples) {
  EXPECT_EQ(edge_probability(8, 16, 2, params_with(0.5)), 1.0);
  const double expected = kDefaultC0 * 2 * std::log(16.0) / 1e6;
  EXPECT_NEAR(edge_probability(1e6, 16, 2, params_with(1.0)), expected, 1e-15);
  EXPECT_NEAR(expected, 1.4009e-3, 1e-7);
  EXPECT_THROW(edge_probability(4, 16, 2, params_with(1.0, 0.0)), std::domain_error);
  EXPECT_THROW(edge_probability(0, 16, 2, params_with(1.0)), std::domain_error);
  EXPECT_THROW(edge_probability(4, 16, 2, params_with(1.5)), std::domain_error);
}

TEST(BinomialSample, Examples) {
  SplitMix64 rng(1);
  EXPECT_EQ(binomial_sample(5, 1.0, rng), 5);
  EXPECT_EQ(binomial_sample(0, 0.3, rng), 0);
  EXPECT_EQ(binomial_sample(7, 0.0, rng), 0);
  EXPECT_THROW(binomial_sample(3, 1.5, rng), std::domain_error);
  EXPECT_THROW(binomial_sample(3, -0.1, rng), std::domain_error);
}

TEST(BinomialSample, MeanOfRareEvents) {
  SplitMix64 rng(2024);
  double sum = 0;
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) sum += static_cast<double>(binomial_sample(1000000, 1e-6, rng));
  const double mean = sum / kDraws;
  EXPECT_GE(mean, 0.97);
  EXPECT_LE(mean, 1.03);
}

TEST(BinomialSample, MeanAndVarianceAcrossRegimes) {
  for (const auto& [n, p] : std::vector<std::pair<std::int64_t, double>>{
           {20, 0.5}, {1000, 0.02}, {50, 0.97}, {100000, 0.3}}) {
    SplitMix64 rng(static_cast<std::uint64_t>(n));
    constexpr int kDraws = 20000;
    double sum = 0;
    double sq = 0;
    for (int i = 0; i < kDraws; ++i) {
      const auto x = static_cast<double>(binomial_sample(n, p, rng));
      ASSERT_GE(x, 0);
      ASSERT_LE(x, static_cast<double>(n));
      sum += x;
      sq += x * x;
    }
    const double mean = sum / kDraws;
    const double var = sq / kDraws - mean * mean;
    const double true_var = static_cast<double>(n) * p * (1 - p);
    EXPECT_NEAR(mean, static_cast<double>(n) * p, 5 * std::sqrt(true_var / kDraws)) << n << "," << p;
    EXPECT_NEAR(var, true_var, 0.1 * true_var) << n << "," << p;
  }
}

TEST(ExactRational, RoundTrips) {
  for (double x : {1.0, 0.1, 1.4009e-3, 3.0e-300, 12345.678}) {
    const Rational r = exact_rational(x);
    EXPECT_EQ(static_cast<double>(r), x);
  }
  EXPECT_EQ(exact_rational(0.375), Rational(3, 8));
  EXPECT_THROW(exact_rational(0.0), std::domain_error);
}

TEST(SampleSkeleton, FullProbabilityReproducesGraph) {
  const Graph g = random_connected(10, 25, 4, 9);
  const Skeleton sk = sample_skeleton(g, constant_lambda(g, 1.0), params_with(1.0));
  ASSERT_EQ(sk.edges.size(), g.edge_count());
  for (const SkeletonEdge& e : sk.edges) {
    EXPECT_EQ(e.weight, Rational(g.edge(e.source).w));
    EXPECT_EQ(e.count, g.edge(e.source).w);
    EXPECT_EQ(e.p, 1.0);
  }
}

TEST(SampleSkeleton, LambdaRangeAndCoverage) {
  const Graph g = cycle_graph(4);
  EXPECT_THROW(sample_skeleton(g, constant_lambda(g, 16.0), params_with(1.0)), std::out_of_range);
  EXPECT_NO_THROW(sample_skeleton(g, constant_lambda(g, 15.0), params_with(1.0)));
  LambdaAssignment short_lambda = constant_lambda(g, 1.0);
  short_lambda.lambda.pop_back();
  EXPECT_THROW(sample_skeleton(g, short_lambda, params_with(1.0)), std::invalid_argument);
}

TEST(SampleSkeleton, DeterministicAndExactWeights) {
  const Graph g = random_connected(40, 300, 8, 20);
  const LambdaAssignment lambda = lambda_step1(g, false).lambda;
  const SamplingParams p = params_with(0.5, 0.05, 99);
  const Skeleton a = sample_skeleton(g, lambda, p);
  const Skeleton b = sample_skeleton(g, lambda, p);
  EXPECT_EQ(a.serialize(), b.serialize());
  EXPECT_NE(a.serialize(), sample_skeleton(g, lambda, params_with(0.5, 0.05, 100)).serialize());
  for (const SkeletonEdge& e : a.edges) {
    EXPECT_GT(e.count, 0);
    EXPECT_LE(e.count, g.edge(e.source).w);
    EXPECT_EQ(e.weight * exact_rational(e.p), Rational(e.count));
  }
}

TEST(SampleSkeleton, SerializationAndProvenance) {
  Graph g(2);
  g.add_edge(0, 1, 3);
  const Skeleton sk = sample_skeleton(g, constant_lambda(g, 1.0), params_with(1.0, kDefaultC0, 7));
  EXPECT_EQ(sk.serialize(), "2 1\n0 1 3/1\n");
  const std::string json = provenance_json(sk.provenance);
  EXPECT_NE(json.find("\"scheme\": \"ni\""), std::string::npos);
  EXPECT_NE(json.find("\"seed\": 7"), std::string::npos);
}

TEST(SampleSkeleton, DistinctEdgeExpectationOnK4) {
  const Graph g = complete_graph(4);
  const LambdaAssignment lambda = lambda_ni_unweighted(g, false).lambda;
  SamplingParams p = params_with(1.0, 0.05);
  p.alpha = 2.0;
  const double analytic = expected_skeleton_size(g, lambda, p).distinct_edges;
  double total = 0;
  constexpr int kSeeds = 10000;
  for (int s = 0; s < kSeeds; ++s) {
    p.seed = static_cast<std::uint64_t>(s);
    total += static_cast<double>(sample_skeleton(g, lambda, p).edges.size());
  }
  const double mean = total / kSeeds;
  EXPECT_NEAR(mean, analytic, 0.05 * analytic);
  EXPECT_LE(mean, expected_skeleton_size(g, lambda, p).sum_wp * 1.05);
}

// Every fixed cut keeps its weight in expectation: sum of w_e p_e / p_e.
TEST(SampleSkeleton, CutWeightsAreUnbiased) {
  const Graph g = random_connected(12, 40, 3, 6);
  const LambdaAssignment lambda = lambda_step1(g, false).lambda;
  SamplingParams p = params_with(1.0, 0.02);
  const CutSide side = CutSide::from_mask(12, 0b101101010110);
  const auto c = static_cast<double>(cut_weight(g, side));
  double sum = 0;
  double sq = 0;
  constexpr int kSeeds = 10000;
  for (int s = 0; s < kSeeds; ++s) {
    p.seed = static_cast<std::uint64_t>(s);
    const Skeleton sk = sample_skeleton(g, lambda, p);
    double hat = 0;
    for (const SkeletonEdge& e : sk.edges) {
      if (side.contains(e.u) != side.contains(e.v)) hat += static_cast<double>(e.weight);
    }
    sum += hat;
    sq += hat * hat;
  }
  const double mean = sum / kSeeds;
  const double se = std::sqrt((sq / kSeeds - mean * mean) / kSeeds);
  EXPECT_LE(std::abs(mean - c), 3 * se + 1e-9);
}

TEST(ExpectedSize, Examples) {
  const Graph k4 = complete_graph(4);
  const LambdaAssignment lambda = lambda_ni_unweighted(k4, false).lambda;
  const ExpectedSize e = expected_skeleton_size(k4, lambda, params_with(1.0));
  EXPECT_DOUBLE_EQ(e.distinct_edges, 6.0);
  EXPECT_DOUBLE_EQ(e.sum_wp, 6.0);
  EXPECT_NEAR(e.sum_w_over_lambda, 13.0 / 3.0, 1e-12);
}

TEST(SchemeNames, RoundTrip) {
  for (Scheme s : {Scheme::ni, Scheme::step1, Scheme::setlambda, Scheme::decreasing,
                   Scheme::standard, Scheme::resistance, Scheme::strong}) {
    EXPECT_EQ(parse_scheme(scheme_name(s)), s);
  }
  EXPECT_EQ(parse_scheme("standard"), Scheme::standard);
  EXPECT_THROW(parse_scheme("bogus"), std::invalid_argument);
}

}  // namespace
}  // namespace cutsparse
