#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cutsparse/graph.hpp"
#include "cutsparse/ni_forest.hpp"

namespace cutsparse {

struct CutBandStats {
  std::size_t cuts = 0;
  long double max_rel_error = 0;
};

/// Cut-preservation summary of a skeleton against its source graph.
struct VerificationReport {
  long double max_rel_error = 0;
  std::vector<Vertex> argmax_cut;  ///< side without vertex 0
  std::size_t cuts_checked = 0;
  std::size_t failures = 0;        ///< cuts with error above the threshold
  double threshold = 0;
  /// Keyed by floor(lg c) of the source cut weight c.
  std::map<int, CutBandStats> by_weight_band;
  double runtime_ms = 0;
};

inline constexpr std::size_t kExactCutsMaxVertices = 20;

/// Every proper cut: error |c_hat - c| / c (0 when both are 0, infinite
/// when only c is 0). Throws SizeGuardError above 20 vertices and
/// std::invalid_argument on a vertex-count mismatch.
VerificationReport exact_cut_errors(const Graph& g, const WeightedGraph& skeleton,
                                    double threshold = 0.0);

/// All n degree cuts, the global min cut of g and `trials` uniform random
/// proper bipartitions drawn from `seed`. The cut list is fixed before any
/// work is split across `threads`, so results do not depend on it.
VerificationReport sampled_cut_errors(const Graph& g, const WeightedGraph& skeleton,
                                      std::size_t trials, std::uint64_t seed,
                                      double threshold = 0.0, unsigned threads = 1);

inline constexpr std::size_t kProjectionMaxVertices = 14;

struct ProjectionCount {
  std::size_t projections = 0;   ///< distinct k-projections
  std::size_t cuts = 0;          ///< cuts of weight <= alpha k
  Weight min_cut = 0;
};

/// Distinct sets of k-heavy edges among cuts of weight at most alpha * k.
/// Throws std::domain_error when k is below the global min cut or alpha < 1.
ProjectionCount count_k_projections(const Graph& g, Weight k, double alpha);

/// 2 exp(-0.38 eps^2 p N).
double chernoff_upper_bound(double epsilon, double p, double n);
/// Upper tail P[sum > (1 + eps) N]: exp(-0.38 eps^2 p N) for eps < 1,
/// exp(-0.38 eps p N) otherwise.
double chernoff_upper_tail(double epsilon, double p, double n);
/// Lower tail P[sum < (1 - eps) N]: exp(-0.5 eps^2 p N) for eps < 1, 0 otherwise.
double chernoff_lower_tail(double epsilon, double p, double n);

/// Fraction of `trials` simulations in which |sum X_e - |C|| > eps N, where
/// X_e = 1/p_e with probability p_e. Edges with equal p_e are drawn
/// together as one binomial.
double monte_carlo_tail(const std::vector<double>& p, double epsilon, double n_scale,
                        std::uint64_t trials, std::uint64_t seed);

/// Largest value of f(x) - bound(x) over the grid x = i * step, where
/// f(x) = x - (1 + x) ln(1 + x), bound = (1 - 2 ln 2) x^2 on (0, 1) and
/// (1 - 2 ln 2) x on [1, 100].
double scan_ineq_f(double step);

inline constexpr Weight kNaiveDecomposeMaxWeight = 1'000'000;

/// Explicit forests, one union-find per index, edges in non-increasing
/// weight order with ties by id.
NIDecomposition naive_decompose_decreasing(const Graph& g);

}  // namespace cutsparse
