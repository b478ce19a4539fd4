#pragma once

#include <vector>

#include "cutsparse/graph.hpp"
#include "cutsparse/sampler.hpp"

namespace cutsparse {

/// A lambda assignment and, when requested, a (pi, alpha)-certificate that
/// witnesses it. Certificates cost O(m log W) memory and time, so large
/// runs skip them.
struct SchemeResult {
  LambdaAssignment lambda;
  Certificate certificate;
};

/// lambda_e = NI forest index, alpha = 2. Unit weights only.
SchemeResult lambda_ni_unweighted(const Graph& g, bool with_certificate = true);

/// lambda_e = last NI forest holding a copy of e, alpha = 2.
SchemeResult lambda_step1(const Graph& g, bool with_certificate = true);

/// One accepted threshold test of SetLambda: at `level`, a piece whose
/// contraction has `super_vertices` vertices accepted `level_weight` of edge
/// weight and fell apart into `parts` pieces.
struct SetLambdaSplit {
  int level;
  std::size_t super_vertices;
  std::size_t parts;
  Weight level_weight;
};

/// Powers-of-two lambda from the recursive threshold/shrink procedure,
/// alpha = 4, pi = 2^k. Pieces with a single vertex are dropped.
SchemeResult lambda_setlambda(const Graph& g, bool with_certificate = true,
                              std::vector<SetLambdaSplit>* trace = nullptr);

/// lambda_e = first forest index under decreasing-weight insertion, alpha = 2.
SchemeResult lambda_decreasing(const Graph& g, bool with_certificate = true);

/// lambda_e = standard connectivity, alpha = 3 + lg n. Connected graphs only.
SchemeResult lambda_standard(const Graph& g, bool with_certificate = true);

/// lambda_e = 1 / R_e, alpha = 3 + lg n. Connected graphs only.
SchemeResult lambda_resistance(const Graph& g, bool with_certificate = true);

/// lambda_e = recursive min-cut strong connectivity bound, alpha = 1,
/// pi = 2^k. Connected graphs only.
SchemeResult lambda_strong(const Graph& g, bool with_certificate = true);

SchemeResult compute_scheme(Scheme s, const Graph& g, bool with_certificate = true);

/// Lambda from `s`, then one sampling pass with `params`.
Skeleton sparsify(const Graph& g, Scheme s, const SamplingParams& params);

/// How the stage-one skeleton was turned back into an integer graph.
struct TwoStepScaling {
  Rational scale;     ///< integer weight = skeleton weight * scale (before rounding)
  bool rounded = false;
};

/// Step-1 sampling at epsilon / 3, uniform rescale to integers, SetLambda
/// sampling at epsilon / 3 and rescale back. Stage two draws from a seed
/// derived from params.seed.
Skeleton sparsify_two_step(const Graph& g, const SamplingParams& params,
                           TwoStepScaling* scaling = nullptr,
                           Skeleton* stage_one = nullptr);

}  // namespace cutsparse
