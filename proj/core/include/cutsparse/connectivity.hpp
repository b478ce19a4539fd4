#pragma once

#include <vector>

#include "cutsparse/graph.hpp"

namespace cutsparse {

/// k_e = max-flow between the endpoints of e, computed exactly. Parallel
/// edges between the same pair share one flow computation. Works per
/// component on disconnected graphs.
std::vector<Weight> standard_connectivity_all(const Graph& g);

/// Effective resistance of every edge with edge e acting as a conductance
/// of w_e. Dense grounded-Laplacian inverse, intended for n up to a few
/// thousand. Throws std::invalid_argument on a disconnected graph.
std::vector<double> effective_resistance_all(const Graph& g);

/// Lower bound on strong connectivity from recursive min-cut splitting.
/// Each connected piece H gives its edges the value c(H) (its min cut) when
/// that is larger than what they already have; H is then split along the
/// min cut and both induced sides are processed in turn.
std::vector<Weight> strong_connectivity_all(const Graph& g);

}  // namespace cutsparse
