#pragma once

#include <utility>

#include "cutsparse/graph.hpp"

namespace cutsparse {

/// Exact s-t max-flow of an undirected graph where every edge carries its
/// weight as capacity in both directions (Dinic's algorithm).
Weight max_flow(const Graph& g, Vertex s, Vertex t);

struct MinCut {
  Weight weight = 0;
  CutSide side;
};

/// Global minimum cut (Stoer-Wagner). For a disconnected graph the result
/// has weight 0 and separates the component of vertex 0 from the rest.
/// Throws std::invalid_argument when n < 2.
MinCut global_min_cut(const Graph& g);

/// An edge (u, v) is k-heavy when the max-flow between u and v is >= k.
bool edge_heaviness(const Graph& g, Vertex u, Vertex v, Weight k);

}  // namespace cutsparse
