#pragma once

#include <cstdint>
#include <vector>

#include "cutsparse/graph.hpp"

namespace cutsparse {

using ForestIndex = std::int64_t;

/// How a decomposition was built. Both produce valid Nagamochi-Ibaraki
/// forests but generally different ones.
enum class ForestOrder {
  scan_first,          ///< maximum-adjacency scan, the classic NI labeling
  decreasing_weight,   ///< greedy insertion in non-increasing weight order
};

/// Nagamochi-Ibaraki forest decomposition of the expanded multigraph.
///
/// Edge e (weight w_e) has copies in forests T_{i_e} .. T_{i_e + w_e - 1}.
/// Forests are 1-based; forest_count() is the largest occupied index.
class NIDecomposition {
 public:
  NIDecomposition(std::size_t vertex_count, std::vector<Edge> edges,
                  std::vector<ForestIndex> first_index, ForestOrder order);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  ForestOrder order() const noexcept { return order_; }

  ForestIndex first_index(EdgeId e) const { return first_.at(e); }
  ForestIndex last_index(EdgeId e) const { return first_.at(e) + edges_.at(e).w - 1; }
  const std::vector<ForestIndex>& first_indices() const noexcept { return first_; }
  ForestIndex forest_count() const noexcept { return forest_count_; }

  /// Copies of e that lie in forests [from, to].
  std::int64_t copies_in_range(EdgeId e, ForestIndex from, ForestIndex to) const;

  /// Edge ids with a copy in forest T_j.
  std::vector<EdgeId> forest_edges(ForestIndex j) const;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<ForestIndex> first_;
  ForestIndex forest_count_ = 0;
  ForestOrder order_;
};

/// Linear-time NI labeling of a unit-weight graph. The scan starts at vertex
/// 0, always continues from an unscanned vertex with the most edges into
/// the scanned set (ties: the vertex whose count rose most recently) and
/// walks adjacency lists in edge-list order. Throws std::invalid_argument on
/// a non-unit weight.
NIDecomposition decompose_unweighted(const Graph& g);

/// The same scan run directly on weighted edges; identical to
/// decompose_unweighted on the expanded multigraph whose copies of each edge
/// are listed consecutively.
NIDecomposition decompose_weighted(const Graph& g);

/// Largest j such that u and v are connected in T_j (0 if never). Relies on
/// the prefix property: connectivity in T_j implies connectivity in every
/// earlier forest.
ForestIndex prefix_connectivity(const NIDecomposition& d, Vertex u, Vertex v);

/// Expands every edge into w_e unit copies listed consecutively; the test
/// oracle for decompose_weighted. Returns the expanded graph and, per copy,
/// its source edge id.
std::pair<Graph, std::vector<EdgeId>> expand_multigraph(const Graph& g);

}  // namespace cutsparse
