#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutsparse {

using Vertex = std::uint32_t;
using Weight = std::int64_t;
using EdgeId = std::size_t;

/// Thrown when a brute-force routine is asked to run above its size guard.
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct Edge {
  Vertex u;
  Vertex v;
  Weight w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Integer-weighted undirected multigraph. Parallel edges are allowed,
/// self-loops are not. Edge ids are stable indices into edges().
///
/// A weight w stands for w unit parallel copies; routines that reason about
/// the expanded multigraph never materialize it.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  EdgeId add_edge(Vertex u, Vertex v, Weight w = 1);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// Ids of the edges incident to v, in edge-list order.
  std::span<const EdgeId> incident(Vertex v) const { return adjacency_.at(v); }

  /// Sum of all weights; throws std::overflow_error if it does not fit.
  Weight total_weight() const;
  bool has_unit_weights() const noexcept;

  /// Weighted degree of v (checked).
  Weight degree(Vertex v) const;

  /// Same topology with every weight replaced by 1.
  Graph with_unit_weights() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adjacency_;
};

/// One side of a proper cut. Stored canonically as the side that does not
/// contain vertex 0, so a side and its complement compare equal.
class CutSide {
 public:
  CutSide(std::size_t vertex_count, std::span<const Vertex> members);

  /// Bit v of mask set means v is on the stored side. Requires n <= 64.
  static CutSide from_mask(std::size_t vertex_count, std::uint64_t mask);

  std::size_t vertex_count() const noexcept { return in_side_.size(); }
  bool contains(Vertex v) const { return in_side_.at(v); }
  std::vector<Vertex> members() const;
  std::size_t size() const noexcept;

  friend bool operator==(const CutSide&, const CutSide&) = default;

 private:
  CutSide() = default;
  void canonicalize();

  std::vector<bool> in_side_;
};

Weight cut_weight(const Graph& g, const CutSide& cut);

/// Connected component label per vertex; labels are 0..count-1 in order of
/// the smallest vertex in each component.
struct Components {
  std::vector<std::uint32_t> label;
  std::uint32_t count = 0;
};
Components connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Subgraph induced by a vertex subset, relabelled 0..k-1 in the given
/// order. source_edge maps each new edge id back to the original id.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> source_vertex;
  std::vector<EdgeId> source_edge;
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Largest n accepted by enumerate_cuts.
inline constexpr std::size_t kEnumerateCutsMaxVertices = 24;

namespace detail {

inline void check_enumeration_guard(std::size_t n, std::size_t guard) {
  if (n > guard) {
    throw SizeGuardError("cut enumeration needs n <= " + std::to_string(guard) + ", got " +
                         std::to_string(n));
  }
}

/// Walks all 2^(n-1) - 1 canonical proper cuts in Gray-code order. on_flip(v,
/// now_inside) fires before each visit for the single vertex that changed
/// side; on_visit(mask) then sees the current side as a bitmask.
template <class OnFlip, class OnVisit>
void gray_code_cut_walk(std::size_t n, OnFlip&& on_flip, OnVisit&& on_visit) {
  if (n < 2) return;
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  std::uint64_t mask = 0;
  for (std::uint64_t i = 1; i < limit; ++i) {
    const auto bit = static_cast<Vertex>(std::countr_zero(i));
    const Vertex v = bit + 1;
    mask ^= std::uint64_t{1} << v;
    on_flip(v, ((mask >> v) & 1U) != 0);
    on_visit(mask);
  }
}

}  // namespace detail

/// Calls visit(mask, weight) once for every proper canonical cut, where bit
/// v of mask is set iff v lies on the side without vertex 0.
template <class Visitor>
void enumerate_cuts(const Graph& g, Visitor&& visit) {
  const std::size_t n = g.vertex_count();
  detail::check_enumeration_guard(n, kEnumerateCutsMaxVertices);
  (void)g.total_weight();  // every cut weight is bounded by this; throws on overflow
  std::vector<std::uint8_t> inside(n, 0);
  Weight weight = 0;
  detail::gray_code_cut_walk(
      n,
      [&](Vertex v, bool now_inside) {
        inside[v] = now_inside ? 1 : 0;
        for (EdgeId e : g.incident(v)) {
          const Edge& ed = g.edge(e);
          const Vertex other = ed.u == v ? ed.v : ed.u;
          if (inside[other] == inside[v]) {
            weight -= ed.w;
          } else {
            weight += ed.w;
          }
        }
      },
      [&](std::uint64_t mask) { visit(mask, weight); });
}

/// Eager variant for tests and small tools.
std::vector<std::pair<CutSide, Weight>> all_cuts(const Graph& g);

/// Real-weighted edge list, the common currency for comparing a skeleton
/// against its source graph.
struct RealEdge {
  Vertex u;
  Vertex v;
  long double w;
};

struct WeightedGraph {
  std::size_t vertex_count = 0;
  std::vector<RealEdge> edges;

  static WeightedGraph from(const Graph& g);
};

}  // namespace cutsparse
