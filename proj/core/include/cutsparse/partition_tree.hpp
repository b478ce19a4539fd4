#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "cutsparse/graph.hpp"
#include "cutsparse/link_cut_tree.hpp"
#include "cutsparse/ni_forest.hpp"

namespace cutsparse {

/// Plain parent-pointer forest with the LinkCutTree interface. LCA walks
/// to the root, so it costs O(depth); it exists as a differential twin.
class PointerTree {
 public:
  using Node = std::uint32_t;
  static constexpr Node kNil = UINT32_MAX;

  explicit PointerTree(std::size_t nodes = 0) : parent_(nodes, kNil) {}

  Node add_node() {
    parent_.push_back(kNil);
    return static_cast<Node>(parent_.size() - 1);
  }
  std::size_t size() const noexcept { return parent_.size(); }
  void link(Node child, Node parent);
  void cut(Node v) { parent_.at(v) = kNil; }
  Node lca(Node u, Node v) const;
  Node child_toward(Node ancestor, Node descendant) const;
  Node first_at_least(Node x, std::span<const std::int64_t> key, std::int64_t bound) const;

 private:
  std::size_t depth(Node v) const;
  std::vector<Node> parent_;
};

/// Encodes NI-forest prefix connectivity under non-increasing-weight edge
/// insertion. Leaves 0..n-1 are the graph vertices; for leaves x, y with
/// z = lca(x, y), x and y are connected in exactly the first label(z)
/// forests. Labels strictly increase from parent to child.
template <class Tree>
class BasicPartitionTree {
 public:
  using Node = std::uint32_t;
  static constexpr ForestIndex kLeafLabel = std::numeric_limits<ForestIndex>::max();

  enum class Modification { merge = 0, reparent = 1, new_node = 2 };

  explicit BasicPartitionTree(std::size_t vertex_count);

  /// Inserts w copies of (u, v) into the first forests where u and v are
  /// disconnected and returns the first such index. Weights must arrive in
  /// non-increasing order.
  ForestIndex insert_edge(Vertex u, Vertex v, Weight w);

  /// Number of forests in which u and v are connected.
  ForestIndex connectivity(Vertex u, Vertex v);
  ForestIndex first_forest(Vertex u, Vertex v) { return connectivity(u, v) + 1; }

  std::size_t leaf_count() const noexcept { return leaves_; }
  Node root() const noexcept { return root_; }
  ForestIndex label(Node x) const { return label_.at(x); }
  Node parent(Node x) const { return parent_.at(x); }
  std::span<const Node> children(Node x) const { return children_.at(x); }

  /// Checks child label > parent label and parent/child consistency over the
  /// live tree.
  bool invariants_hold() const;

  const std::array<std::size_t, 3>& modification_counts() const noexcept { return counts_; }

 private:
  static constexpr Node kNil = UINT32_MAX;

  Node new_internal(ForestIndex label);
  void attach(Node child, Node parent);
  void detach(Node child);
  /// Moves the children of the node with fewer children onto the other,
  /// which is returned; both must be detached from their parents.
  Node absorb(Node a, Node b);

  Tree tree_;
  std::vector<ForestIndex> label_;
  std::vector<Node> parent_;
  std::vector<std::vector<Node>> children_;
  std::vector<std::size_t> slot_;  // position of a node in its parent's child list
  std::size_t leaves_;
  Node root_;
  Weight last_weight_ = std::numeric_limits<Weight>::max();
  std::array<std::size_t, 3> counts_{};
};

using PartitionTree = BasicPartitionTree<LinkCutTree>;
using ReferencePartitionTree = BasicPartitionTree<PointerTree>;

/// NI forests with edges inserted in non-increasing weight order (ties by
/// ascending edge id), driven by the link-cut-backed partition tree.
NIDecomposition decompose_decreasing(const Graph& g);

/// Same insertion sequence over the pointer-walking twin.
NIDecomposition decompose_decreasing_reference(const Graph& g);

/// The insertion order used by both decreasing decompositions.
std::vector<EdgeId> decreasing_weight_order(const Graph& g);

/// Groups edges by j with j < i_e / w_e <= j + 1; returns |S_j| per j.
std::map<std::int64_t, std::size_t> partition_ratio_buckets(const NIDecomposition& d);

}  // namespace cutsparse
