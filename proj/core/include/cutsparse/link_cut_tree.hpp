#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cutsparse {

/// Rooted forest with Link, Cut and LCA in O(log n) amortized time
/// (Sleator-Tarjan link-cut trees over splay trees). Nodes are dense
/// integer ids; add_node() grows the forest with a new singleton.
class LinkCutTree {
 public:
  using Node = std::uint32_t;
  static constexpr Node kNil = UINT32_MAX;

  explicit LinkCutTree(std::size_t nodes = 0);

  Node add_node();
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Makes root `child` a child of `parent`; they must be in different trees.
  void link(Node child, Node parent);
  /// Detaches v (with its subtree) from its parent. No-op on a root.
  void cut(Node v);
  /// Lowest common ancestor; kNil when u and v are in different trees.
  Node lca(Node u, Node v);
  /// The child of `ancestor` on the path down to `descendant`.
  Node child_toward(Node ancestor, Node descendant);
  Node find_root(Node v);
  /// Shallowest node on the root path of x whose key is at least `bound`,
  /// or kNil. Keys must strictly increase from parent to child.
  Node first_at_least(Node x, std::span<const std::int64_t> key, std::int64_t bound);

 private:
  struct Splay {
    Node parent = kNil;  // splay parent, or path-parent when this is a splay root
    Node child[2] = {kNil, kNil};
  };

  bool is_splay_root(Node x) const;
  void rotate(Node x);
  void splay(Node x);
  Node access(Node x);

  std::vector<Splay> nodes_;
};

}  // namespace cutsparse
