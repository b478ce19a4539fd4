#include "cutsparse/link_cut_tree.hpp"

#include <stdexcept>

namespace cutsparse {

LinkCutTree::LinkCutTree(std::size_t nodes) : nodes_(nodes) {}

LinkCutTree::Node LinkCutTree::add_node() {
  nodes_.emplace_back();
  return static_cast<Node>(nodes_.size() - 1);
}

bool LinkCutTree::is_splay_root(Node x) const {
  const Node p = nodes_[x].parent;
  return p == kNil || (nodes_[p].child[0] != x && nodes_[p].child[1] != x);
}

void LinkCutTree::rotate(Node x) {
  const Node p = nodes_[x].parent;
  const Node g = nodes_[p].parent;
  const int dir = nodes_[p].child[1] == x ? 1 : 0;
  const Node inner = nodes_[x].child[dir ^ 1];
  if (!is_splay_root(p)) {
    nodes_[g].child[nodes_[g].child[1] == p ? 1 : 0] = x;
  }
  nodes_[x].parent = g;
  nodes_[x].child[dir ^ 1] = p;
  nodes_[p].parent = x;
  nodes_[p].child[dir] = inner;
  if (inner != kNil) nodes_[inner].parent = p;
}

void LinkCutTree::splay(Node x) {
  while (!is_splay_root(x)) {
    const Node p = nodes_[x].parent;
    if (!is_splay_root(p)) {
      const Node g = nodes_[p].parent;
      const bool zigzig = (nodes_[g].child[1] == p) == (nodes_[p].child[1] == x);
      rotate(zigzig ? p : x);
    }
    rotate(x);
  }
}

LinkCutTree::Node LinkCutTree::access(Node x) {
  Node last = kNil;
  for (Node y = x; y != kNil; y = nodes_[y].parent) {
    splay(y);
    nodes_[y].child[1] = last;
    last = y;
  }
  splay(x);
  return last;
}

void LinkCutTree::link(Node child, Node parent) {
  access(child);
  if (nodes_[child].child[0] != kNil) throw std::logic_error("link: child is not a tree root");
  if (find_root(parent) == child) throw std::logic_error("link: nodes already share a tree");
  access(child);
  nodes_[child].parent = parent;
}

void LinkCutTree::cut(Node v) {
  access(v);
  const Node above = nodes_[v].child[0];
  if (above == kNil) return;
  nodes_[above].parent = kNil;
  nodes_[v].child[0] = kNil;
}

LinkCutTree::Node LinkCutTree::lca(Node u, Node v) {
  if (u == v) return u;
  if (find_root(u) != find_root(v)) return kNil;
  access(u);
  return access(v);
}

LinkCutTree::Node LinkCutTree::child_toward(Node ancestor, Node descendant) {
  if (ancestor == descendant) throw std::logic_error("child_toward: node is its own ancestor");
  access(descendant);
  splay(ancestor);
  // After access(descendant) the root path is one splay tree; the deeper
  // part of it sits right of `ancestor`, and its shallowest node is the child.
  Node y = nodes_[ancestor].child[1];
  if (y == kNil) throw std::logic_error("child_toward: not an ancestor");
  while (nodes_[y].child[0] != kNil) y = nodes_[y].child[0];
  splay(y);
  return y;
}

LinkCutTree::Node LinkCutTree::find_root(Node v) {
  access(v);
  Node r = v;
  while (nodes_[r].child[0] != kNil) r = nodes_[r].child[0];
  splay(r);
  return r;
}

LinkCutTree::Node LinkCutTree::first_at_least(Node x, std::span<const std::int64_t> key,
                                               std::int64_t bound) {
  access(x);
  // In-order position along the root path is depth, so keys are sorted.
  Node found = kNil;
  Node y = x;
  Node last = x;
  while (y != kNil) {
    last = y;
    if (key[y] >= bound) {
      found = y;
      y = nodes_[y].child[0];
    } else {
      y = nodes_[y].child[1];
    }
  }
  splay(found != kNil ? found : last);
  return found;
}

}  // namespace cutsparse
