#include "cutsparse/partition_tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cutsparse {

void PointerTree::link(Node child, Node parent) {
  if (parent_.at(child) != kNil) throw std::logic_error("link: child is not a tree root");
  parent_[child] = parent;
}

std::size_t PointerTree::depth(Node v) const {
  std::size_t d = 0;
  while (parent_[v] != kNil) {
    v = parent_[v];
    ++d;
  }
  return d;
}

PointerTree::Node PointerTree::lca(Node u, Node v) const {
  std::size_t du = depth(u);
  std::size_t dv = depth(v);
  while (du > dv) {
    u = parent_[u];
    --du;
  }
  while (dv > du) {
    v = parent_[v];
    --dv;
  }
  while (u != v) {
    u = parent_[u];
    v = parent_[v];
    if (u == kNil || v == kNil) return kNil;
  }
  return u;
}

PointerTree::Node PointerTree::child_toward(Node ancestor, Node descendant) const {
  Node x = descendant;
  while (x != kNil && parent_[x] != ancestor) x = parent_[x];
  if (x == kNil) throw std::logic_error("child_toward: not an ancestor");
  return x;
}

PointerTree::Node PointerTree::first_at_least(Node x, std::span<const std::int64_t> key,
                                              std::int64_t bound) const {
  if (key[x] < bound) return kNil;
  while (parent_[x] != kNil && key[parent_[x]] >= bound) x = parent_[x];
  return x;
}

template <class Tree>
BasicPartitionTree<Tree>::BasicPartitionTree(std::size_t vertex_count)
    : tree_(vertex_count + 1),
      label_(vertex_count + 1, kLeafLabel),
      parent_(vertex_count + 1, kNil),
      children_(vertex_count + 1),
      slot_(vertex_count + 1, 0),
      leaves_(vertex_count),
      root_(static_cast<Node>(vertex_count)) {
  if (vertex_count == 0) throw std::invalid_argument("partition tree needs at least one vertex");
  label_[root_] = 0;
  for (Node leaf = 0; leaf < vertex_count; ++leaf) attach(leaf, root_);
}

template <class Tree>
typename BasicPartitionTree<Tree>::Node BasicPartitionTree<Tree>::new_internal(ForestIndex label) {
  const Node x = tree_.add_node();
  label_.push_back(label);
  parent_.push_back(kNil);
  children_.emplace_back();
  slot_.push_back(0);
  return x;
}

template <class Tree>
void BasicPartitionTree<Tree>::attach(Node child, Node parent) {
  parent_[child] = parent;
  slot_[child] = children_[parent].size();
  children_[parent].push_back(child);
  tree_.link(child, parent);
}

template <class Tree>
void BasicPartitionTree<Tree>::detach(Node child) {
  const Node p = parent_[child];
  auto& siblings = children_[p];
  const std::size_t at = slot_[child];
  siblings[at] = siblings.back();
  slot_[siblings[at]] = at;
  siblings.pop_back();
  parent_[child] = kNil;
  tree_.cut(child);
}

template <class Tree>
typename BasicPartitionTree<Tree>::Node BasicPartitionTree<Tree>::absorb(Node a, Node b) {
  const bool keep_a = children_[a].size() >= children_[b].size();
  const Node keep = keep_a ? a : b;
  const Node gone = keep_a ? b : a;
  const std::vector<Node> moving(children_[gone].begin(), children_[gone].end());
  for (Node c : moving) {
    detach(c);
    attach(c, keep);
  }
  return keep;
}

template <class Tree>
ForestIndex BasicPartitionTree<Tree>::connectivity(Vertex u, Vertex v) {
  if (u >= leaves_ || v >= leaves_) throw std::out_of_range("vertex outside partition tree");
  if (u == v) throw std::invalid_argument("connectivity needs distinct vertices");
  return label_[tree_.lca(u, v)];
}

template <class Tree>
ForestIndex BasicPartitionTree<Tree>::insert_edge(Vertex u, Vertex v, Weight w) {
  if (u >= leaves_ || v >= leaves_) throw std::out_of_range("vertex outside partition tree");
  if (u == v) throw std::invalid_argument("insert_edge: self-loop");
  if (w < 1) throw std::invalid_argument("insert_edge: weight must be >= 1");
  if (w > last_weight_) {
    throw std::invalid_argument("insert_edge: weight " + std::to_string(w) +
                                " arrives after smaller weight " + std::to_string(last_weight_));
  }
  const Node z = tree_.lca(u, v);
  const ForestIndex base = label_[z];
  ForestIndex raised = 0;
  if (__builtin_add_overflow(base, w, &raised) || raised == kLeafLabel) {
    throw std::overflow_error("forest index overflows 64-bit integer");
  }
  // Both root paths below z are merged by label up to `raised`. A pair whose
  // sides branch off at labels la and lb becomes connected in
  // min(la, lb, raised) forests, so the two subtrees reaching `raised` end up
  // below one node. Runs of one side are spliced whole.
  const Node top_a = tree_.first_at_least(u, label_, raised);
  const Node top_b = tree_.first_at_least(v, label_, raised);
  Node head_a = tree_.child_toward(z, u);
  Node head_b = tree_.child_toward(z, v);
  detach(head_a);
  detach(head_b);
  Node at = z;
  auto splice_run = [&](Node& head, Node leaf, ForestIndex bound) {
    const Node next = tree_.first_at_least(leaf, label_, bound);
    const Node last = parent_[next];
    detach(next);
    attach(head, at);
    at = last;
    head = next;
  };
  while (head_a != top_a || head_b != top_b) {
    const ForestIndex la = head_a != top_a ? label_[head_a] : raised;
    const ForestIndex lb = head_b != top_b ? label_[head_b] : raised;
    if (la < lb) {
      splice_run(head_a, u, lb);
    } else if (lb < la) {
      splice_run(head_b, v, la);
    } else {
      const Node next_a = tree_.child_toward(head_a, u);
      const Node next_b = tree_.child_toward(head_b, v);
      detach(next_a);
      detach(next_b);
      const Node fused = absorb(head_a, head_b);
      attach(fused, at);
      at = fused;
      head_a = next_a;
      head_b = next_b;
    }
  }

  Node bottom = kNil;
  if (label_[top_a] == raised && label_[top_b] == raised) {
    bottom = absorb(top_a, top_b);
    ++counts_[static_cast<std::size_t>(Modification::merge)];
  } else if (label_[top_a] == raised) {
    attach(top_b, top_a);
    bottom = top_a;
    ++counts_[static_cast<std::size_t>(Modification::reparent)];
  } else if (label_[top_b] == raised) {
    attach(top_a, top_b);
    bottom = top_b;
    ++counts_[static_cast<std::size_t>(Modification::reparent)];
  } else {
    bottom = new_internal(raised);
    attach(top_a, bottom);
    attach(top_b, bottom);
    ++counts_[static_cast<std::size_t>(Modification::new_node)];
  }
  attach(bottom, at);
  last_weight_ = w;
  return base + 1;
}

template <class Tree>
bool BasicPartitionTree<Tree>::invariants_hold() const {
  std::size_t leaves_seen = 0;
  std::vector<Node> stack{root_};
  if (parent_[root_] != kNil) return false;
  while (!stack.empty()) {
    const Node x = stack.back();
    stack.pop_back();
    if (x < leaves_) {
      ++leaves_seen;
      if (!children_[x].empty()) return false;
      continue;
    }
    if (children_[x].empty()) return false;
    for (std::size_t i = 0; i < children_[x].size(); ++i) {
      const Node c = children_[x][i];
      if (parent_[c] != x || slot_[c] != i) return false;
      if (label_[c] <= label_[x]) return false;
      stack.push_back(c);
    }
  }
  return leaves_seen == leaves_;
}

template class BasicPartitionTree<LinkCutTree>;
template class BasicPartitionTree<PointerTree>;

std::vector<EdgeId> decreasing_weight_order(const Graph& g) {
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return g.edge(a).w > g.edge(b).w; });
  return order;
}

namespace {

template <class Tree>
NIDecomposition decompose_with(const Graph& g) {
  (void)g.total_weight();
  BasicPartitionTree<Tree> tree(g.vertex_count());
  std::vector<ForestIndex> first(g.edge_count(), 0);
  for (EdgeId e : decreasing_weight_order(g)) {
    const Edge& ed = g.edge(e);
    first[e] = tree.insert_edge(ed.u, ed.v, ed.w);
  }
  return NIDecomposition(g.vertex_count(), g.edges(), std::move(first),
                         ForestOrder::decreasing_weight);
}

}  // namespace

NIDecomposition decompose_decreasing(const Graph& g) { return decompose_with<LinkCutTree>(g); }

NIDecomposition decompose_decreasing_reference(const Graph& g) {
  return decompose_with<PointerTree>(g);
}

std::map<std::int64_t, std::size_t> partition_ratio_buckets(const NIDecomposition& d) {
  std::map<std::int64_t, std::size_t> out;
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    const Weight w = d.edges()[e].w;
    // ceil(i / w) - 1; i + w - 1 is the last index, which is known to fit.
    ++out[d.last_index(e) / w - 1];
  }
  return out;
}

}  // namespace cutsparse
