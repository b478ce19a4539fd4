#include "cutsparse/ni_forest.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace cutsparse {

NIDecomposition::NIDecomposition(std::size_t vertex_count, std::vector<Edge> edges,
                                 std::vector<ForestIndex> first_index, ForestOrder order)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      first_(std::move(first_index)),
      order_(order) {
  if (edges_.size() != first_.size()) {
    throw std::invalid_argument("one first index per edge is required");
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (first_[e] < 1) throw std::invalid_argument("forest indices are 1-based");
    ForestIndex last = 0;
    if (__builtin_add_overflow(first_[e], edges_[e].w - 1, &last)) {
      throw std::overflow_error("forest index overflows 64-bit integer");
    }
    forest_count_ = std::max(forest_count_, last);
  }
}

std::int64_t NIDecomposition::copies_in_range(EdgeId e, ForestIndex from, ForestIndex to) const {
  const ForestIndex lo = std::max(from, first_index(e));
  const ForestIndex hi = std::min(to, last_index(e));
  return hi >= lo ? hi - lo + 1 : 0;
}

std::vector<EdgeId> NIDecomposition::forest_edges(ForestIndex j) const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (first_index(e) <= j && j <= last_index(e)) out.push_back(e);
  }
  return out;
}

namespace {

/// Max-bucket queue with LIFO order inside a bucket. Keys only grow, so the
/// max pointer moves down at most as often as keys are raised.
class BucketQueue {
 public:
  explicit BucketQueue(std::size_t n) : key_(n, 0), prev_(n, kNone), next_(n, kNone), head_(1, kNone) {
    for (std::size_t v = n; v-- > 0;) push_front(static_cast<Vertex>(v), 0);
  }

  std::int64_t key(Vertex v) const { return key_[v]; }

  Vertex pop_max() {
    while (head_[top_] == kNone) --top_;
    const Vertex v = head_[top_];
    unlink(v);
    return v;
  }

  void raise(Vertex v) {
    unlink(v);
    const std::int64_t k = ++key_[v];
    if (static_cast<std::size_t>(k) >= head_.size()) head_.resize(k + 1, kNone);
    push_front(v, k);
    top_ = std::max<std::size_t>(top_, static_cast<std::size_t>(k));
  }

 private:
  static constexpr Vertex kNone = UINT32_MAX;

  void push_front(Vertex v, std::int64_t k) {
    const Vertex h = head_[k];
    prev_[v] = kNone;
    next_[v] = h;
    if (h != kNone) prev_[h] = v;
    head_[k] = v;
  }

  void unlink(Vertex v) {
    const std::int64_t k = key_[v];
    if (prev_[v] != kNone) {
      next_[prev_[v]] = next_[v];
    } else {
      head_[k] = next_[v];
    }
    if (next_[v] != kNone) prev_[next_[v]] = prev_[v];
    prev_[v] = next_[v] = kNone;
  }

  std::vector<std::int64_t> key_;
  std::vector<Vertex> prev_;
  std::vector<Vertex> next_;
  std::vector<Vertex> head_;
  std::size_t top_ = 0;
};

}  // namespace

NIDecomposition decompose_unweighted(const Graph& g) {
  if (!g.has_unit_weights()) {
    throw std::invalid_argument("decompose_unweighted requires unit weights");
  }
  const std::size_t n = g.vertex_count();
  std::vector<ForestIndex> first(g.edge_count(), 0);
  std::vector<bool> scanned(n, false);
  BucketQueue queue(n);
  for (std::size_t step = 0; step < n; ++step) {
    const Vertex x = queue.pop_max();
    scanned[x] = true;
    for (EdgeId e : g.incident(x)) {
      const Edge& ed = g.edge(e);
      const Vertex y = ed.u == x ? ed.v : ed.u;
      if (scanned[y]) continue;
      first[e] = queue.key(y) + 1;
      queue.raise(y);
    }
  }
  return NIDecomposition(n, g.edges(), std::move(first), ForestOrder::scan_first);
}

NIDecomposition decompose_weighted(const Graph& g) {
  if (g.has_unit_weights()) return decompose_unweighted(g);
  const std::size_t n = g.vertex_count();
  (void)g.total_weight();  // attachment counts stay below this

  std::vector<ForestIndex> first(g.edge_count(), 0);
  std::vector<std::int64_t> attach(n, 0);
  std::vector<std::int64_t> stamp(n);
  std::vector<bool> scanned(n, false);
  // (attachment, recency stamp, vertex); initial stamps make vertex 0 first.
  using Entry = std::tuple<std::int64_t, std::int64_t, Vertex>;
  std::priority_queue<Entry> heap;
  for (std::size_t v = 0; v < n; ++v) {
    stamp[v] = -static_cast<std::int64_t>(v) - 1;
    heap.emplace(0, stamp[v], static_cast<Vertex>(v));
  }
  std::int64_t clock = 0;
  while (!heap.empty()) {
    const auto [key, st, x] = heap.top();
    heap.pop();
    if (scanned[x] || key != attach[x] || st != stamp[x]) continue;
    scanned[x] = true;
    for (EdgeId e : g.incident(x)) {
      const Edge& ed = g.edge(e);
      const Vertex y = ed.u == x ? ed.v : ed.u;
      if (scanned[y]) continue;
      first[e] = attach[y] + 1;
      attach[y] += ed.w;
      stamp[y] = clock++;
      heap.emplace(attach[y], stamp[y], y);
    }
  }
  return NIDecomposition(n, g.edges(), std::move(first), ForestOrder::scan_first);
}

ForestIndex prefix_connectivity(const NIDecomposition& d, Vertex u, Vertex v) {
  const std::size_t n = d.vertex_count();
  if (u >= n || v >= n) throw std::out_of_range("vertex outside decomposition");
  if (u == v) return d.forest_count();
  // Max-bottleneck path over last-copy indices: if every edge on a u-v path
  // has a copy in some T_j with j >= b, the prefix property connects u and v
  // in T_b.
  std::vector<EdgeId> order(d.edge_count());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return d.last_index(a) > d.last_index(b);
  });
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e : order) {
    const Edge& ed = d.edges()[e];
    parent[find(ed.u)] = find(ed.v);
    if (find(u) == find(v)) return d.last_index(e);
  }
  return 0;
}

std::pair<Graph, std::vector<EdgeId>> expand_multigraph(const Graph& g) {
  const Weight total = g.total_weight();
  Graph expanded(g.vertex_count());
  std::vector<EdgeId> source;
  source.reserve(static_cast<std::size_t>(total));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    for (Weight c = 0; c < ed.w; ++c) {
      expanded.add_edge(ed.u, ed.v, 1);
      source.push_back(e);
    }
  }
  return {std::move(expanded), std::move(source)};
}

}  // namespace cutsparse
