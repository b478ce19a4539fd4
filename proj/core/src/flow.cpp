#include "cutsparse/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace cutsparse {

namespace {

class Dinic {
 public:
  explicit Dinic(const Graph& g) : head_(g.vertex_count(), -1) {
    arcs_.reserve(2 * g.edge_count());
    for (const Edge& e : g.edges()) {
      add_arc(e.u, e.v, e.w);
      add_arc(e.v, e.u, e.w);
    }
  }

  Weight run(Vertex s, Vertex t) {
    Weight total = 0;
    while (bfs(s, t)) {
      cursor_ = head_;
      while (Weight pushed = dfs(s, t, std::numeric_limits<Weight>::max())) total += pushed;
    }
    return total;
  }

 private:
  struct Arc {
    Vertex to;
    int next;
    Weight residual;
  };

  void add_arc(Vertex from, Vertex to, Weight cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
  }

  bool bfs(Vertex s, Vertex t) {
    level_.assign(head_.size(), -1);
    std::queue<Vertex> queue;
    level_[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      for (int a = head_[x]; a != -1; a = arcs_[a].next) {
        const Arc& arc = arcs_[a];
        if (arc.residual > 0 && level_[arc.to] < 0) {
          level_[arc.to] = level_[x] + 1;
          queue.push(arc.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  Weight dfs(Vertex x, Vertex t, Weight limit) {
    if (x == t) return limit;
    for (int& a = cursor_[x]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.residual <= 0 || level_[arc.to] != level_[x] + 1) continue;
      const Weight got = dfs(arc.to, t, std::min(limit, arc.residual));
      if (got > 0) {
        arc.residual -= got;
        arcs_[a ^ 1].residual += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> cursor_;
  std::vector<int> level_;
};

}  // namespace

Weight max_flow(const Graph& g, Vertex s, Vertex t) {
  if (s >= g.vertex_count() || t >= g.vertex_count()) {
    throw std::out_of_range("max_flow terminal outside vertex range");
  }
  if (s == t) throw std::invalid_argument("max_flow needs distinct terminals");
  (void)g.total_weight();  // the flow value is bounded by it
  return Dinic(g).run(s, t);
}

MinCut global_min_cut(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("global_min_cut needs at least two vertices");
  (void)g.total_weight();

  const Components comps = connected_components(g);
  if (comps.count > 1) {
    std::vector<Vertex> side;
    for (std::size_t v = 0; v < n; ++v) {
      if (comps.label[v] != comps.label[0]) side.push_back(static_cast<Vertex>(v));
    }
    return {0, CutSide(n, side)};
  }

  std::vector<std::vector<Weight>> w(n, std::vector<Weight>(n, 0));
  for (const Edge& e : g.edges()) {
    w[e.u][e.v] += e.w;
    w[e.v][e.u] += e.w;
  }
  // groups[v] lists the original vertices merged into super-vertex v.
  std::vector<std::vector<Vertex>> groups(n);
  for (std::size_t v = 0; v < n; ++v) groups[v] = {static_cast<Vertex>(v)};
  std::vector<std::size_t> alive(n);
  for (std::size_t v = 0; v < n; ++v) alive[v] = v;

  Weight best = std::numeric_limits<Weight>::max();
  std::vector<Vertex> best_side;
  std::vector<Weight> attach(n);
  std::vector<bool> added(n);
  while (alive.size() > 1) {
    std::fill(attach.begin(), attach.end(), 0);
    std::fill(added.begin(), added.end(), false);
    std::size_t prev = alive[0];
    std::size_t last = alive[0];
    for (std::size_t step = 0; step < alive.size(); ++step) {
      std::size_t pick = n;
      for (std::size_t v : alive) {
        if (!added[v] && (pick == n || attach[v] > attach[pick])) pick = v;
      }
      added[pick] = true;
      prev = last;
      last = pick;
      for (std::size_t v : alive) {
        if (!added[v]) attach[v] += w[pick][v];
      }
    }
    if (attach[last] < best) {
      best = attach[last];
      best_side = groups[last];
    }
    groups[prev].insert(groups[prev].end(), groups[last].begin(), groups[last].end());
    for (std::size_t v : alive) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    w[prev][prev] = 0;
    alive.erase(std::find(alive.begin(), alive.end(), last));
  }
  return {best, CutSide(n, best_side)};
}

bool edge_heaviness(const Graph& g, Vertex u, Vertex v, Weight k) {
  if (u == v) throw std::invalid_argument("edge_heaviness needs distinct endpoints");
  return max_flow(g, u, v) >= k;
}

}  // namespace cutsparse
