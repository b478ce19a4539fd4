#include "cutsparse/graph.hpp"

#include <algorithm>
#include <numeric>

namespace cutsparse {

namespace {

Weight checked_add(Weight a, Weight b) {
  Weight out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("weight sum overflows 64-bit integer");
  }
  return out;
}

}  // namespace

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {
  if (vertex_count == 0) throw std::invalid_argument("graph needs at least one vertex");
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : Graph(vertex_count) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.u, e.v, e.w);
}

EdgeId Graph::add_edge(Vertex u, Vertex v, Weight w) {
  const std::size_t n = vertex_count();
  if (u >= n || v >= n) {
    throw std::out_of_range("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") has a vertex outside [0, " + std::to_string(n) + ")");
  }
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (w < 1) throw std::invalid_argument("edge weight must be >= 1, got " + std::to_string(w));
  const EdgeId id = edges_.size();
  edges_.push_back({u, v, w});
  adjacency_[u].push_back(id);
  adjacency_[v].push_back(id);
  return id;
}

Weight Graph::total_weight() const {
  Weight total = 0;
  for (const Edge& e : edges_) total = checked_add(total, e.w);
  return total;
}

bool Graph::has_unit_weights() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1; });
}

Weight Graph::degree(Vertex v) const {
  Weight d = 0;
  for (EdgeId e : incident(v)) d = checked_add(d, edges_[e].w);
  return d;
}

Graph Graph::with_unit_weights() const {
  Graph out(vertex_count());
  for (const Edge& e : edges_) out.add_edge(e.u, e.v, 1);
  return out;
}

CutSide::CutSide(std::size_t vertex_count, std::span<const Vertex> members)
    : in_side_(vertex_count, false) {
  for (Vertex v : members) {
    if (v >= vertex_count) throw std::out_of_range("cut member outside vertex range");
    in_side_[v] = true;
  }
  canonicalize();
}

CutSide CutSide::from_mask(std::size_t vertex_count, std::uint64_t mask) {
  if (vertex_count > 64) throw std::invalid_argument("from_mask supports at most 64 vertices");
  CutSide side;
  side.in_side_.assign(vertex_count, false);
  for (std::size_t v = 0; v < vertex_count; ++v) side.in_side_[v] = ((mask >> v) & 1U) != 0;
  if (vertex_count < 64 && (mask >> vertex_count) != 0) {
    throw std::out_of_range("cut mask has bits beyond the vertex range");
  }
  side.canonicalize();
  return side;
}

void CutSide::canonicalize() {
  const std::size_t count = size();
  if (count == 0 || count == in_side_.size()) {
    throw std::invalid_argument("cut side must be non-empty and proper");
  }
  if (in_side_[0]) in_side_.flip();
}

std::vector<Vertex> CutSide::members() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < in_side_.size(); ++v) {
    if (in_side_[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::size_t CutSide::size() const noexcept {
  return static_cast<std::size_t>(std::count(in_side_.begin(), in_side_.end(), true));
}

Weight cut_weight(const Graph& g, const CutSide& cut) {
  if (cut.vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("cut and graph disagree on vertex count");
  }
  Weight total = 0;
  for (const Edge& e : g.edges()) {
    if (cut.contains(e.u) != cut.contains(e.v)) total = checked_add(total, e.w);
  }
  return total;
}

Components connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Components out;
  out.label.assign(n, UINT32_MAX);
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (out.label[s] != UINT32_MAX) continue;
    const std::uint32_t id = out.count++;
    out.label[s] = id;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        const Edge& ed = g.edge(e);
        const Vertex y = ed.u == x ? ed.v : ed.u;
        if (out.label[y] == UINT32_MAX) {
          out.label[y] = id;
          stack.push_back(y);
        }
      }
    }
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  constexpr Vertex kAbsent = UINT32_MAX;
  std::vector<Vertex> local(g.vertex_count(), kAbsent);
  InducedSubgraph out;
  out.graph = Graph(vertices.size());
  out.source_vertex.assign(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (local.at(vertices[i]) != kAbsent) throw std::invalid_argument("duplicate vertex in subset");
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (local[ed.u] == kAbsent || local[ed.v] == kAbsent) continue;
    out.graph.add_edge(local[ed.u], local[ed.v], ed.w);
    out.source_edge.push_back(e);
  }
  return out;
}

std::vector<std::pair<CutSide, Weight>> all_cuts(const Graph& g) {
  std::vector<std::pair<CutSide, Weight>> out;
  const std::size_t n = g.vertex_count();
  enumerate_cuts(g, [&](std::uint64_t mask, Weight w) {
    out.emplace_back(CutSide::from_mask(n, mask), w);
  });
  return out;
}

WeightedGraph WeightedGraph::from(const Graph& g) {
  WeightedGraph out;
  out.vertex_count = g.vertex_count();
  out.edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.edges.push_back({e.u, e.v, static_cast<long double>(e.w)});
  return out;
}

}  // namespace cutsparse
