#include "cutsparse/connectivity.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "cutsparse/flow.hpp"

namespace cutsparse {

std::vector<Weight> standard_connectivity_all(const Graph& g) {
  std::vector<Weight> k(g.edge_count(), 0);
  std::map<std::pair<Vertex, Vertex>, Weight> cache;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const auto key = std::minmax(ed.u, ed.v);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, max_flow(g, ed.u, ed.v)).first;
    k[e] = it->second;
  }
  return k;
}

std::vector<double> effective_resistance_all(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (!is_connected(g)) throw std::invalid_argument("effective resistance needs a connected graph");
  std::vector<double> r(g.edge_count(), 0.0);
  if (n < 2) return r;
  // Ground vertex 0: the reduced Laplacian on 1..n-1 is positive definite.
  const auto dim = static_cast<Eigen::Index>(n - 1);
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(dim, dim);
  for (const Edge& ed : g.edges()) {
    const double c = static_cast<double>(ed.w);
    const Eigen::Index a = static_cast<Eigen::Index>(ed.u) - 1;
    const Eigen::Index b = static_cast<Eigen::Index>(ed.v) - 1;
    if (a >= 0) lap(a, a) += c;
    if (b >= 0) lap(b, b) += c;
    if (a >= 0 && b >= 0) {
      lap(a, b) -= c;
      lap(b, a) -= c;
    }
  }
  const Eigen::MatrixXd inv = lap.ldlt().solve(Eigen::MatrixXd::Identity(dim, dim));
  auto entry = [&](Vertex x, Vertex y) -> double {
    if (x == 0 || y == 0) return 0.0;
    return inv(x - 1, y - 1);
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    r[e] = entry(ed.u, ed.u) + entry(ed.v, ed.v) - 2.0 * entry(ed.u, ed.v);
  }
  return r;
}

std::vector<Weight> strong_connectivity_all(const Graph& g) {
  std::vector<Weight> s(g.edge_count(), 0);
  std::vector<std::vector<Vertex>> work;

  auto push_components = [&](const Graph& sub, const std::vector<Vertex>& to_parent) {
    const Components comps = connected_components(sub);
    std::vector<std::vector<Vertex>> groups(comps.count);
    for (Vertex v = 0; v < sub.vertex_count(); ++v) groups[comps.label[v]].push_back(to_parent[v]);
    for (auto& group : groups) {
      if (group.size() >= 2) work.push_back(std::move(group));
    }
  };

  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  push_components(g, all);

  while (!work.empty()) {
    const std::vector<Vertex> piece = std::move(work.back());
    work.pop_back();
    const InducedSubgraph h = induced_subgraph(g, piece);
    const MinCut cut = global_min_cut(h.graph);
    for (EdgeId local = 0; local < h.graph.edge_count(); ++local) {
      Weight& value = s[h.source_edge[local]];
      value = std::max(value, cut.weight);
    }
    std::vector<Vertex> inside;
    std::vector<Vertex> outside;
    for (Vertex v = 0; v < piece.size(); ++v) (cut.side.contains(v) ? inside : outside).push_back(v);
    for (const auto* side : {&inside, &outside}) {
      if (side->size() < 2) continue;
      const InducedSubgraph part = induced_subgraph(h.graph, *side);
      std::vector<Vertex> to_original(side->size());
      for (std::size_t i = 0; i < side->size(); ++i) to_original[i] = piece[(*side)[i]];
      push_components(part.graph, to_original);
    }
  }
  return s;
}

}  // namespace cutsparse
