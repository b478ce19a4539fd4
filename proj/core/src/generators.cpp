#include "cutsparse/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "cutsparse/random.hpp"

namespace cutsparse {

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

void check_density(std::size_t n, std::size_t m) {
  const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  if (m > max_edges) throw std::invalid_argument("too many edges for a simple graph");
}

Weight draw_weight(SplitMix64& rng, Weight max_weight) {
  if (max_weight <= 1) return 1;
  return std::uniform_int_distribution<Weight>(1, max_weight)(rng);
}

void fill_random(Graph& g, std::unordered_set<std::uint64_t>& used, std::size_t m,
                 SplitMix64& rng, Weight max_weight) {
  const std::size_t n = g.vertex_count();
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  while (g.edge_count() < m) {
    const Vertex a = pick(rng);
    const Vertex b = pick(rng);
    if (a == b || !used.insert(pair_key(a, b)).second) continue;
    g.add_edge(a, b, draw_weight(rng, max_weight));
  }
}

}  // namespace

Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed, Weight max_weight) {
  check_density(n, m);
  SplitMix64 rng(seed);
  Graph g(n);
  std::unordered_set<std::uint64_t> used;
  used.reserve(m * 2);
  fill_random(g, used, m, rng, max_weight);
  return g;
}

Graph random_connected(std::size_t n, std::size_t m, std::uint64_t seed, Weight max_weight) {
  if (n == 0) throw std::invalid_argument("random_connected needs n >= 1");
  if (m + 1 < n) throw std::invalid_argument("random_connected needs m >= n - 1");
  check_density(n, m);
  SplitMix64 rng(seed);
  Graph g(n);
  std::unordered_set<std::uint64_t> used;
  used.reserve(m * 2);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < n; ++i) {
    const Vertex parent = order[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)];
    used.insert(pair_key(order[i], parent));
    g.add_edge(order[i], parent, draw_weight(rng, max_weight));
  }
  fill_random(g, used, m, rng, max_weight);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (Vertex a = 0; a < n; ++a) g.add_edge(a, static_cast<Vertex>((a + 1) % n));
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex a = 0; a + 1 < n; ++a) g.add_edge(a, a + 1);
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex a = 1; a <= leaves; ++a) g.add_edge(0, a);
  return g;
}

}  // namespace cutsparse
