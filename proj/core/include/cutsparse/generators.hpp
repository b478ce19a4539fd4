#pragma once

#include <cstdint>

#include "cutsparse/graph.hpp"

namespace cutsparse {

/// m distinct uniform edges on n vertices (simple graph), weights uniform in
/// [1, max_weight]. Throws when m exceeds n(n-1)/2.
Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed, Weight max_weight = 1);

/// Random spanning tree plus extra distinct edges up to m in total.
/// Requires n - 1 <= m <= n(n-1)/2.
Graph random_connected(std::size_t n, std::size_t m, std::uint64_t seed, Weight max_weight = 1);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

}  // namespace cutsparse
