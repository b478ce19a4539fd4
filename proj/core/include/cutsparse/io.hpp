#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cutsparse/graph.hpp"

namespace cutsparse {

enum class GraphFormat { edge_list, dimacs };

GraphFormat parse_graph_format(std::string_view name);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Edge-list: "n m" then m lines "u v w" (0-indexed). DIMACS: "p edge n m"
/// then "e u v w" lines (1-indexed), "c" comment lines ignored. A missing
/// weight column means weight 1.
Graph load_graph(std::string_view text, GraphFormat format);
Graph load_graph_file(const std::string& path, GraphFormat format);

void write_edge_list(std::ostream& os, const Graph& g);

/// Edge-list whose weights may be integers or exact rationals "num/den"
/// (the skeleton serialization); weights are converted to long double.
WeightedGraph load_weighted_edge_list(std::string_view text);
WeightedGraph load_weighted_edge_list_file(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace cutsparse
