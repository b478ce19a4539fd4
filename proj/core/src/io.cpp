#include "cutsparse/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace cutsparse {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

/// Non-empty lines with their 1-based line numbers.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    auto fields = split_fields(text.substr(pos, end - pos));
    if (!fields.empty()) out.push_back({number, std::move(fields)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

template <class Int>
Int parse_int(std::string_view field, std::size_t line, const char* what) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(field) + "'");
  }
  return value;
}

void add_parsed_edge(Graph& g, std::size_t line, std::int64_t u, std::int64_t v, Weight w) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw ParseError(line, "vertex id out of range");
  }
  if (u == v) throw ParseError(line, "self-loop at vertex " + std::to_string(u));
  if (w < 1) throw ParseError(line, "weight must be >= 1, got " + std::to_string(w));
  g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), w);
}

Graph make_graph(std::size_t line, std::int64_t n) {
  if (n < 1) throw ParseError(line, "vertex count must be positive");
  return Graph(static_cast<std::size_t>(n));
}

Graph parse_edge_list(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing 'n m' header");
  const Line& header = lines.front();
  if (header.fields.size() != 2) throw ParseError(header.number, "header must be 'n m'");
  const auto n = parse_int<std::int64_t>(header.fields[0], header.number, "vertex count");
  const auto m = parse_int<std::int64_t>(header.fields[1], header.number, "edge count");
  if (m < 0) throw ParseError(header.number, "edge count must be non-negative");
  Graph g = make_graph(header.number, n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.fields.size() != 2 && l.fields.size() != 3) {
      throw ParseError(l.number, "edge line must be 'u v w'");
    }
    const auto u = parse_int<std::int64_t>(l.fields[0], l.number, "vertex");
    const auto v = parse_int<std::int64_t>(l.fields[1], l.number, "vertex");
    const Weight w = l.fields.size() == 3 ? parse_int<Weight>(l.fields[2], l.number, "weight") : 1;
    add_parsed_edge(g, l.number, u, v, w);
  }
  if (static_cast<std::int64_t>(g.edge_count()) != m) {
    throw ParseError(lines.back().number, "header declares " + std::to_string(m) +
                                              " edges but " + std::to_string(g.edge_count()) +
                                              " were given");
  }
  return g;
}

Graph parse_dimacs(std::string_view text) {
  const auto lines = tokenize(text);
  std::optional<Graph> g;
  std::int64_t declared = -1;
  std::size_t last_line = 1;
  for (const Line& l : lines) {
    last_line = l.number;
    const std::string_view tag = l.fields[0];
    if (tag == "c") continue;
    if (tag == "p") {
      if (g) throw ParseError(l.number, "duplicate problem line");
      if (l.fields.size() != 4) throw ParseError(l.number, "problem line must be 'p edge n m'");
      const auto n = parse_int<std::int64_t>(l.fields[2], l.number, "vertex count");
      declared = parse_int<std::int64_t>(l.fields[3], l.number, "edge count");
      g = make_graph(l.number, n);
      continue;
    }
    if (tag == "e") {
      if (!g) throw ParseError(l.number, "edge before problem line");
      if (l.fields.size() != 3 && l.fields.size() != 4) {
        throw ParseError(l.number, "edge line must be 'e u v w'");
      }
      const auto u = parse_int<std::int64_t>(l.fields[1], l.number, "vertex");
      const auto v = parse_int<std::int64_t>(l.fields[2], l.number, "vertex");
      const Weight w = l.fields.size() == 4 ? parse_int<Weight>(l.fields[3], l.number, "weight") : 1;
      add_parsed_edge(*g, l.number, u - 1, v - 1, w);
      continue;
    }
    throw ParseError(l.number, "unknown DIMACS line tag '" + std::string(tag) + "'");
  }
  if (!g) throw ParseError(last_line, "missing 'p edge n m' line");
  if (static_cast<std::int64_t>(g->edge_count()) != declared) {
    throw ParseError(last_line, "problem line declares " + std::to_string(declared) +
                                    " edges but " + std::to_string(g->edge_count()) +
                                    " were given");
  }
  return std::move(*g);
}

long double parse_real_weight(std::string_view field, std::size_t line) {
  const std::size_t slash = field.find('/');
  if (slash == std::string_view::npos) {
    return static_cast<long double>(parse_int<std::int64_t>(field, line, "weight"));
  }
  // Numerators can exceed 64 bits; parse digit strings directly.
  auto digits = [&](std::string_view s) {
    if (s.empty()) throw ParseError(line, "malformed rational weight");
    long double value = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw ParseError(line, "malformed rational weight");
      value = value * 10 + static_cast<long double>(c - '0');
    }
    return value;
  };
  const long double num = digits(field.substr(0, slash));
  const long double den = digits(field.substr(slash + 1));
  if (den == 0) throw ParseError(line, "zero denominator");
  return num / den;
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edge-list" || name == "edgelist") return GraphFormat::edge_list;
  if (name == "dimacs") return GraphFormat::dimacs;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

Graph load_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph load_graph_file(const std::string& path, GraphFormat format) {
  return load_graph(read_file(path), format);
}

void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

WeightedGraph load_weighted_edge_list(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing 'n m' header");
  const Line& header = lines.front();
  if (header.fields.size() != 2) throw ParseError(header.number, "header must be 'n m'");
  const auto n = parse_int<std::int64_t>(header.fields[0], header.number, "vertex count");
  const auto m = parse_int<std::int64_t>(header.fields[1], header.number, "edge count");
  if (n < 1) throw ParseError(header.number, "vertex count must be positive");
  WeightedGraph out;
  out.vertex_count = static_cast<std::size_t>(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.fields.size() != 3) throw ParseError(l.number, "edge line must be 'u v w'");
    const auto u = parse_int<std::int64_t>(l.fields[0], l.number, "vertex");
    const auto v = parse_int<std::int64_t>(l.fields[1], l.number, "vertex");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(l.number, "vertex id out of range");
    if (u == v) throw ParseError(l.number, "self-loop at vertex " + std::to_string(u));
    const long double w = parse_real_weight(l.fields[2], l.number);
    if (!(w > 0)) throw ParseError(l.number, "weight must be positive");
    out.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
  }
  if (static_cast<std::int64_t>(out.edges.size()) != m) {
    throw ParseError(lines.back().number, "header declares " + std::to_string(m) +
                                              " edges but " + std::to_string(out.edges.size()) +
                                              " were given");
  }
  return out;
}

WeightedGraph load_weighted_edge_list_file(const std::string& path) {
  return load_weighted_edge_list(read_file(path));
}

}  // namespace cutsparse
