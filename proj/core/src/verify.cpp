#include "cutsparse/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "cutsparse/flow.hpp"
#include "cutsparse/partition_tree.hpp"
#include "cutsparse/random.hpp"

namespace cutsparse {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

long double relative_error(long double c, long double c_hat) {
  if (c == 0) return c_hat == 0 ? 0.0L : std::numeric_limits<long double>::infinity();
  return std::fabs(c_hat - c) / c;
}

/// Folds one cut into the report; `side` is produced lazily for the argmax.
template <class Side>
void record(VerificationReport& r, long double c, long double c_hat, Side&& side) {
  const long double err = relative_error(c, c_hat);
  ++r.cuts_checked;
  if (err > r.threshold) ++r.failures;
  if (c > 0) {
    CutBandStats& band = r.by_weight_band[std::ilogb(static_cast<double>(c))];
    ++band.cuts;
    band.max_rel_error = std::max(band.max_rel_error, err);
  }
  if (r.cuts_checked == 1 || err > r.max_rel_error) {
    r.max_rel_error = err;
    r.argmax_cut = side();
  }
}

void check_vertex_counts(const Graph& g, const WeightedGraph& sk) {
  if (g.vertex_count() != sk.vertex_count) {
    throw std::invalid_argument("skeleton vertex count differs from the graph");
  }
  for (const RealEdge& e : sk.edges) {
    if (e.u >= sk.vertex_count || e.v >= sk.vertex_count) {
      throw std::out_of_range("skeleton edge endpoint out of range");
    }
  }
}

std::vector<Vertex> mask_members(std::uint64_t mask, std::size_t n) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if ((mask >> v) & 1U) out.push_back(v);
  }
  return out;
}

}  // namespace

VerificationReport exact_cut_errors(const Graph& g, const WeightedGraph& skeleton, double threshold) {
  const auto start = Clock::now();
  const std::size_t n = g.vertex_count();
  detail::check_enumeration_guard(n, kExactCutsMaxVertices);
  check_vertex_counts(g, skeleton);

  // Incidence lists over both graphs: weight in g, weight in the skeleton.
  struct Arc {
    Vertex other;
    long double w;
    long double w_hat;
  };
  std::vector<std::vector<Arc>> arcs(n);
  for (const Edge& e : g.edges()) {
    arcs[e.u].push_back({e.v, static_cast<long double>(e.w), 0.0L});
    arcs[e.v].push_back({e.u, static_cast<long double>(e.w), 0.0L});
  }
  for (const RealEdge& e : skeleton.edges) {
    arcs[e.u].push_back({e.v, 0.0L, e.w});
    arcs[e.v].push_back({e.u, 0.0L, e.w});
  }

  VerificationReport r;
  r.threshold = threshold;
  std::vector<std::uint8_t> inside(n, 0);
  long double c = 0;
  long double c_hat = 0;
  detail::gray_code_cut_walk(
      n,
      [&](Vertex v, bool now_inside) {
        inside[v] = now_inside ? 1 : 0;
        for (const Arc& a : arcs[v]) {
          const long double sign = inside[a.other] != inside[v] ? 1.0L : -1.0L;
          c += sign * a.w;
          c_hat += sign * a.w_hat;
        }
      },
      [&](std::uint64_t mask) { record(r, c, c_hat, [&] { return mask_members(mask, n); }); });
  r.runtime_ms = elapsed_ms(start);
  return r;
}

VerificationReport sampled_cut_errors(const Graph& g, const WeightedGraph& skeleton,
                                      std::size_t trials, std::uint64_t seed, double threshold,
                                      unsigned threads) {
  const auto start = Clock::now();
  const std::size_t n = g.vertex_count();
  check_vertex_counts(g, skeleton);
  VerificationReport r;
  r.threshold = threshold;
  if (n < 2) {
    r.runtime_ms = elapsed_ms(start);
    return r;
  }

  // Every cut is a side indicator vector; degree cuts and the min cut first.
  std::vector<std::vector<std::uint8_t>> cuts;
  cuts.reserve(n + 1 + trials);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<std::uint8_t> side(n, 0);
    side[v] = 1;
    cuts.push_back(std::move(side));
  }
  {
    const MinCut mc = global_min_cut(g);
    std::vector<std::uint8_t> side(n, 0);
    for (Vertex v : mc.side.members()) side[v] = 1;
    cuts.push_back(std::move(side));
  }
  SplitMix64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<std::uint8_t> side(n, 0);
    std::size_t count = 0;
    do {
      count = 0;
      for (Vertex v = 0; v < n; ++v) {
        side[v] = static_cast<std::uint8_t>(rng() >> 63);
        count += side[v];
      }
    } while (count == 0 || count == n);
    cuts.push_back(std::move(side));
  }

  struct Value {
    long double c;
    long double c_hat;
  };
  std::vector<Value> values(cuts.size());
  auto evaluate = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      const auto& side = cuts[i];
      long double c = 0;
      long double c_hat = 0;
      for (const Edge& e : g.edges()) {
        if (side[e.u] != side[e.v]) c += static_cast<long double>(e.w);
      }
      for (const RealEdge& e : skeleton.edges) {
        if (side[e.u] != side[e.v]) c_hat += e.w;
      }
      values[i] = {c, c_hat};
    }
  };
  const unsigned workers = std::max(1U, threads);
  if (workers == 1) {
    evaluate(0, cuts.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (cuts.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t from = std::min(cuts.size(), w * chunk);
      const std::size_t to = std::min(cuts.size(), from + chunk);
      pool.emplace_back(evaluate, from, to);
    }
    for (std::thread& t : pool) t.join();
  }
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    record(r, values[i].c, values[i].c_hat, [&] {
      // Report the side without vertex 0, matching exact_cut_errors.
      const std::uint8_t away = static_cast<std::uint8_t>(1 - cuts[i][0]);
      std::vector<Vertex> out;
      for (Vertex v = 0; v < n; ++v) {
        if (cuts[i][v] == away) out.push_back(v);
      }
      return out;
    });
  }
  r.runtime_ms = elapsed_ms(start);
  return r;
}

ProjectionCount count_k_projections(const Graph& g, Weight k, double alpha) {
  const std::size_t n = g.vertex_count();
  detail::check_enumeration_guard(n, kProjectionMaxVertices);
  if (!(alpha >= 1.0)) throw std::domain_error("alpha must be >= 1");
  ProjectionCount out;
  if (n < 2) return out;
  out.min_cut = global_min_cut(g).weight;
  if (k < out.min_cut) throw std::domain_error("k must be at least the global min cut");

  std::vector<bool> heavy(g.edge_count(), false);
  std::map<std::pair<Vertex, Vertex>, bool> cache;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const auto key = std::minmax(ed.u, ed.v);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, edge_heaviness(g, ed.u, ed.v, k)).first;
    heavy[e] = it->second;
  }

  const long double limit = static_cast<long double>(alpha) * static_cast<long double>(k);
  const std::size_t words = (g.edge_count() + 63) / 64;
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<std::uint64_t> projection(words);
  enumerate_cuts(g, [&](std::uint64_t mask, Weight w) {
    if (static_cast<long double>(w) > limit) return;
    ++out.cuts;
    std::fill(projection.begin(), projection.end(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!heavy[e]) continue;
      const Edge& ed = g.edge(e);
      if (((mask >> ed.u) & 1U) != ((mask >> ed.v) & 1U)) projection[e / 64] |= std::uint64_t{1} << (e % 64);
    }
    seen.insert(projection);
  });
  out.projections = seen.size();
  return out;
}

namespace {

void check_tail_domain(double epsilon, double p, double n) {
  if (!(epsilon > 0.0)) throw std::domain_error("epsilon must be positive");
  if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("p must lie in (0, 1]");
  if (!(n > 0.0)) throw std::domain_error("N must be positive");
}

}  // namespace

double chernoff_upper_bound(double epsilon, double p, double n) {
  check_tail_domain(epsilon, p, n);
  if (epsilon > 1.0) throw std::domain_error("epsilon must lie in (0, 1]");
  return 2.0 * std::exp(-0.38 * epsilon * epsilon * p * n);
}

double chernoff_upper_tail(double epsilon, double p, double n) {
  check_tail_domain(epsilon, p, n);
  if (epsilon < 1.0) return std::exp(-0.38 * epsilon * epsilon * p * n);
  return std::exp(-0.38 * epsilon * p * n);
}

double chernoff_lower_tail(double epsilon, double p, double n) {
  check_tail_domain(epsilon, p, n);
  if (epsilon < 1.0) return std::exp(-0.5 * epsilon * epsilon * p * n);
  return 0.0;
}

double monte_carlo_tail(const std::vector<double>& p, double epsilon, double n_scale,
                        std::uint64_t trials, std::uint64_t seed) {
  const auto size = static_cast<double>(p.size());
  if (n_scale < size) throw std::domain_error("N must be at least |C|");
  if (trials == 0) throw std::invalid_argument("monte_carlo_tail needs at least one trial");
  std::map<double, std::int64_t> groups;
  for (double pe : p) {
    if (!(pe > 0.0 && pe <= 1.0)) throw std::domain_error("every p_e must lie in (0, 1]");
    ++groups[pe];
  }
  const long double margin = static_cast<long double>(epsilon) * n_scale;
  SplitMix64 rng(seed);
  std::uint64_t exceed = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    long double sum = 0;
    for (const auto& [pe, count] : groups) {
      sum += static_cast<long double>(binomial_sample(count, pe, rng)) / pe;
    }
    if (std::fabs(sum - size) > margin) ++exceed;
  }
  return static_cast<double>(exceed) / static_cast<double>(trials);
}

double scan_ineq_f(double step) {
  if (!(step > 0.0 && step <= 0.01)) throw std::domain_error("step must lie in (0, 0.01]");
  const long double a = 1.0L - 2.0L * std::log(2.0L);
  auto f = [](long double x) { return x - (1.0L + x) * std::log1p(x); };
  long double worst = -std::numeric_limits<long double>::infinity();
  for (std::uint64_t i = 1;; ++i) {
    const long double x = static_cast<long double>(i) * step;
    if (x > 100.0L) break;
    const long double bound = x < 1.0L ? a * x * x : a * x;
    worst = std::max(worst, f(x) - bound);
  }
  return static_cast<double>(worst);
}

NIDecomposition naive_decompose_decreasing(const Graph& g) {
  if (g.total_weight() > kNaiveDecomposeMaxWeight) {
    throw SizeGuardError("naive decomposition needs total weight <= 10^6");
  }
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> forests;  // union-find parent arrays, forest j at j - 1
  auto find = [](std::vector<Vertex>& parent, Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<ForestIndex> first(g.edge_count(), 0);
  for (EdgeId e : decreasing_weight_order(g)) {
    const Edge& ed = g.edge(e);
    std::size_t j = 0;
    for (Weight copy = 0; copy < ed.w; ++copy) {
      while (true) {
        if (j == forests.size()) {
          forests.emplace_back(n);
          std::iota(forests.back().begin(), forests.back().end(), Vertex{0});
        }
        std::vector<Vertex>& parent = forests[j];
        const Vertex a = find(parent, ed.u);
        const Vertex b = find(parent, ed.v);
        if (a != b) {
          parent[a] = b;
          if (copy == 0) first[e] = static_cast<ForestIndex>(j + 1);
          ++j;
          break;
        }
        if (copy > 0) throw std::logic_error("copies of one edge landed in non-consecutive forests");
        ++j;
      }
    }
  }
  return NIDecomposition(n, g.edges(), std::move(first), ForestOrder::decreasing_weight);
}

}  // namespace cutsparse
