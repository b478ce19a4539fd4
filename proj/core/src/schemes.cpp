#include "cutsparse/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cutsparse/connectivity.hpp"
#include "cutsparse/ni_forest.hpp"
#include "cutsparse/partition_tree.hpp"
#include "cutsparse/random.hpp"

namespace cutsparse {

namespace {

constexpr ForestIndex kMaxForest = std::numeric_limits<ForestIndex>::max();

ForestIndex pow2(int e) {
  if (e < 0) return 0;
  if (e >= 62) return kMaxForest;
  return ForestIndex{1} << e;
}

Weight checked_mul(Weight a, Weight b) {
  Weight out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("certificate multiplicity overflow");
  return out;
}

/// Multiplicities of G_i: copies of e inside forests [from, to], raised to
/// w_e for edges of bucket i.
CertificateLevel window_level(const NIDecomposition& d, const LambdaAssignment& lambda, int level,
                              ForestIndex from, ForestIndex to, int pi_exponent) {
  CertificateLevel out;
  out.pi_exponent = pi_exponent;
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    Weight copies = from <= to ? d.copies_in_range(e, from, to) : 0;
    if (std::max(lambda.bucket(e), 0) == level) copies = d.edges()[e].w;
    if (copies > 0) out.multiplicity.emplace_back(e, copies);
  }
  return out;
}

LambdaAssignment make_lambda(Scheme s, double alpha, std::vector<double> values) {
  LambdaAssignment out;
  out.scheme = s;
  out.alpha = alpha;
  out.lambda = std::move(values);
  return out;
}

/// Forests T_{2^(i-1)} .. T_{2^i - 1} plus F_i for i >= 1; G_0 = F_0.
Certificate consecutive_window_certificate(const NIDecomposition& d, const LambdaAssignment& lambda) {
  Certificate cert;
  const int k = lambda.max_bucket();
  for (int i = 0; i <= k; ++i) {
    if (i == 0) {
      cert.levels.push_back(window_level(d, lambda, 0, 1, 0, -1));
    } else {
      cert.levels.push_back(window_level(d, lambda, i, pow2(i - 1), pow2(i) - 1, i - 1));
    }
  }
  return cert;
}

/// Shared by the standard-connectivity and resistance schemes. Level i holds
/// forests T_s .. T_{2^i} with s = max(1, ceil(2^(i-1) / n)) together with F_i.
/// The first s - 1 forests carry fewer than 2^(i-1) edges across any cut,
/// so an edge with k_e >= 2^i keeps 2^(i-1) edge-disjoint paths; each forest
/// falls in at most 2 + lg n windows.
Certificate sliding_window_certificate(const Graph& g, const LambdaAssignment& lambda) {
  const NIDecomposition d = decompose_weighted(g);
  const auto n = static_cast<ForestIndex>(g.vertex_count());
  Certificate cert;
  const int k = lambda.max_bucket();
  for (int i = 0; i <= k; ++i) {
    const ForestIndex start = i == 0 ? 1 : std::max<ForestIndex>(1, (pow2(i - 1) + n - 1) / n);
    cert.levels.push_back(window_level(d, lambda, i, start, pow2(i), i - 1));
  }
  return cert;
}

/// Level i >= 1 holds F_r for r >= i - shift, each edge replicated
/// 2^(k - r + extra) times; level 0 holds F_0 replicated 2^k times when
/// `level0_only_f0`, otherwise the same rule as other levels.
Certificate replicated_certificate(const Graph& g, const LambdaAssignment& lambda, int shift,
                                   int extra, bool level0_only_f0) {
  Certificate cert;
  const int k = lambda.max_bucket();
  for (int i = 0; i <= k; ++i) {
    CertificateLevel level;
    level.pi_exponent = k;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const int r = std::max(lambda.bucket(e), 0);
      const Weight w = g.edge(e).w;
      if (i == 0 && level0_only_f0) {
        if (r == 0) level.multiplicity.emplace_back(e, checked_mul(w, pow2(k)));
      } else if (r >= i - shift) {
        level.multiplicity.emplace_back(e, checked_mul(w, pow2(k - r + extra)));
      }
    }
    cert.levels.push_back(std::move(level));
  }
  return cert;
}

void require_connected(const Graph& g, const char* scheme) {
  if (!is_connected(g)) {
    throw std::invalid_argument(std::string(scheme) + " scheme needs a connected graph");
  }
}

double log_n_alpha(const Graph& g) {
  return 3.0 + std::log2(static_cast<double>(std::max<std::size_t>(g.vertex_count(), 1)));
}

}  // namespace

SchemeResult lambda_ni_unweighted(const Graph& g, bool with_certificate) {
  if (!g.has_unit_weights()) throw std::invalid_argument("ni scheme needs unit weights");
  const NIDecomposition d = decompose_unweighted(g);
  std::vector<double> values(d.first_indices().begin(), d.first_indices().end());
  SchemeResult out{make_lambda(Scheme::ni, 2.0, std::move(values)), {}};
  if (with_certificate) {
    const int k = out.lambda.max_bucket();
    for (int i = 0; i <= k; ++i) {
      if (i == 0) {
        out.certificate.levels.push_back(window_level(d, out.lambda, 0, 1, 1, -1));
      } else {
        out.certificate.levels.push_back(
            window_level(d, out.lambda, i, pow2(i - 1), pow2(i + 1) - 1, i - 1));
      }
    }
  }
  return out;
}

SchemeResult lambda_step1(const Graph& g, bool with_certificate) {
  const NIDecomposition d = decompose_weighted(g);
  std::vector<double> values(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) values[e] = static_cast<double>(d.last_index(e));
  SchemeResult out{make_lambda(Scheme::step1, 2.0, std::move(values)), {}};
  if (with_certificate) out.certificate = consecutive_window_certificate(d, out.lambda);
  return out;
}

SchemeResult lambda_decreasing(const Graph& g, bool with_certificate) {
  const NIDecomposition d = decompose_decreasing(g);
  std::vector<double> values(d.first_indices().begin(), d.first_indices().end());
  SchemeResult out{make_lambda(Scheme::decreasing, 2.0, std::move(values)), {}};
  if (with_certificate) out.certificate = consecutive_window_certificate(d, out.lambda);
  return out;
}

SchemeResult lambda_standard(const Graph& g, bool with_certificate) {
  require_connected(g, "standard-connectivity");
  const std::vector<Weight> k = standard_connectivity_all(g);
  SchemeResult out{make_lambda(Scheme::standard, log_n_alpha(g), {k.begin(), k.end()}), {}};
  if (with_certificate) out.certificate = sliding_window_certificate(g, out.lambda);
  return out;
}

SchemeResult lambda_resistance(const Graph& g, bool with_certificate) {
  require_connected(g, "resistance");
  const std::vector<double> r = effective_resistance_all(g);
  std::vector<double> values(r.size());
  for (std::size_t e = 0; e < r.size(); ++e) values[e] = 1.0 / r[e];
  SchemeResult out{make_lambda(Scheme::resistance, log_n_alpha(g), std::move(values)), {}};
  if (with_certificate) out.certificate = sliding_window_certificate(g, out.lambda);
  return out;
}

SchemeResult lambda_strong(const Graph& g, bool with_certificate) {
  require_connected(g, "strong-connectivity");
  const std::vector<Weight> s = strong_connectivity_all(g);
  SchemeResult out{make_lambda(Scheme::strong, 1.0, {s.begin(), s.end()}), {}};
  if (with_certificate) out.certificate = replicated_certificate(g, out.lambda, 0, 0, false);
  return out;
}

namespace {

/// Union-find over a fixed vertex range.
class Dsu {
 public:
  explicit Dsu(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }
  Vertex find(Vertex x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<Vertex> parent_;
};

struct Piece {
  std::vector<Vertex> vertices;  // original ids
  int level;
};

}  // namespace

SchemeResult lambda_setlambda(const Graph& g, bool with_certificate,
                              std::vector<SetLambdaSplit>* trace) {
  (void)g.total_weight();
  const std::size_t n = g.vertex_count();
  std::vector<double> lambda(g.edge_count(), 0.0);
  std::vector<bool> assigned(g.edge_count(), false);
  std::vector<Vertex> local(n, 0);

  std::vector<Piece> work;
  {
    const Components comps = connected_components(g);
    std::vector<std::vector<Vertex>> groups(comps.count);
    for (Vertex v = 0; v < n; ++v) groups[comps.label[v]].push_back(v);
    for (auto& group : groups) {
      if (group.size() >= 2) work.push_back({std::move(group), 0});
    }
  }

  while (!work.empty()) {
    Piece piece = std::move(work.back());
    work.pop_back();
    const int i = piece.level;
    if (i >= 62) throw std::overflow_error("SetLambda level exceeds 62");
    const std::size_t size = piece.vertices.size();
    for (std::size_t x = 0; x < size; ++x) local[piece.vertices[x]] = static_cast<Vertex>(x);

    // Remaining edges of H with both ends in the piece.
    std::vector<EdgeId> h_edges;
    for (Vertex v : piece.vertices) {
      for (EdgeId e : g.incident(v)) {
        if (assigned[e]) continue;
        const Edge& ed = g.edge(e);
        if (ed.u == v) h_edges.push_back(e);  // each edge once, from its u end
      }
    }

    // super[x]: super vertex of local vertex x in the shrunken H_c.
    std::vector<Vertex> super(size);
    std::iota(super.begin(), super.end(), Vertex{0});
    std::size_t super_count = size;
    const Weight threshold_unit = Weight{1} << (i + 1);
    while (true) {
      Weight w_c = 0;
      for (EdgeId e : h_edges) {
        const Edge& ed = g.edge(e);
        if (super[local[ed.u]] != super[local[ed.v]]) w_c += ed.w;
      }
      const __int128 threshold = static_cast<__int128>(super_count) * threshold_unit;
      if (static_cast<__int128>(w_c) <= threshold) {
        Dsu rest(size);
        for (EdgeId e : h_edges) {
          const Edge& ed = g.edge(e);
          if (super[local[ed.u]] != super[local[ed.v]]) {
            lambda[e] = static_cast<double>(Weight{1} << i);
            assigned[e] = true;
          } else {
            rest.unite(local[ed.u], local[ed.v]);
          }
        }
        std::vector<std::vector<Vertex>> groups(size);
        for (Vertex x = 0; x < size; ++x) groups[rest.find(x)].push_back(piece.vertices[x]);
        std::size_t parts = 0;
        for (auto& group : groups) {
          if (group.empty()) continue;
          ++parts;
          if (group.size() >= 2) work.push_back({std::move(group), i + 1});
        }
        if (trace != nullptr) trace->push_back({i, super_count, parts, w_c});
        break;
      }
      // Shrink by the components of forest T_{2^i + 1} of H_c.
      Graph contracted(super_count);
      std::vector<EdgeId> crossing;
      for (EdgeId e : h_edges) {
        const Edge& ed = g.edge(e);
        const Vertex a = super[local[ed.u]];
        const Vertex b = super[local[ed.v]];
        if (a == b) continue;
        contracted.add_edge(a, b, ed.w);
        crossing.push_back(e);
      }
      const NIDecomposition d = decompose_weighted(contracted);
      const ForestIndex target = (ForestIndex{1} << i) + 1;
      Dsu merge(super_count);
      for (EdgeId c = 0; c < contracted.edge_count(); ++c) {
        if (d.first_index(c) <= target && target <= d.last_index(c)) {
          merge.unite(contracted.edge(c).u, contracted.edge(c).v);
        }
      }
      std::vector<Vertex> relabel(super_count, UINT32_MAX);
      std::size_t next = 0;
      for (Vertex s = 0; s < super_count; ++s) {
        const Vertex r = merge.find(s);
        if (relabel[r] == UINT32_MAX) relabel[r] = static_cast<Vertex>(next++);
      }
      if (next == super_count) throw std::logic_error("SetLambda shrink made no progress");
      for (Vertex& s : super) s = relabel[merge.find(s)];
      super_count = next;
    }
  }

  SchemeResult out{make_lambda(Scheme::setlambda, 4.0, std::move(lambda)), {}};
  if (with_certificate) out.certificate = replicated_certificate(g, out.lambda, 1, 1, true);
  return out;
}

SchemeResult compute_scheme(Scheme s, const Graph& g, bool with_certificate) {
  switch (s) {
    case Scheme::ni: return lambda_ni_unweighted(g, with_certificate);
    case Scheme::step1: return lambda_step1(g, with_certificate);
    case Scheme::setlambda: return lambda_setlambda(g, with_certificate);
    case Scheme::decreasing: return lambda_decreasing(g, with_certificate);
    case Scheme::standard: return lambda_standard(g, with_certificate);
    case Scheme::resistance: return lambda_resistance(g, with_certificate);
    case Scheme::strong: return lambda_strong(g, with_certificate);
  }
  throw std::invalid_argument("unknown scheme value");
}

Skeleton sparsify(const Graph& g, Scheme s, const SamplingParams& params) {
  params.validate();
  const SchemeResult r = compute_scheme(s, g, false);
  return sample_skeleton(g, r.lambda, params);
}

namespace {

constexpr int kFallbackDenominatorBits = 20;

/// Integer graph proportional to the skeleton: weights times `scale`.
/// Uses the lcm of the denominators when it and the scaled total fit,
/// otherwise rounds every weight to a multiple of 2^-20.
Graph integer_rescale(const Skeleton& sk, TwoStepScaling& scaling) {
  using boost::multiprecision::cpp_int;
  const cpp_int cap = cpp_int(1) << 62;
  cpp_int lcm = 1;
  bool fits = true;
  for (const SkeletonEdge& e : sk.edges) {
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(e.weight));
    if (lcm > cap) {
      fits = false;
      break;
    }
  }
  Graph out(sk.vertex_count);
  if (fits) {
    cpp_int total = 0;
    std::vector<Weight> scaled;
    for (const SkeletonEdge& e : sk.edges) {
      const cpp_int w = boost::multiprecision::numerator(e.weight) *
                        (lcm / boost::multiprecision::denominator(e.weight));
      total += w;
      if (total > cap) {
        fits = false;
        break;
      }
      scaled.push_back(w.convert_to<Weight>());
    }
    if (fits) {
      for (std::size_t i = 0; i < sk.edges.size(); ++i) {
        out.add_edge(sk.edges[i].u, sk.edges[i].v, scaled[i]);
      }
      scaling.scale = Rational(lcm);
      scaling.rounded = false;
      return out;
    }
  }
  const cpp_int unit = cpp_int(1) << kFallbackDenominatorBits;
  cpp_int total = 0;
  for (const SkeletonEdge& e : sk.edges) {
    const Rational exact = e.weight * Rational(unit);
    // Round half up; keep every sampled edge present.
    cpp_int w = boost::multiprecision::numerator(exact + Rational(1, 2)) /
                boost::multiprecision::denominator(exact + Rational(1, 2));
    if (w < 1) w = 1;
    total += w;
    if (total > cap) throw std::overflow_error("rescaled skeleton weight exceeds 2^62");
    out.add_edge(e.u, e.v, w.convert_to<Weight>());
  }
  scaling.scale = Rational(unit);
  scaling.rounded = true;
  return out;
}

}  // namespace

Skeleton sparsify_two_step(const Graph& g, const SamplingParams& params, TwoStepScaling* scaling,
                           Skeleton* stage_one) {
  params.validate();
  SamplingParams third = params;
  third.epsilon = params.epsilon / 3.0;

  const SchemeResult first = lambda_step1(g, false);
  Skeleton s1 = sample_skeleton(g, first.lambda, third);

  TwoStepScaling local_scaling;
  const Graph h = integer_rescale(s1, local_scaling);
  const SchemeResult second = lambda_setlambda(h, false);
  SamplingParams stage_two = third;
  stage_two.seed = SplitMix64::mix(params.seed ^ 0x5851f42d4c957f2dULL);
  // h stands for s1 scaled by a constant, so its lambda range scales too.
  const Skeleton s2 = sample_skeleton(h, second.lambda, stage_two, false);

  Skeleton out;
  out.vertex_count = g.vertex_count();
  out.edges.reserve(s2.edges.size());
  for (const SkeletonEdge& e : s2.edges) {
    SkeletonEdge back = e;
    back.source = s1.edges[e.source].source;
    back.weight = e.weight / local_scaling.scale;
    out.edges.push_back(std::move(back));
  }
  out.provenance = {"two-step", params.epsilon, 0.0, params.c0, params.seed,
                    {s1.provenance, s2.provenance}};
  if (scaling != nullptr) *scaling = local_scaling;
  if (stage_one != nullptr) *stage_one = std::move(s1);
  return out;
}

}  // namespace cutsparse
