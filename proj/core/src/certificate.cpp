#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "cutsparse/flow.hpp"
#include "cutsparse/sampler.hpp"

namespace cutsparse {

namespace {

Weight required_flow(int pi_exponent) {
  if (pi_exponent < 0) return 1;
  if (pi_exponent >= 62) throw std::overflow_error("pi exceeds 2^62");
  return Weight{1} << pi_exponent;
}

}  // namespace

CertificateReport check_certificate(const Graph& g, const LambdaAssignment& lambda,
                                    const Certificate& cert) {
  const std::size_t n = g.vertex_count();
  detail::check_enumeration_guard(n, kCertificateMaxVertices);
  if (lambda.lambda.size() != g.edge_count()) {
    throw std::invalid_argument("lambda assignment must cover every edge");
  }
  const int k = lambda.max_bucket();
  if (g.edge_count() > 0 && cert.levels.size() < static_cast<std::size_t>(k) + 1) {
    throw std::invalid_argument("certificate needs one level per bucket 0..k");
  }

  CertificateReport report;
  // Per-edge weight in the overlap sum: sum over levels of copies * 2^(i-1) / pi_i.
  std::vector<long double> overlap_weight(g.edge_count(), 0.0L);

  for (std::size_t i = 0; i < cert.levels.size(); ++i) {
    const CertificateLevel& level = cert.levels[i];
    const int level_id = static_cast<int>(i);
    Graph gi(n);
    std::vector<Weight> copies(g.edge_count(), 0);
    for (const auto& [e, mult] : level.multiplicity) {
      if (e >= g.edge_count()) throw std::out_of_range("certificate edge id out of range");
      if (mult < 0) throw std::invalid_argument("negative certificate multiplicity");
      copies[e] += mult;
    }
    const long double scale = std::ldexp(1.0L, level_id - 1 - level.pi_exponent);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (copies[e] == 0) continue;
      gi.add_edge(g.edge(e).u, g.edge(e).v, copies[e]);
      overlap_weight[e] += static_cast<long double>(copies[e]) * scale;
    }
    const Weight need = required_flow(level.pi_exponent);
    std::map<std::pair<Vertex, Vertex>, Weight> flows;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (std::max(lambda.bucket(e), 0) != level_id) continue;
      const Edge& ed = g.edge(e);
      if (copies[e] < ed.w) report.containment.push_back({e, level_id, copies[e]});
      const auto key = std::minmax(ed.u, ed.v);
      auto it = flows.find(key);
      if (it == flows.end()) it = flows.emplace(key, max_flow(gi, ed.u, ed.v)).first;
      if (it->second < need) report.pi_connectivity.push_back({e, level_id, it->second, need});
    }
  }

  std::vector<std::uint8_t> inside(n, 0);
  Weight cut = 0;
  long double lhs = 0.0L;
  detail::gray_code_cut_walk(
      n,
      [&](Vertex v, bool now_inside) {
        inside[v] = now_inside ? 1 : 0;
        for (EdgeId e : g.incident(v)) {
          const Edge& ed = g.edge(e);
          const Vertex other = ed.u == v ? ed.v : ed.u;
          const bool crossing = inside[other] != inside[v];
          cut += crossing ? ed.w : -ed.w;
          lhs += crossing ? overlap_weight[e] : -overlap_weight[e];
        }
      },
      [&](std::uint64_t mask) {
        ++report.cuts_checked;
        const long double rhs = static_cast<long double>(lambda.alpha) * cut;
        if (rhs > 0) report.worst_overlap_ratio = std::max(report.worst_overlap_ratio, lhs / rhs);
        if (lhs > rhs * (1.0L + 1e-12L) + 1e-9L) report.overlap.push_back({mask, cut, lhs, rhs});
      });
  return report;
}

}  // namespace cutsparse
