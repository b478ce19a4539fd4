#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cutsparse/graph.hpp"

namespace cutsparse {

using Rational = boost::multiprecision::cpp_rational;

enum class Scheme { ni, step1, setlambda, decreasing, standard, resistance, strong };

/// Canonical CLI names: ni, step1, setlambda, decreasing, conn, resistance,
/// strong. parse_scheme also accepts "standard" for conn.
std::string_view scheme_name(Scheme s);
Scheme parse_scheme(std::string_view name);

inline constexpr double kDefaultC0 = 96.0 / 0.38;

struct SamplingParams {
  double epsilon = 1.0;
  std::optional<double> alpha;  ///< overrides the scheme's alpha when set
  double c0 = kDefaultC0;
  std::uint64_t seed = 0;

  /// Throws std::domain_error on epsilon outside (0, 1], c0 <= 0 or alpha < 1.
  void validate() const;
};

/// Per-edge lambda values with the scheme's overlap constant alpha.
/// Integer schemes store exact integers (doubles are exact up to 2^53).
struct LambdaAssignment {
  Scheme scheme = Scheme::ni;
  double alpha = 1.0;
  std::vector<double> lambda;

  /// j with 2^j <= lambda_e < 2^(j+1); may be negative for real lambda < 1.
  int bucket(EdgeId e) const;
  /// k = floor(lg max lambda); 0 when there are no edges.
  int max_bucket() const;
};

/// p = min(c0 * alpha * ln n / (lambda * eps^2), 1).
double edge_probability(double lambda, std::size_t n, double alpha, const SamplingParams& params);

struct Provenance {
  std::string scheme;
  double epsilon = 0;
  double alpha = 0;
  double c0 = 0;
  std::uint64_t seed = 0;
  std::vector<Provenance> stages;  ///< filled by composed sparsifiers
};

std::string provenance_json(const Provenance& p);

struct SkeletonEdge {
  EdgeId source;
  Vertex u;
  Vertex v;
  std::int64_t count;  ///< sampled multiplicity R_e
  double p;
  Rational weight;     ///< exactly count / p, possibly rescaled by a composition
};

struct Skeleton {
  std::size_t vertex_count = 0;
  std::vector<SkeletonEdge> edges;
  Provenance provenance;

  WeightedGraph to_weighted() const;
  /// "n m" then one "u v num/den" line per edge.
  void write(std::ostream& os) const;
  std::string serialize() const;
};

/// The exact rational value of a finite positive double.
Rational exact_rational(double x);

/// Samples R_e ~ Binomial(w_e, p_e) per edge from substream (seed, e) and
/// keeps the edge with weight R_e / p_e when R_e > 0. alpha comes from
/// params when set, else from the assignment. Throws std::invalid_argument
/// when lambda does not cover every edge and std::out_of_range when some
/// lambda_e is not in (0, 2^n - 1]. The upper cap can be lifted for graphs
/// that stand for a uniformly rescaled input.
Skeleton sample_skeleton(const Graph& g, const LambdaAssignment& lambda,
                         const SamplingParams& params, bool enforce_lambda_cap = true);

struct ExpectedSize {
  double distinct_edges = 0;  ///< sum of 1 - (1 - p_e)^{w_e}
  double sum_wp = 0;          ///< sum of w_e p_e
  double bound = 0;           ///< c0 alpha ln n / eps^2 * sum w_e / lambda_e
  double sum_w_over_lambda = 0;
};

ExpectedSize expected_skeleton_size(const Graph& g, const LambdaAssignment& lambda,
                                    const SamplingParams& params);

// ---------------------------------------------------------------------------
// (pi, alpha)-certificates

/// One subgraph G_i of the expanded multigraph, given as edge multiplicities
/// (copies of each edge in G_i), together with its connectivity demand
/// pi_i = 2^pi_exponent. A negative exponent demands a flow of 1.
struct CertificateLevel {
  int pi_exponent = 0;
  std::vector<std::pair<EdgeId, Weight>> multiplicity;
};

/// Level i of `levels` is G_i; the bucket of level i is F_i.
struct Certificate {
  std::vector<CertificateLevel> levels;
};

struct PiViolation {
  EdgeId edge;
  int level;
  Weight flow;
  Weight required;
};

struct ContainmentViolation {
  EdgeId edge;
  int level;
  Weight copies;  ///< copies of the edge in G_i, below w_e
};

struct OverlapViolation {
  std::uint64_t mask;
  Weight cut;
  long double lhs;
  long double rhs;
};

struct CertificateReport {
  std::size_t cuts_checked = 0;
  std::vector<ContainmentViolation> containment;
  std::vector<PiViolation> pi_connectivity;
  std::vector<OverlapViolation> overlap;
  long double worst_overlap_ratio = 0;  ///< max over cuts of lhs / (alpha c)

  bool ok() const noexcept {
    return containment.empty() && pi_connectivity.empty() && overlap.empty();
  }
};

inline constexpr std::size_t kCertificateMaxVertices = 20;

/// Checks F_i within G_i, pi-connectivity (max-flow in G_i between the
/// endpoints of every edge of F_i reaches pi_i) and alpha-overlap over every
/// cut. Throws SizeGuardError above kCertificateMaxVertices vertices.
CertificateReport check_certificate(const Graph& g, const LambdaAssignment& lambda,
                                    const Certificate& cert);

}  // namespace cutsparse
