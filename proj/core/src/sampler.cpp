#include "cutsparse/sampler.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cutsparse/random.hpp"
#include "json.hpp"

namespace cutsparse {

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::ni: return "ni";
    case Scheme::step1: return "step1";
    case Scheme::setlambda: return "setlambda";
    case Scheme::decreasing: return "decreasing";
    case Scheme::standard: return "conn";
    case Scheme::resistance: return "resistance";
    case Scheme::strong: return "strong";
  }
  throw std::invalid_argument("unknown scheme value");
}

Scheme parse_scheme(std::string_view name) {
  if (name == "ni") return Scheme::ni;
  if (name == "step1") return Scheme::step1;
  if (name == "setlambda") return Scheme::setlambda;
  if (name == "decreasing") return Scheme::decreasing;
  if (name == "conn" || name == "standard") return Scheme::standard;
  if (name == "resistance") return Scheme::resistance;
  if (name == "strong") return Scheme::strong;
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

void SamplingParams::validate() const {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::domain_error("epsilon must lie in (0, 1]");
  if (!(c0 > 0.0) || !std::isfinite(c0)) throw std::domain_error("c0 must be positive");
  if (alpha && !(*alpha >= 1.0 && std::isfinite(*alpha))) {
    throw std::domain_error("alpha must be >= 1");
  }
}

int LambdaAssignment::bucket(EdgeId e) const { return std::ilogb(lambda.at(e)); }

int LambdaAssignment::max_bucket() const {
  int k = 0;
  for (EdgeId e = 0; e < lambda.size(); ++e) k = std::max(k, bucket(e));
  return k;
}

double edge_probability(double lambda, std::size_t n, double alpha, const SamplingParams& params) {
  params.validate();
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::domain_error("lambda must be positive");
  if (n < 2) throw std::domain_error("edge_probability needs n >= 2");
  if (!(alpha >= 1.0)) throw std::domain_error("alpha must be >= 1");
  const double eps = params.epsilon;
  const double raw = params.c0 * alpha * std::log(static_cast<double>(n)) / (lambda * eps * eps);
  return std::min(raw, 1.0);
}

std::string provenance_json(const Provenance& p) {
  auto to_json = [](const Provenance& q, auto&& self) -> nlohmann::ordered_json {
    nlohmann::ordered_json j;
    j["scheme"] = q.scheme;
    j["epsilon"] = q.epsilon;
    j["alpha"] = q.alpha;
    j["c0"] = q.c0;
    j["seed"] = q.seed;
    if (!q.stages.empty()) {
      j["stages"] = nlohmann::ordered_json::array();
      for (const Provenance& s : q.stages) j["stages"].push_back(self(s, self));
    }
    return j;
  };
  return to_json(p, to_json).dump(2);
}

Rational exact_rational(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("exact_rational needs a positive finite value");
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  Rational r(scaled);
  const int shift = exponent - 53;
  boost::multiprecision::cpp_int power = 1;
  power <<= std::abs(shift);
  return shift >= 0 ? r * Rational(power) : r / Rational(power);
}

WeightedGraph Skeleton::to_weighted() const {
  WeightedGraph out;
  out.vertex_count = vertex_count;
  out.edges.reserve(edges.size());
  for (const SkeletonEdge& e : edges) {
    const auto num = boost::multiprecision::numerator(e.weight).convert_to<long double>();
    const auto den = boost::multiprecision::denominator(e.weight).convert_to<long double>();
    out.edges.push_back({e.u, e.v, num / den});
  }
  return out;
}

void Skeleton::write(std::ostream& os) const {
  os << vertex_count << ' ' << edges.size() << '\n';
  for (const SkeletonEdge& e : edges) {
    os << e.u << ' ' << e.v << ' ' << boost::multiprecision::numerator(e.weight) << '/'
       << boost::multiprecision::denominator(e.weight) << '\n';
  }
}

std::string Skeleton::serialize() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

namespace {

void check_lambda(const Graph& g, const LambdaAssignment& lambda, bool enforce_cap = true) {
  if (lambda.lambda.size() != g.edge_count()) {
    throw std::invalid_argument("lambda assignment must cover every edge");
  }
  const std::size_t n = g.vertex_count();
  const double cap = (!enforce_cap || n >= 1024) ? HUGE_VAL : std::ldexp(1.0, static_cast<int>(n)) - 1.0;
  for (double l : lambda.lambda) {
    if (!(l > 0.0) || !(l <= cap)) {
      throw std::out_of_range("lambda value " + std::to_string(l) + " outside (0, 2^n - 1]");
    }
  }
}

}  // namespace

Skeleton sample_skeleton(const Graph& g, const LambdaAssignment& lambda,
                         const SamplingParams& params, bool enforce_lambda_cap) {
  params.validate();
  check_lambda(g, lambda, enforce_lambda_cap);
  const double alpha = params.alpha.value_or(lambda.alpha);
  Skeleton sk;
  sk.vertex_count = g.vertex_count();
  sk.provenance = {std::string(scheme_name(lambda.scheme)), params.epsilon, alpha, params.c0,
                   params.seed, {}};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const double p = edge_probability(lambda.lambda[e], g.vertex_count(), alpha, params);
    SplitMix64 rng = SplitMix64::substream(params.seed, e);
    const std::int64_t r = binomial_sample(ed.w, p, rng);
    if (r == 0) continue;
    sk.edges.push_back({e, ed.u, ed.v, r, p, Rational(r) / exact_rational(p)});
  }
  return sk;
}

ExpectedSize expected_skeleton_size(const Graph& g, const LambdaAssignment& lambda,
                                    const SamplingParams& params) {
  params.validate();
  check_lambda(g, lambda, false);
  const double alpha = params.alpha.value_or(lambda.alpha);
  ExpectedSize out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const double w = static_cast<double>(g.edge(e).w);
    const double p = edge_probability(lambda.lambda[e], g.vertex_count(), alpha, params);
    out.distinct_edges += p >= 1.0 ? 1.0 : -std::expm1(w * std::log1p(-p));
    out.sum_wp += w * p;
    out.sum_w_over_lambda += w / lambda.lambda[e];
  }
  if (g.vertex_count() >= 2) {
    const double eps = params.epsilon;
    out.bound = params.c0 * alpha * std::log(static_cast<double>(g.vertex_count())) /
                (eps * eps) * out.sum_w_over_lambda;
  }
  return out;
}

}  // namespace cutsparse
