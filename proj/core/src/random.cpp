#include "cutsparse/random.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace cutsparse {

namespace {

// Counts successes by jumping over geometric runs of failures.
std::int64_t geometric_skip(std::int64_t trials, double p, SplitMix64& rng) {
  const double log_q = std::log1p(-p);
  std::int64_t count = 0;
  double position = 0;  // index of the last success, 1-based
  for (;;) {
    double u = rng.uniform();
    while (u == 0.0) u = rng.uniform();
    position += std::floor(std::log(u) / log_q) + 1;
    if (position > static_cast<double>(trials)) return count;
    ++count;
  }
}

constexpr double kSkipThreshold = 32.0;

}  // namespace

std::int64_t binomial_sample(std::int64_t trials, double p, SplitMix64& rng) {
  if (trials < 0) throw std::domain_error("binomial trials must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binomial probability outside [0, 1]");
  if (trials == 0 || p == 0.0) return 0;
  if (p == 1.0) return trials;
  if (p > 0.5) return trials - binomial_sample(trials, 1.0 - p, rng);
  if (static_cast<double>(trials) * p < kSkipThreshold) return geometric_skip(trials, p, rng);
  std::binomial_distribution<std::int64_t> dist(trials, p);
  return dist(rng);
}

}  // namespace cutsparse
