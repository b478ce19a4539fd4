#pragma once

#include <cstdint>
#include <limits>

namespace cutsparse {

/// SplitMix64: small, seedable generator that satisfies
/// UniformRandomBitGenerator. Independent substreams are derived by hashing
/// (seed, stream id), so per-edge draws do not depend on processing order.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    return mix(z);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Generator for substream `stream` of `seed`.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t stream) noexcept {
    return SplitMix64(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL)));
  }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Exact Binomial(trials, p) draw. Small expected counts use geometric
/// skipping, so the expected cost is O(trials * min(p, 1 - p) + 1).
/// Throws std::domain_error when p is outside [0, 1] or trials < 0.
std::int64_t binomial_sample(std::int64_t trials, double p, SplitMix64& rng);

}  // namespace cutsparse
