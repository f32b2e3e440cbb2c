#pragma once

#include <cstdint>
#include <limits>

namespace rankcorr {

/// Counter-based stream: output k is a SplitMix64 finalizer applied to
/// key + k * golden-gamma. Period 2^64 per stream, bit-identical on every
/// platform, and distinct streams are derived by hashing (seed, ids...).
/// Satisfies UniformRandomBitGenerator.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed) : key_(mix(seed)) {}

  /// Sub-stream identified by (seed, a, b), independent of call order.
  static RngStream derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix(key_ + kGamma * ++counter_); }

  /// Uniform on the open interval (0, 1), 53 bits.
  double uniform();

  /// Standard normal via Box-Muller; caches the second variate.
  double normal();

  std::uint64_t counter() const noexcept { return counter_; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rankcorr
