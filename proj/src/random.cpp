#include "rankcorr/random.hpp"

#include <cmath>
#include <numbers>

namespace rankcorr {

RngStream RngStream::derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = mix(seed);
  h = mix(h ^ (a + kGamma));
  h = mix(h ^ (b + 2 * kGamma));
  return RngStream(h);
}

double RngStream::uniform() {
  // (k + 0.5) / 2^53 is never 0 or 1.
  return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

}  // namespace rankcorr
