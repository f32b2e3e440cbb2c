#pragma once

#include <cmath>
#include <numbers>

namespace rankcorr {

// Phi(x) = erfc(-x / sqrt 2) / 2. erfc keeps full relative precision in the
// lower tail, so the absolute error stays well under 1e-12 everywhere.
template <typename Scalar>
Scalar normal_cdf(Scalar x) {
  return Scalar(0.5) * std::erfc(-x / std::numbers::sqrt2_v<Scalar>);
}

// Upper tail 1 - Phi(x) without cancellation.
template <typename Scalar>
Scalar normal_sf(Scalar x) {
  return Scalar(0.5) * std::erfc(x / std::numbers::sqrt2_v<Scalar>);
}

}  // namespace rankcorr
