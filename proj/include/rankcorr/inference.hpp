#pragma once

#include <cmath>
#include <string>

#include "rankcorr/normal.hpp"
#include "rankcorr/sample.hpp"

namespace rankcorr {

template <typename Scalar = double>
struct TestResult {
  Scalar z;
  Scalar p_value;
  Scalar alpha;
  bool reject;
};

/// Upper alpha/2 standard-normal quantile, by bisection on the tail.
template <typename Scalar>
Scalar normal_critical_value(Scalar alpha) {
  Scalar lo(0), hi(40);
  for (int it = 0; it < 200; ++it) {
    const Scalar mid = (lo + hi) / 2;
    if (2 * normal_sf(mid) > alpha) lo = mid; else hi = mid;
  }
  return (lo + hi) / 2;
}

/// Asymptotic test of rho = 0 for a rank score correlation: under
/// independence E[r] = 0 and Var[r] = 1/(n-1), so z = r sqrt(n-1) is
/// approximately standard normal. With ties the null variance is no longer
/// exact and the test is approximate.
template <typename Scalar>
TestResult<Scalar> wald_test(Scalar estimate, Index n, Scalar alpha) {
  if (!(alpha > 0 && alpha < 1)) {
    throw Error(ErrorCode::BadAlpha, "alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  if (n < 3) throw Error(ErrorCode::TooSmall, "the test needs n >= 3");
  if (!std::isfinite(estimate)) throw Error(ErrorCode::NonFinite, "estimate is not finite");
  const Scalar z = estimate * std::sqrt(Scalar(n - 1));
  const Scalar p = std::min(Scalar(1), 2 * normal_sf(std::abs(z)));
  return {z, p, alpha, std::abs(z) > normal_critical_value(alpha)};
}

template <typename Scalar>
EstimateResult<Scalar> attach_test(EstimateResult<Scalar> result, Scalar alpha) {
  const auto t = wald_test(result.estimate, result.n, alpha);
  result.z = t.z;
  result.p_value = t.p_value;
  return result;
}

}  // namespace rankcorr
