#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "rankcorr/sample.hpp"

namespace rankcorr {

enum class BandwidthRule { Silverman, Heller, Fixed };

/// Scale estimate fed to the rule. SdIqrMin is min{s, IQR/1.349}; Mad is
/// 1.4826 * median |v - median(v)|, consistent for sigma under normality.
enum class ScaleEstimator { SdIqrMin, Mad };

struct BandwidthSpec {
  BandwidthRule rule = BandwidthRule::Heller;
  ScaleEstimator scale = ScaleEstimator::Mad;
  double fixed_value = 0.0;

  static BandwidthSpec silverman() { return {BandwidthRule::Silverman, ScaleEstimator::SdIqrMin, 0.0}; }
  static BandwidthSpec heller(ScaleEstimator scale = ScaleEstimator::Mad) { return {BandwidthRule::Heller, scale, 0.0}; }
  static BandwidthSpec fixed(double h) {
    if (!(h > 0.0) || !std::isfinite(h)) {
      throw Error(ErrorCode::BadBandwidth, "fixed bandwidth must be positive, got " + std::to_string(h));
    }
    return {BandwidthRule::Fixed, ScaleEstimator::SdIqrMin, h};
  }
};

inline constexpr double kMadConsistency = 1.4826;
inline constexpr double kIqrToSigma = 1.349;

/// Linear-interpolation quantile on a sorted range (position p * (n - 1)).
template <typename Scalar>
Scalar sorted_quantile(const std::vector<Scalar>& sorted, double p) {
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const Scalar frac = static_cast<Scalar>(pos - static_cast<double>(lo));
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

template <typename Derived>
typename Derived::Scalar median(const Eigen::DenseBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  std::vector<Scalar> sorted(v.derived().begin(), v.derived().end());
  std::sort(sorted.begin(), sorted.end());
  return sorted_quantile(sorted, 0.5);
}

template <typename Derived>
typename Derived::Scalar interquartile_range(const Eigen::DenseBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  std::vector<Scalar> sorted(v.derived().begin(), v.derived().end());
  std::sort(sorted.begin(), sorted.end());
  return sorted_quantile(sorted, 0.75) - sorted_quantile(sorted, 0.25);
}

/// Sample standard deviation, n - 1 denominator.
template <typename Derived>
typename Derived::Scalar sample_sd(const Eigen::DenseBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  const auto centered = v.derived().array() - v.derived().mean();
  return std::sqrt(centered.square().sum() / Scalar(v.size() - 1));
}

template <typename Derived>
typename Derived::Scalar scale_estimate(const Eigen::DenseBase<Derived>& v, ScaleEstimator estimator) {
  using Scalar = typename Derived::Scalar;
  if (estimator == ScaleEstimator::Mad) {
    const Scalar center = median(v);
    const Vector<Scalar> deviations = (v.derived().array() - center).abs().matrix();
    return Scalar(kMadConsistency) * median(deviations);
  }
  return std::min(sample_sd(v), interquartile_range(v) / Scalar(kIqrToSigma));
}

namespace detail {

template <typename Derived>
typename Derived::Scalar checked_scale(const Eigen::DenseBase<Derived>& v, ScaleEstimator estimator) {
  detail::require_finite(v, "bandwidth input");
  if (v.size() < 2) throw Error(ErrorCode::TooSmall, "bandwidth rules need at least 2 values");
  const auto sigma = scale_estimate(v, estimator);
  if (!(sigma > 0)) {
    throw Error(ErrorCode::DegenerateScale, "scale estimate is zero; the sample has no spread");
  }
  return sigma;
}

}  // namespace detail

/// Rule of thumb: 0.9 * min{s, IQR/1.349} * n^(-1/5).
template <typename Derived>
typename Derived::Scalar silverman_bandwidth(const Eigen::DenseBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  const Scalar sigma = detail::checked_scale(v, ScaleEstimator::SdIqrMin);
  return Scalar(0.9) * sigma * std::pow(Scalar(v.size()), Scalar(-0.2));
}

/// sigma * n^(-0.26); n h -> inf and n h^4 -> 0 as n grows.
template <typename Derived>
typename Derived::Scalar heller_bandwidth(const Eigen::DenseBase<Derived>& v, ScaleEstimator estimator) {
  using Scalar = typename Derived::Scalar;
  const Scalar sigma = detail::checked_scale(v, estimator);
  return sigma * std::pow(Scalar(v.size()), Scalar(-0.26));
}

template <typename Derived>
typename Derived::Scalar resolve(const BandwidthSpec& spec, const Eigen::DenseBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  switch (spec.rule) {
    case BandwidthRule::Silverman: return silverman_bandwidth(v);
    case BandwidthRule::Heller: return heller_bandwidth(v, spec.scale);
    case BandwidthRule::Fixed:
      if (!(spec.fixed_value > 0.0)) throw Error(ErrorCode::BadBandwidth, "fixed bandwidth must be positive");
      return static_cast<Scalar>(spec.fixed_value);
  }
  throw Error(ErrorCode::InvalidConfig, "unknown bandwidth rule");
}

}  // namespace rankcorr
