#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "rankcorr/normal.hpp"
#include "rankcorr/sample.hpp"

namespace rankcorr {

/// Ranks of a sample, either ordinary (average method for ties) or smoothed.
template <typename Scalar = double>
struct RankVector {
  Vector<Scalar> ranks;
  bool smoothed = false;
  Index tie_count = 0;  // number of tied value groups; always 0 when smoothed
};

/// Continuous stand-in for the indicator I(x <= t). InterpolatedEcdf is the
/// bandwidth-free piecewise-linear ECDF through midpoint cells.
enum class SmoothKernel { NormalCdf, LogisticCdf, InterpolatedEcdf };

constexpr std::string_view to_string(SmoothKernel kernel) noexcept {
  switch (kernel) {
    case SmoothKernel::NormalCdf: return "normal";
    case SmoothKernel::LogisticCdf: return "logistic";
    case SmoothKernel::InterpolatedEcdf: return "interpolated";
  }
  return "unknown";
}

inline std::optional<SmoothKernel> parse_kernel(std::string_view name) {
  for (auto k : {SmoothKernel::NormalCdf, SmoothKernel::LogisticCdf, SmoothKernel::InterpolatedEcdf}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

template <typename Scalar>
Scalar kernel_cdf(SmoothKernel kernel, Scalar u) {
  switch (kernel) {
    case SmoothKernel::NormalCdf: return normal_cdf(u);
    case SmoothKernel::LogisticCdf: return Scalar(1) / (Scalar(1) + std::exp(-u));
    case SmoothKernel::InterpolatedEcdf: break;
  }
  throw Error(ErrorCode::UnsupportedKernel, "the interpolated ECDF is not a kernel CDF");
}

namespace detail {

template <typename Derived>
std::vector<Index> argsort(const Eigen::DenseBase<Derived>& v) {
  std::vector<Index> order(static_cast<std::size_t>(v.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return v(a) < v(b); });
  return order;
}

template <typename Scalar>
void require_bandwidth(Scalar h) {
  if (!(h > Scalar(0)) || !std::isfinite(h)) {
    throw Error(ErrorCode::BadBandwidth, "bandwidth must be positive and finite, got " + std::to_string(h));
  }
}

}  // namespace detail

/// Average-method ranks in [1, n]; tied values share the mean of the
/// positions they occupy, so the ranks always sum to n(n+1)/2.
template <typename Derived>
RankVector<typename Derived::Scalar> ordinary_ranks(const Eigen::DenseBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  detail::require_finite(v, "rank input");
  const Index n = v.size();
  const auto order = detail::argsort(v);

  RankVector<Scalar> out;
  out.ranks.resize(n);
  Index start = 0;
  while (start < n) {
    Index stop = start + 1;
    while (stop < n && v(order[stop]) == v(order[start])) ++stop;
    // positions start+1 .. stop (1-based)
    const Scalar rank = Scalar(start + 1 + stop) / Scalar(2);
    for (Index k = start; k < stop; ++k) out.ranks(order[k]) = rank;
    if (stop - start > 1) ++out.tie_count;
    start = stop;
  }
  return out;
}

template <typename Derived>
bool has_ties(const Eigen::DenseBase<Derived>& v) {
  return ordinary_ranks(v).tie_count > 0;
}

/// Fraction of the sample at or below t.
template <typename Derived>
typename Derived::Scalar ecdf(const Eigen::DenseBase<Derived>& v, typename Derived::Scalar t) {
  using Scalar = typename Derived::Scalar;
  detail::require_finite(v, "ecdf input");
  const auto count = (v.derived().array() <= t).count();
  return Scalar(count) / Scalar(v.size());
}

/// (1/n) sum_j H((t - v_j) / h).
template <typename Derived>
typename Derived::Scalar smoothed_ecdf(const Eigen::DenseBase<Derived>& v, typename Derived::Scalar t,
                                       SmoothKernel kernel, typename Derived::Scalar h) {
  using Scalar = typename Derived::Scalar;
  detail::require_bandwidth(h);
  detail::require_finite(v, "ecdf input");
  Scalar acc(0);
  for (Index j = 0; j < v.size(); ++j) acc += kernel_cdf(kernel, (t - v(j)) / h);
  return acc / Scalar(v.size());
}

/// R^(v_i) = sum_j H((v_i - v_j) / h), i.e. n times the smoothed ECDF at v_i.
/// Direct O(n^2) summation.
template <typename Derived>
RankVector<typename Derived::Scalar> smoothed_ranks(const Eigen::DenseBase<Derived>& v, SmoothKernel kernel,
                                                    typename Derived::Scalar h) {
  using Scalar = typename Derived::Scalar;
  detail::require_bandwidth(h);
  detail::require_finite(v, "rank input");
  const Index n = v.size();
  RankVector<Scalar> out;
  out.smoothed = true;
  out.ranks.resize(n);
  for (Index i = 0; i < n; ++i) {
    Scalar acc(0);
    for (Index j = 0; j < n; ++j) acc += kernel_cdf(kernel, (v(i) - v(j)) / h);
    out.ranks(i) = acc;
  }
  return out;
}

/// Piecewise-linear ECDF H_n evaluated at every sample point, returned in
/// input order. Cell boundaries are midpoints between consecutive order
/// statistics, with the outer cells mirrored about the extremes:
///   H_n(X_(i)) = (i-1)/n + (X_(i) - V_i) / (n (V_{i+1} - V_i)).
/// Requires n >= 2 distinct values; a repeated value gives a zero-width cell.
template <typename Derived>
Vector<typename Derived::Scalar> interpolated_ecdf_at_order_stats(const Eigen::DenseBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  detail::require_finite(v, "interpolated ecdf input");
  const Index n = v.size();
  if (n < 2) throw Error(ErrorCode::TooSmall, "interpolated ECDF needs at least 2 values");

  const auto order = detail::argsort(v);
  Vector<Scalar> sorted(n);
  for (Index k = 0; k < n; ++k) sorted(k) = v(order[k]);
  for (Index k = 1; k < n; ++k) {
    if (sorted(k) == sorted(k - 1)) {
      throw Error(ErrorCode::DuplicateValues, "value " + std::to_string(sorted(k)) + " occurs more than once");
    }
  }

  // cells(k) holds V_{k+1}; n + 1 boundaries.
  Vector<Scalar> cells(n + 1);
  for (Index k = 1; k < n; ++k) cells(k) = (sorted(k - 1) + sorted(k)) / Scalar(2);
  cells(0) = sorted(0) - (cells(1) - sorted(0));
  cells(n) = sorted(n - 1) + (sorted(n - 1) - cells(n - 1));

  Vector<Scalar> out(n);
  for (Index k = 0; k < n; ++k) {
    out(order[k]) = Scalar(k) / Scalar(n) + (sorted(k) - cells(k)) / (Scalar(n) * (cells(k + 1) - cells(k)));
  }
  return out;
}

}  // namespace rankcorr
