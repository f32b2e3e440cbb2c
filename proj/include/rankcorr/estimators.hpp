#pragma once

#include <Eigen/Core>

#include <cmath>

#include "rankcorr/bandwidth.hpp"
#include "rankcorr/ranking.hpp"
#include "rankcorr/sample.hpp"
#include "rankcorr/scores.hpp"

namespace rankcorr {

/// Kernel and bandwidth rule for the smoothed score estimator. The bandwidth
/// is resolved separately for each coordinate.
struct SmoothingOptions {
  SmoothKernel kernel = SmoothKernel::NormalCdf;
  BandwidthSpec bandwidth = BandwidthSpec::heller(ScaleEstimator::Mad);
};

namespace detail {

template <typename DX, typename DY>
typename DX::Scalar centered_correlation(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) {
  using Scalar = typename DX::Scalar;
  const Vector<Scalar> cx = x.array() - x.mean();
  const Vector<Scalar> cy = y.array() - y.mean();
  const Scalar sxx = cx.squaredNorm();
  const Scalar syy = cy.squaredNorm();
  if (!(sxx > 0) || !(syy > 0)) throw Error(ErrorCode::ZeroVariance, "a coordinate has zero variance");
  const Scalar r = cx.dot(cy) / std::sqrt(sxx * syy);
  return std::clamp(r, Scalar(-1), Scalar(1));
}

// n(n^2 - 1)/12, the sum of squared centered ranks without ties.
template <typename Scalar>
Scalar rank_scatter(Index n) {
  return Scalar(n) * (Scalar(n) * Scalar(n) - Scalar(1)) / Scalar(12);
}

template <typename Scalar>
Scalar sign(Scalar v) {
  return Scalar((v > 0) - (v < 0));
}

}  // namespace detail

/// Two-pass centered product-moment correlation.
template <typename Scalar>
EstimateResult<Scalar> pearson(const PairedSample<Scalar>& s) {
  return {EstimatorKind::Pearson, detail::centered_correlation(s.xs(), s.ys()), s.size(), {}, {}, {}};
}

/// Pearson correlation of the average-method ranks. Valid with ties.
template <typename Scalar>
EstimateResult<Scalar> spearman_moment(const PairedSample<Scalar>& s) {
  const auto rx = ordinary_ranks(s.xs());
  const auto ry = ordinary_ranks(s.ys());
  return {EstimatorKind::SpearmanMoment, detail::centered_correlation(rx.ranks, ry.ranks), s.size(), {}, {}, {}};
}

/// Centered rank cross products over the tie-free rank scatter n(n^2-1)/12.
template <typename Scalar>
EstimateResult<Scalar> spearman_simplified(const PairedSample<Scalar>& s) {
  const auto rx = ordinary_ranks(s.xs());
  const auto ry = ordinary_ranks(s.ys());
  if (rx.tie_count > 0 || ry.tie_count > 0) {
    throw Error(ErrorCode::TiesPresent, "the simplified Spearman form assumes distinct values in both coordinates");
  }
  const Index n = s.size();
  const Scalar mid = Scalar(n + 1) / Scalar(2);
  const Scalar num = (rx.ranks.array() - mid).matrix().dot((ry.ranks.array() - mid).matrix());
  return {EstimatorKind::SpearmanSimplified, num / detail::rank_scatter<Scalar>(n), n, {}, {}, {}};
}

/// 1 - 6 sum D_i^2 / (n(n^2-1)) with D_i the rank difference. Exact without
/// ties; approximate (slightly off) with them.
template <typename Scalar>
EstimateResult<Scalar> spearman_dsq(const PairedSample<Scalar>& s) {
  const auto rx = ordinary_ranks(s.xs());
  const auto ry = ordinary_ranks(s.ys());
  const Index n = s.size();
  const Scalar dsq = (rx.ranks - ry.ranks).squaredNorm();
  const Scalar r = Scalar(1) - Scalar(6) * dsq / (Scalar(n) * (Scalar(n) * Scalar(n) - Scalar(1)));
  return {EstimatorKind::SpearmanDsq, r, n, {}, {}, {}};
}

/// Tau-a: (concordant - discordant) / (n(n-1)/2). Pairs tied in either
/// coordinate count toward neither.
template <typename Scalar>
EstimateResult<Scalar> kendall(const PairedSample<Scalar>& s) {
  const Index n = s.size();
  const auto& x = s.xs();
  const auto& y = s.ys();
  long long balance = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      balance += static_cast<long long>(detail::sign(x(j) - x(i)) * detail::sign(y(j) - y(i)));
    }
  }
  const Scalar pairs = Scalar(n) * Scalar(n - 1) / Scalar(2);
  return {EstimatorKind::Kendall, Scalar(balance) / pairs, n, {}, {}, {}};
}

/// r_a = (1/s_a^2) sum a(R(X_i)) a(R(Y_i)) on ordinary ranks.
template <typename Scalar>
EstimateResult<Scalar> score_correlation(const PairedSample<Scalar>& s, ScoreFunction fn = ScoreFunction::Wilcoxon) {
  const auto rx = ordinary_ranks(s.xs());
  const auto ry = ordinary_ranks(s.ys());
  const Index n = s.size();
  const Vector<Scalar> ax = scores(fn, rx.ranks);
  const Vector<Scalar> ay = scores(fn, ry.ranks);
  return {EstimatorKind::ScoreBased, ax.dot(ay) / score_norm_sq<Scalar>(fn, n), n, {}, {}, {}};
}

/// Smoothed Wilcoxon score correlation r_sa.
///
/// Kernel path: smoothed ranks R^ replace the ordinary ranks and
///   r_sa = sum (R^(X_i) - (n+1)/2)(R^(Y_i) - (n+1)/2) / (n(n^2-1)/12),
/// i.e. the score correlation with the tie-free constant s_a^2 = n(n-1)/(n+1)
/// kept as the normalizer. The result is not clamped; smoothing shrinks the
/// rank spread, so |r_sa| is typically a little below |r_s| for wide h, and as
/// h -> 0 (R^ -> R - 1/2) it tends to r_s + 3/(n^2 - 1).
///
/// InterpolatedEcdf path: scores sqrt(12)(H_n - 1/2) from the piecewise-linear
/// ECDF, with the same s_a^2. Rejects repeated values.
template <typename Scalar>
EstimateResult<Scalar> smoothed_score_correlation(const PairedSample<Scalar>& s, const SmoothingOptions& opts = {}) {
  const Index n = s.size();
  EstimateResult<Scalar> out{EstimatorKind::SmoothedScore, Scalar(0), n, {}, {}, {}};

  if (opts.kernel == SmoothKernel::InterpolatedEcdf) {
    const Vector<Scalar> hx = interpolated_ecdf_at_order_stats(s.xs());
    const Vector<Scalar> hy = interpolated_ecdf_at_order_stats(s.ys());
    const Vector<Scalar> ax = std::sqrt(Scalar(12)) * (hx.array() - Scalar(0.5));
    const Vector<Scalar> ay = std::sqrt(Scalar(12)) * (hy.array() - Scalar(0.5));
    out.estimate = ax.dot(ay) / score_norm_sq<Scalar>(ScoreFunction::Wilcoxon, n);
    return out;
  }

  const Scalar hx = resolve(opts.bandwidth, s.xs());
  const Scalar hy = resolve(opts.bandwidth, s.ys());
  const auto rx = smoothed_ranks(s.xs(), opts.kernel, hx);
  const auto ry = smoothed_ranks(s.ys(), opts.kernel, hy);
  const Scalar mid = Scalar(n + 1) / Scalar(2);
  const Scalar num = (rx.ranks.array() - mid).matrix().dot((ry.ranks.array() - mid).matrix());
  out.estimate = num / detail::rank_scatter<Scalar>(n);
  out.bandwidth = BandwidthPair<Scalar>{hx, hy};
  return out;
}

/// Dispatch on the estimator tag. `opts` is consulted only for SmoothedScore.
template <typename Scalar>
EstimateResult<Scalar> estimate(EstimatorKind kind, const PairedSample<Scalar>& s, const SmoothingOptions& opts = {}) {
  switch (kind) {
    case EstimatorKind::Pearson: return pearson(s);
    case EstimatorKind::SpearmanMoment: return spearman_moment(s);
    case EstimatorKind::SpearmanSimplified: return spearman_simplified(s);
    case EstimatorKind::SpearmanDsq: return spearman_dsq(s);
    case EstimatorKind::Kendall: return kendall(s);
    case EstimatorKind::ScoreBased: return score_correlation(s);
    case EstimatorKind::SmoothedScore: return smoothed_score_correlation(s, opts);
  }
  throw Error(ErrorCode::InvalidConfig, "unknown estimator");
}

}  // namespace rankcorr
