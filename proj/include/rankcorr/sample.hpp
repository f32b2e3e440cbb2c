#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>

#include "rankcorr/errors.hpp"

namespace rankcorr {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

namespace detail {

template <typename Derived>
void require_finite(const Eigen::DenseBase<Derived>& v, std::string_view what) {
  if (!v.derived().allFinite()) {
    throw Error(ErrorCode::NonFinite, std::string(what) + " contains NaN or Inf");
  }
}

}  // namespace detail

/// n observation pairs (x_i, y_i), n >= 2, all finite. Only obtainable
/// through validate_sample, so holding one means the invariants hold.
template <typename Scalar = double>
class PairedSample {
 public:
  const Vector<Scalar>& xs() const noexcept { return xs_; }
  const Vector<Scalar>& ys() const noexcept { return ys_; }
  Index size() const noexcept { return xs_.size(); }

  /// The same pairs with coordinates exchanged.
  PairedSample swapped() const { return PairedSample(ys_, xs_); }

  template <typename DX, typename DY>
  friend PairedSample<typename DX::Scalar> validate_sample(const Eigen::DenseBase<DX>& xs,
                                                           const Eigen::DenseBase<DY>& ys);

 private:
  PairedSample(Vector<Scalar> xs, Vector<Scalar> ys) : xs_(std::move(xs)), ys_(std::move(ys)) {}

  Vector<Scalar> xs_;
  Vector<Scalar> ys_;
};

template <typename DX, typename DY>
PairedSample<typename DX::Scalar> validate_sample(const Eigen::DenseBase<DX>& xs,
                                                  const Eigen::DenseBase<DY>& ys) {
  using Scalar = typename DX::Scalar;
  static_assert(std::is_same_v<Scalar, typename DY::Scalar>, "coordinates must share a scalar type");
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::LengthMismatch, "xs has " + std::to_string(xs.size()) + " entries, ys has " +
                                               std::to_string(ys.size()));
  }
  if (xs.size() < 2) {
    throw Error(ErrorCode::TooSmall, "need at least 2 pairs, got " + std::to_string(xs.size()));
  }
  detail::require_finite(xs, "xs");
  detail::require_finite(ys, "ys");
  return PairedSample<Scalar>(Vector<Scalar>(xs.derived()), Vector<Scalar>(ys.derived()));
}

enum class EstimatorKind {
  Pearson,
  SpearmanMoment,
  SpearmanSimplified,
  SpearmanDsq,
  Kendall,
  ScoreBased,
  SmoothedScore,
};

inline constexpr EstimatorKind kAllEstimators[] = {
    EstimatorKind::Pearson,     EstimatorKind::SpearmanMoment, EstimatorKind::SpearmanSimplified,
    EstimatorKind::SpearmanDsq, EstimatorKind::Kendall,        EstimatorKind::ScoreBased,
    EstimatorKind::SmoothedScore,
};

constexpr std::string_view to_string(EstimatorKind kind) noexcept {
  switch (kind) {
    case EstimatorKind::Pearson: return "pearson";
    case EstimatorKind::SpearmanMoment: return "spearman-moment";
    case EstimatorKind::SpearmanSimplified: return "spearman-simplified";
    case EstimatorKind::SpearmanDsq: return "spearman-dsq";
    case EstimatorKind::Kendall: return "kendall";
    case EstimatorKind::ScoreBased: return "score";
    case EstimatorKind::SmoothedScore: return "smoothed";
  }
  return "unknown";
}

inline std::optional<EstimatorKind> parse_estimator(std::string_view name) {
  for (auto kind : kAllEstimators) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

/// Resolved per-coordinate bandwidths of a smoothed estimate.
template <typename Scalar>
struct BandwidthPair {
  Scalar x;
  Scalar y;
};

template <typename Scalar = double>
struct EstimateResult {
  EstimatorKind kind;
  Scalar estimate;
  Index n;
  // Set for SmoothedScore with a kernel that takes a bandwidth.
  std::optional<BandwidthPair<Scalar>> bandwidth;
  // z and p_value are filled together by inference::attach_test.
  std::optional<Scalar> z;
  std::optional<Scalar> p_value;
};

}  // namespace rankcorr
