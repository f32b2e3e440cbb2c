#pragma once

#include <Eigen/Core>

#include <cmath>

#include "rankcorr/sample.hpp"

namespace rankcorr {

/// Score generating function phi on (0, 1), standardized so that its
/// integral is 0 and the integral of its square is 1.
enum class ScoreFunction {
  Wilcoxon,  // phi(u) = sqrt(12) (u - 1/2)
};

/// a(r) = phi(r / (n + 1)). Accepts integer ranks and smoothed real ranks alike.
template <typename Scalar>
Scalar score(ScoreFunction fn, Scalar rank_value, Index n) {
  switch (fn) {
    case ScoreFunction::Wilcoxon:
      return std::sqrt(Scalar(12)) * (rank_value / Scalar(n + 1) - Scalar(0.5));
  }
  return Scalar(0);
}

/// Scores for a whole rank vector, as an Eigen expression.
template <typename Derived>
auto scores(ScoreFunction fn, const Eigen::MatrixBase<Derived>& ranks) {
  using Scalar = typename Derived::Scalar;
  const Index n = ranks.size();
  return ranks.unaryExpr([fn, n](Scalar r) { return score(fn, r, n); });
}

/// s_a^2 = sum_{i=1}^n a(i)^2. For Wilcoxon scores this is n(n-1)/(n+1).
template <typename Scalar = double>
Scalar score_norm_sq(ScoreFunction fn, Index n) {
  switch (fn) {
    case ScoreFunction::Wilcoxon:
      return Scalar(n) * Scalar(n - 1) / Scalar(n + 1);
  }
  return Scalar(0);
}

}  // namespace rankcorr
