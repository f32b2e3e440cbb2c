// Randomized invariants shared by all estimators.

#include "test_support.hpp"

using namespace rankcorr;

namespace {

constexpr EstimatorKind kExactRank[] = {EstimatorKind::SpearmanMoment, EstimatorKind::SpearmanSimplified,
                                        EstimatorKind::SpearmanDsq, EstimatorKind::Kendall,
                                        EstimatorKind::ScoreBased};

PairedSample<double> correlated(std::mt19937_64& gen, Index n) {
  auto x = rankcorr::testing::tie_free(gen, n);
  auto y = rankcorr::testing::tie_free(gen, n);
  std::uniform_real_distribution<double> mixing(-0.9, 0.9);
  const double w = mixing(gen);
  y = (w * x + std::sqrt(1 - w * w) * y).eval();
  return validate_sample(x, y);
}

}  // namespace

TEST(Properties, SymmetryInArguments) {
  std::mt19937_64 gen(1);
  for (int t = 0; t < 100; ++t) {
    const auto s = correlated(gen, 5 + t % 40);
    for (auto kind : kAllEstimators) {
      EXPECT_NEAR(estimate(kind, s).estimate, estimate(kind, s.swapped()).estimate, 1e-12) << to_string(kind);
    }
  }
}

TEST(Properties, SignFlip) {
  std::mt19937_64 gen(2);
  for (int t = 0; t < 100; ++t) {
    const Index n = 5 + t % 40;
    const auto s = correlated(gen, n);
    const auto flipped = validate_sample(s.xs(), (-s.ys()).eval());
    for (auto kind : kExactRank) {
      EXPECT_NEAR(estimate(kind, flipped).estimate, -estimate(kind, s).estimate, 1e-12) << to_string(kind);
    }
    EXPECT_NEAR(pearson(flipped).estimate, -pearson(s).estimate, 1e-12);
    // R^(-y) = n - R^(y), whose centered value is -(R^ - (n+1)/2) - 1; the
    // smoothed ranks sum to n^2/2, leaving an offset of 6/(n^2 - 1).
    const double offset = 6.0 / (double(n) * n - 1.0);
    EXPECT_NEAR(smoothed_score_correlation(flipped).estimate, -smoothed_score_correlation(s).estimate + offset, 1e-10);
    // The interpolated ECDF mirrors exactly.
    const SmoothingOptions interp{SmoothKernel::InterpolatedEcdf, {}};
    EXPECT_NEAR(smoothed_score_correlation(flipped, interp).estimate, -smoothed_score_correlation(s, interp).estimate,
                1e-12);
  }
}

TEST(Properties, MonotoneInvarianceOfRankEstimators) {
  std::mt19937_64 gen(3);
  for (int t = 0; t < 100; ++t) {
    const auto s = correlated(gen, 5 + t % 40);
    const Vector<double> gx = s.xs().array().exp();
    const Vector<double> gy = (s.ys().array().cube() + s.ys().array());
    const auto transformed = validate_sample(gx, gy);
    for (auto kind : kExactRank) {
      EXPECT_EQ(estimate(kind, transformed).estimate, estimate(kind, s).estimate) << to_string(kind);
    }
  }
}

TEST(Properties, SmoothedIsAffineButNotMonotoneInvariant) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> coef(0.05, 20.0), shift(-100.0, 100.0);
  int differs = 0;
  for (int t = 0; t < 100; ++t) {
    const auto s = correlated(gen, 10 + t % 40);
    const auto affine = validate_sample((coef(gen) * s.xs().array() + shift(gen)).matrix().eval(),
                                        (coef(gen) * s.ys().array() + shift(gen)).matrix().eval());
    for (auto bw : {BandwidthSpec::heller(), BandwidthSpec::silverman()}) {
      const SmoothingOptions opts{SmoothKernel::NormalCdf, bw};
      EXPECT_NEAR(smoothed_score_correlation(affine, opts).estimate, smoothed_score_correlation(s, opts).estimate, 1e-10);
    }
    const auto curved = validate_sample(s.xs().array().exp().matrix().eval(), s.ys());
    differs += std::abs(smoothed_score_correlation(curved).estimate - smoothed_score_correlation(s).estimate) > 1e-6;
  }
  EXPECT_GT(differs, 90);
}

TEST(Properties, RangeBounds) {
  std::mt19937_64 gen(5);
  for (int t = 0; t < 200; ++t) {
    const Index n = 2 + t % 50;
    const auto s = correlated(gen, n);
    for (auto kind : kAllEstimators) {
      const double r = estimate(kind, s).estimate;
      const double bound = kind == EstimatorKind::SmoothedScore ? 1.0 + 3.0 / (n + 1.0) : 1.0 + 1e-12;
      EXPECT_LE(std::abs(r), bound) << to_string(kind);
    }
  }
}

TEST(Properties, SmoothedEcdfMonotoneInT) {
  std::mt19937_64 gen(6);
  std::uniform_real_distribution<double> bw(0.01, 3.0);
  for (int t = 0; t < 50; ++t) {
    const auto v = rankcorr::testing::tie_free(gen, 3 + t % 30);
    const double h = bw(gen);
    for (auto kernel : {SmoothKernel::NormalCdf, SmoothKernel::LogisticCdf}) {
      double previous = -1.0;
      for (double x = -5.0; x <= 5.0; x += 0.05) {
        const double f = smoothed_ecdf(v, x, kernel, h);
        EXPECT_GE(f, previous);
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1.0);
        previous = f;
      }
    }
  }
}

TEST(Properties, SmallBandwidthRecoversShiftedRanks) {
  std::mt19937_64 gen(7);
  for (int t = 0; t < 50; ++t) {
    const auto v = rankcorr::testing::tie_free(gen, 2 + t);
    const double h = 1e-6 * (v.maxCoeff() - v.minCoeff());
    const auto smooth = smoothed_ranks(v, SmoothKernel::NormalCdf, h).ranks;
    const auto ranks = ordinary_ranks(v).ranks;
    EXPECT_LT((smooth.array() - (ranks.array() - 0.5)).abs().maxCoeff(), 1e-6);
  }
}
