#include "test_support.hpp"

using namespace rankcorr;

TEST(WilcoxonScore, Examples) {
  EXPECT_EQ(score(ScoreFunction::Wilcoxon, 2.0, 3), 0.0);
  EXPECT_NEAR(score(ScoreFunction::Wilcoxon, 1.0, 3), -std::sqrt(12.0) / 4.0, 1e-15);
  EXPECT_NEAR(score(ScoreFunction::Wilcoxon, 3.0, 3), std::sqrt(12.0) / 4.0, 1e-15);
  EXPECT_NEAR(score(ScoreFunction::Wilcoxon, 3.0, 3), 0.866025, 1e-6);
}

TEST(WilcoxonScore, WorksOnSmoothedRanks) {
  const Vector<double> ranks = rankcorr::testing::vec({0.5, 1.5, 2.5});
  const Vector<double> a = scores(ScoreFunction::Wilcoxon, ranks);
  for (Index i = 0; i < 3; ++i) EXPECT_NEAR(a(i), std::sqrt(12.0) * (ranks(i) / 4.0 - 0.5), 1e-15);
}

TEST(ScoreNormSq, ClosedFormMatchesSummation) {
  EXPECT_DOUBLE_EQ(score_norm_sq(ScoreFunction::Wilcoxon, 3), 1.5);
  EXPECT_NEAR(12.0 * (1.0 / 16 + 0.0 + 1.0 / 16), 1.5, 1e-15);
  EXPECT_DOUBLE_EQ(score_norm_sq(ScoreFunction::Wilcoxon, 2), 2.0 / 3.0);
  EXPECT_NEAR(score_norm_sq(ScoreFunction::Wilcoxon, 50), 48.0392, 1e-4);
  for (Index n : {2, 3, 7, 50, 999}) {
    double sum = 0.0;
    for (Index i = 1; i <= n; ++i) sum += std::pow(score(ScoreFunction::Wilcoxon, double(i), n), 2);
    EXPECT_NEAR(sum, score_norm_sq(ScoreFunction::Wilcoxon, n), 1e-10) << n;
  }
}

TEST(WilcoxonScore, CenteredAndAntisymmetric) {
  for (Index n = 2; n <= 200; ++n) {
    double sum = 0.0;
    for (Index i = 1; i <= n; ++i) {
      const double a = score(ScoreFunction::Wilcoxon, double(i), n);
      sum += a;
      EXPECT_NEAR(a, -score(ScoreFunction::Wilcoxon, double(n + 1 - i), n), 1e-14);
    }
    EXPECT_NEAR(sum, 0.0, 1e-12);
  }
}

TEST(WilcoxonScore, Nondecreasing) {
  double previous = -1e300;
  for (int k = 1; k < 100; ++k) {
    const double a = score(ScoreFunction::Wilcoxon, k / 10.0, 10);
    EXPECT_GE(a, previous);
    previous = a;
  }
}
