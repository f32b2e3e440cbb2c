#include "test_support.hpp"

using namespace rankcorr;

namespace {

CampaignConfig small_config() {
  CampaignConfig cfg;
  cfg.rho_grid = {0.0, 0.5};
  cfg.reporting_rhos = {0.0, 0.5};
  cfg.replicates = 200;
  cfg.n = 20;
  cfg.seed = 17;
  return cfg;
}

}  // namespace

TEST(RhoGrid, FiftyOnePointsWithoutDrift) {
  const auto grid = make_rho_grid(0.0, 1.0, 0.02);
  ASSERT_EQ(grid.size(), 51u);
  EXPECT_EQ(grid.front(), 0.0);
  EXPECT_EQ(grid[25], 0.5);
  EXPECT_EQ(grid.back(), 1.0);
  EXPECT_THROW(make_rho_grid(0.0, 1.0, 0.0), Error);
}

TEST(Campaign, Validation) {
  auto cfg = small_config();
  cfg.replicates = 99;
  EXPECT_THROW(validate_campaign(cfg), Error);
  cfg = small_config();
  cfg.rho_grid = {0.5, 0.1};
  EXPECT_THROW(validate_campaign(cfg), Error);
  cfg = small_config();
  cfg.reporting_rhos = {1.2};
  EXPECT_THROW(validate_campaign(cfg), Error);
  cfg = small_config();
  cfg.estimators.clear();
  EXPECT_THROW(validate_campaign(cfg), Error);
  EXPECT_NO_THROW(validate_campaign(small_config()));
}

TEST(Campaign, PerfectLineHasZeroPearsonMse) {
  auto cfg = small_config();
  cfg.rho_grid = {1.0};
  cfg.reporting_rhos.clear();
  cfg.estimators = {EstimatorKind::Pearson};
  const auto report = run_campaign(cfg);
  EXPECT_LT(report.cell(EstimatorKind::Pearson, 1.0).mse, 1e-20);
}

TEST(Campaign, NullSpearmanMseMatchesTheoreticalVariance) {
  CampaignConfig cfg;
  cfg.rho_grid = {0.0};
  cfg.reporting_rhos.clear();
  cfg.replicates = 2000;
  cfg.estimators = {EstimatorKind::SpearmanDsq};
  cfg.seed = 101;
  const auto report = run_campaign(cfg);
  EXPECT_NEAR(report.cell(EstimatorKind::SpearmanDsq, 0.0).mse, 1.0 / 49.0, 0.15 / 49.0);
}

TEST(Campaign, NullKendallOverSmoothedRatio) {
  CampaignConfig cfg;
  cfg.rho_grid.clear();
  cfg.reporting_rhos = {0.0};
  cfg.replicates = 2000;
  cfg.seed = 102;
  const auto report = run_campaign(cfg);
  const double ratio = relative_efficiency(report, EstimatorKind::Kendall, EstimatorKind::SmoothedScore, 0.0);
  EXPECT_GE(ratio, 0.38);
  EXPECT_LE(ratio, 0.56);
}

TEST(Campaign, MseDecomposition) {
  const auto report = run_campaign(small_config());
  ASSERT_EQ(report.cells.size(), 2u * 4u);
  for (const auto& c : report.cells) {
    EXPECT_EQ(c.mse, c.bias * c.bias + c.variance);
    EXPECT_NEAR(c.bias, c.mean_estimate - c.rho, 1e-15);
    EXPECT_GE(c.mse, 0.0);
  }
}

TEST(Campaign, DeterministicAcrossRunsAndThreadCounts) {
  auto cfg = small_config();
  cfg.threads = 1;
  const auto a = run_campaign(cfg);
  cfg.threads = 4;
  const auto b = run_campaign(cfg);
  ASSERT_EQ(a.cells.size(), b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    EXPECT_EQ(a.cells[i].mean_estimate, b.cells[i].mean_estimate);
    EXPECT_EQ(a.cells[i].variance, b.cells[i].variance);
  }
  cfg.seed = 18;
  const auto c = run_campaign(cfg);
  EXPECT_NE(a.cells[0].mean_estimate, c.cells[0].mean_estimate);
}

TEST(Campaign, SameRhoSameStreamsAcrossConfigs) {
  auto cfg = small_config();
  const auto a = run_campaign(cfg);
  cfg.rho_grid = {0.5};
  cfg.reporting_rhos = {0.5};
  const auto b = run_campaign(cfg);
  EXPECT_EQ(a.cell(EstimatorKind::Kendall, 0.5).mse, b.cell(EstimatorKind::Kendall, 0.5).mse);
}

TEST(Campaign, UnionOfGridAndReportingRhos) {
  auto cfg = small_config();
  cfg.rho_grid = {0.0, 0.1};
  cfg.reporting_rhos = {0.1, 0.25};
  const auto report = run_campaign(cfg);
  EXPECT_EQ(report.rhos, (std::vector<double>{0.0, 0.1, 0.25}));
  EXPECT_EQ(report.curve_rows().size(), 2u * cfg.estimators.size());
  ASSERT_EQ(report.efficiency.size(), 2u);
  EXPECT_EQ(report.efficiency[1].rho, 0.25);
}

TEST(Campaign, FgmModel) {
  auto cfg = small_config();
  cfg.family = ModelFamily::FgmExponential;
  const auto report = run_campaign(cfg);
  // Kendall's tau under FGM is 2 rho / 9.
  EXPECT_NEAR(report.cell(EstimatorKind::Kendall, 0.5).mean_estimate, 1.0 / 9.0, 0.03);
}

TEST(RelativeEfficiency, OrientationAndErrors) {
  const auto report = run_campaign(small_config());
  EXPECT_EQ(relative_efficiency(report, EstimatorKind::Kendall, EstimatorKind::Kendall, 0.5), 1.0);
  const double ps = relative_efficiency(report, EstimatorKind::Pearson, EstimatorKind::SmoothedScore, 0.5);
  EXPECT_EQ(ps, report.cell(EstimatorKind::Pearson, 0.5).mse / report.cell(EstimatorKind::SmoothedScore, 0.5).mse);
  EXPECT_EQ(report.efficiency[1].pears_smoot, ps);
  try {
    relative_efficiency(report, EstimatorKind::SpearmanMoment, EstimatorKind::Pearson, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingCell);
  }
  EXPECT_THROW(relative_efficiency(report, EstimatorKind::Pearson, EstimatorKind::Kendall, 0.3), Error);
}

TEST(RelativeEfficiency, MissingEstimatorLeavesColumnEmpty) {
  auto cfg = small_config();
  cfg.estimators = {EstimatorKind::Pearson, EstimatorKind::SmoothedScore};
  const auto report = run_campaign(cfg);
  EXPECT_TRUE(report.efficiency[0].pears_smoot.has_value());
  EXPECT_FALSE(report.efficiency[0].kendal_smoot.has_value());
  EXPECT_FALSE(report.efficiency[0].spear_smoot.has_value());
}
