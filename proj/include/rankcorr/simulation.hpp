#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rankcorr/estimators.hpp"
#include "rankcorr/samplers.hpp"

namespace rankcorr {

enum class ModelFamily { Normal, FgmExponential };

constexpr std::string_view to_string(ModelFamily family) noexcept {
  return family == ModelFamily::Normal ? "normal" : "fgm";
}

inline const std::vector<double>& default_reporting_rhos() {
  static const std::vector<double> rhos{0.0, 0.25, 0.50, 0.75, 0.95};
  return rhos;
}

/// Evenly spaced grid start, start + step, ..., stop (inclusive); points are
/// computed as start + k (stop - start) / count, never by accumulation.
std::vector<double> make_rho_grid(double start, double stop, double step);

struct CampaignConfig {
  ModelFamily family = ModelFamily::Normal;
  // rho fields of these templates are overwritten per grid point.
  NormalModel normal{2.0, 4.0, 1.0, 1.0, 0.0};
  FgmExponentialModel fgm{1.0, 1.0, 0.0};
  Index n = 50;
  std::vector<double> rho_grid = make_rho_grid(0.0, 1.0, 0.02);
  std::vector<double> reporting_rhos = default_reporting_rhos();
  Index replicates = 2000;
  std::vector<EstimatorKind> estimators{EstimatorKind::Pearson, EstimatorKind::SpearmanDsq, EstimatorKind::Kendall,
                                        EstimatorKind::SmoothedScore};
  SmoothingOptions smoothing{};
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Throws InvalidConfig when the grid is unsorted or outside [-1, 1], fewer
/// than 100 replicates are requested, n < 2, or no estimator is selected.
void validate_campaign(const CampaignConfig& cfg);

BivariateModel model_at(const CampaignConfig& cfg, double rho);

/// Monte Carlo summary of one estimator at one rho.
struct CellStats {
  EstimatorKind kind;
  double rho;
  double mean_estimate;
  double bias;      // mean - rho
  double variance;  // sample variance over replicates, M - 1 denominator
  double mse;       // bias^2 + variance
};

/// MSE ratios at one reporting rho, oriented numerator-over-denominator as
/// in the column names. Empty when an estimator is not in the campaign.
struct EfficiencyRow {
  double rho;
  std::optional<double> pears_smoot;
  std::optional<double> kendal_smoot;
  std::optional<double> spear_smoot;
  std::optional<double> pears_spear;
};

struct SimulationReport {
  CampaignConfig config;
  std::vector<double> rhos;  // union of grid and reporting rhos, ascending
  std::vector<CellStats> cells;
  std::vector<EfficiencyRow> efficiency;
  double wall_seconds = 0.0;  // informational; never serialized

  const CellStats& cell(EstimatorKind kind, double rho) const;
  std::optional<EstimatorKind> spearman_kind() const;
  /// Cells on the configured grid, in (rho, estimator) order.
  std::vector<CellStats> curve_rows() const;
};

/// Draws `replicates` samples per rho from sub-streams keyed by (seed, rho,
/// replicate) and evaluates every configured estimator on each. Deterministic
/// for a given config regardless of thread count.
SimulationReport run_campaign(const CampaignConfig& cfg);

/// mse(a, rho) / mse(b, rho). Throws MissingCell if either is absent.
double relative_efficiency(const SimulationReport& report, EstimatorKind a, EstimatorKind b, double rho);

}  // namespace rankcorr
