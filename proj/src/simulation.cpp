#include "rankcorr/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace rankcorr {

namespace {

constexpr double kRhoMatch = 1e-9;

bool same_rho(double a, double b) { return std::abs(a - b) < kRhoMatch; }

std::uint64_t rho_key(double rho) { return std::bit_cast<std::uint64_t>(rho + 0.0); }

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::InvalidConfig, message);
}

struct Failure {
  Index replicate;
  ErrorCode code;
  std::string message;
};

// estimates[k * M + r]: estimator k on replicate r.
std::vector<double> simulate_cell(const CampaignConfig& cfg, double rho) {
  const auto model = model_at(cfg, rho);
  const Index m = cfg.replicates;
  const auto kinds = cfg.estimators.size();
  std::vector<double> estimates(kinds * static_cast<std::size_t>(m));

  std::atomic<Index> next{0};
  std::mutex failure_mutex;
  std::optional<Failure> failure;

  auto worker = [&] {
    for (Index r = next++; r < m; r = next++) {
      try {
        auto rng = RngStream::derive(cfg.seed, rho_key(rho), static_cast<std::uint64_t>(r));
        const auto s = sample(model, cfg.n, rng);
        for (std::size_t k = 0; k < kinds; ++k) {
          estimates[k * static_cast<std::size_t>(m) + static_cast<std::size_t>(r)] =
              estimate(cfg.estimators[k], s, cfg.smoothing).estimate;
        }
      } catch (const Error& e) {
        std::lock_guard lock(failure_mutex);
        // keep the lowest replicate so the reported failure is deterministic
        if (!failure || r < failure->replicate) failure = Failure{r, e.code(), e.what()};
      }
    }
  };

  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<Index>(threads, m));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  if (failure) {
    throw Error(failure->code, "rho=" + std::to_string(rho) + ", replicate=" + std::to_string(failure->replicate) +
                                   ": " + failure->message);
  }
  return estimates;
}

CellStats summarize(EstimatorKind kind, double rho, const double* values, Index m) {
  double mean = 0.0;
  for (Index r = 0; r < m; ++r) mean += values[r];
  mean /= static_cast<double>(m);
  double ss = 0.0;
  for (Index r = 0; r < m; ++r) ss += (values[r] - mean) * (values[r] - mean);
  const double variance = ss / static_cast<double>(m - 1);
  const double bias = mean - rho;
  return {kind, rho, mean, bias, variance, bias * bias + variance};
}

std::optional<double> ratio(const SimulationReport& report, std::optional<EstimatorKind> a,
                            std::optional<EstimatorKind> b, double rho) {
  if (!a || !b) return std::nullopt;
  return relative_efficiency(report, *a, *b, rho);
}

}  // namespace

std::vector<double> make_rho_grid(double start, double stop, double step) {
  require(std::isfinite(start) && std::isfinite(stop) && std::isfinite(step), "grid bounds must be finite");
  require(step > 0.0 && stop >= start, "grid needs step > 0 and stop >= start");
  const auto count = static_cast<Index>(std::llround((stop - start) / step));
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count + 1));
  for (Index k = 0; k <= count; ++k) {
    grid.push_back(count == 0 ? start : start + (stop - start) * static_cast<double>(k) / static_cast<double>(count));
  }
  return grid;
}

void validate_campaign(const CampaignConfig& cfg) {
  require(cfg.n >= 2, "n must be at least 2");
  require(cfg.replicates >= 100, "at least 100 replicates are required");
  require(!cfg.estimators.empty(), "no estimators selected");
  require(!cfg.rho_grid.empty() || !cfg.reporting_rhos.empty(), "no rho values to simulate");
  require(std::is_sorted(cfg.rho_grid.begin(), cfg.rho_grid.end()), "rho grid must be sorted");
  for (const auto* rhos : {&cfg.rho_grid, &cfg.reporting_rhos}) {
    for (double rho : *rhos) {
      require(std::isfinite(rho) && rho >= -1.0 && rho <= 1.0, "rho " + std::to_string(rho) + " outside [-1, 1]");
    }
  }
  validate_model(model_at(cfg, 0.0));
  if (cfg.smoothing.bandwidth.rule == BandwidthRule::Fixed) {
    require(cfg.smoothing.bandwidth.fixed_value > 0.0, "fixed bandwidth must be positive");
  }
}

BivariateModel model_at(const CampaignConfig& cfg, double rho) {
  if (cfg.family == ModelFamily::Normal) {
    auto m = cfg.normal;
    m.rho = rho;
    return m;
  }
  auto m = cfg.fgm;
  m.rho = rho;
  return m;
}

const CellStats& SimulationReport::cell(EstimatorKind kind, double rho) const {
  for (const auto& c : cells) {
    if (c.kind == kind && same_rho(c.rho, rho)) return c;
  }
  throw Error(ErrorCode::MissingCell,
              "no cell for estimator " + std::string(to_string(kind)) + " at rho=" + std::to_string(rho));
}

std::optional<EstimatorKind> SimulationReport::spearman_kind() const {
  for (auto kind : {EstimatorKind::SpearmanDsq, EstimatorKind::SpearmanMoment, EstimatorKind::SpearmanSimplified,
                    EstimatorKind::ScoreBased}) {
    if (std::find(config.estimators.begin(), config.estimators.end(), kind) != config.estimators.end()) return kind;
  }
  return std::nullopt;
}

std::vector<CellStats> SimulationReport::curve_rows() const {
  std::vector<CellStats> rows;
  for (double rho : config.rho_grid) {
    for (auto kind : config.estimators) rows.push_back(cell(kind, rho));
  }
  return rows;
}

SimulationReport run_campaign(const CampaignConfig& cfg) {
  validate_campaign(cfg);
  const auto started = std::chrono::steady_clock::now();

  SimulationReport report;
  report.config = cfg;
  report.rhos = cfg.rho_grid;
  report.rhos.insert(report.rhos.end(), cfg.reporting_rhos.begin(), cfg.reporting_rhos.end());
  std::sort(report.rhos.begin(), report.rhos.end());
  report.rhos.erase(std::unique(report.rhos.begin(), report.rhos.end(), same_rho), report.rhos.end());

  const Index m = cfg.replicates;
  for (double rho : report.rhos) {
    const auto estimates = simulate_cell(cfg, rho);
    for (std::size_t k = 0; k < cfg.estimators.size(); ++k) {
      report.cells.push_back(summarize(cfg.estimators[k], rho, estimates.data() + k * static_cast<std::size_t>(m), m));
    }
  }

  const auto has = [&](EstimatorKind kind) -> std::optional<EstimatorKind> {
    if (std::find(cfg.estimators.begin(), cfg.estimators.end(), kind) != cfg.estimators.end()) return kind;
    return std::nullopt;
  };
  const auto pearson_kind = has(EstimatorKind::Pearson);
  const auto kendall_kind = has(EstimatorKind::Kendall);
  const auto smooth_kind = has(EstimatorKind::SmoothedScore);
  const auto spear_kind = report.spearman_kind();
  for (double rho : cfg.reporting_rhos) {
    report.efficiency.push_back({rho, ratio(report, pearson_kind, smooth_kind, rho),
                                 ratio(report, kendall_kind, smooth_kind, rho),
                                 ratio(report, spear_kind, smooth_kind, rho),
                                 ratio(report, pearson_kind, spear_kind, rho)});
  }

  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

double relative_efficiency(const SimulationReport& report, EstimatorKind a, EstimatorKind b, double rho) {
  const auto& num = report.cell(a, rho);
  const auto& den = report.cell(b, rho);
  if (a == b) return 1.0;
  return num.mse / den.mse;
}

}  // namespace rankcorr
