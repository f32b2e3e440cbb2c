// rankcorr: rank correlation estimates, independence tests and Monte Carlo
// efficiency campaigns from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankcorr/inference.hpp"
#include "rankcorr/io.hpp"

namespace {

using nlohmann::json;
using namespace rankcorr;

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kBadInput = 2,
  kEstimatorError = 3,
  kBadAlpha = 4,
  kCampaignError = 5,
};

struct DataOptions {
  std::string input;
  std::string method = "spearman-dsq";
  std::string columns = "1,2";
  std::string kernel = "normal";
  std::string bandwidth = "heller";
};

void add_data_options(CLI::App* cmd, DataOptions& opts) {
  cmd->add_option("--input", opts.input, "CSV file with numeric columns")->required();
  cmd->add_option("--method", opts.method,
                  "pearson | spearman-moment | spearman-simplified | spearman-dsq | kendall | score | smoothed")
      ->capture_default_str();
  cmd->add_option("--columns", opts.columns, "1-based column pair, e.g. 1,2")->capture_default_str();
  cmd->add_option("--kernel", opts.kernel, "normal | logistic | interpolated")->capture_default_str();
  cmd->add_option("--bandwidth", opts.bandwidth, "silverman | heller | heller-sd | fixed:V")->capture_default_str();
}

struct Failure {
  int exit_code;
  std::string message;
};

std::pair<std::size_t, std::size_t> parse_columns(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const auto first = std::stoul(text.substr(0, comma), &used);
    const auto second = std::stoul(text.substr(comma + 1), &used);
    if (first == 0 || second == 0) throw std::invalid_argument(text);
    return {first - 1, second - 1};
  } catch (const std::exception&) {
    throw Failure{kUsage, "--columns expects two 1-based indices like 1,2, got '" + text + "'"};
  }
}

PairedSample<double> load_sample(const DataOptions& opts) {
  const auto [cx, cy] = parse_columns(opts.columns);
  CsvTable table;
  try {
    table = read_csv_file(opts.input);
  } catch (const Error& e) {
    throw Failure{kBadInput, e.what()};
  }
  if (table.columns.size() < 2 || cx >= table.columns.size() || cy >= table.columns.size()) {
    throw Failure{kBadInput, "input has " + std::to_string(table.columns.size()) + " columns; need the selected pair"};
  }
  const auto& xs = table.columns[cx];
  const auto& ys = table.columns[cy];
  try {
    return validate_sample(Eigen::Map<const Vector<double>>(xs.data(), static_cast<Index>(xs.size())),
                           Eigen::Map<const Vector<double>>(ys.data(), static_cast<Index>(ys.size())));
  } catch (const Error& e) {
    throw Failure{kBadInput, e.what()};
  }
}

EstimateResult<double> run_estimator(const DataOptions& opts, const PairedSample<double>& s) {
  const auto kind = parse_estimator(opts.method);
  if (!kind) throw Failure{kUsage, "unknown method '" + opts.method + "'"};
  const auto kernel = parse_kernel(opts.kernel);
  if (!kernel) throw Failure{kUsage, "unknown kernel '" + opts.kernel + "'"};
  try {
    SmoothingOptions smoothing{*kernel, parse_bandwidth(opts.bandwidth)};
    return estimate(*kind, s, smoothing);
  } catch (const Error& e) {
    throw Failure{kEstimatorError, e.what()};
  }
}

json bandwidth_json(const EstimateResult<double>& r) {
  if (!r.bandwidth) return nullptr;
  return {{"x", r.bandwidth->x}, {"y", r.bandwidth->y}};
}

int cmd_estimate(const DataOptions& opts) {
  const auto s = load_sample(opts);
  const auto r = run_estimator(opts, s);
  const json out{{"method", std::string(to_string(r.kind))},
                 {"n", r.n},
                 {"estimate", r.estimate},
                 {"bandwidth", bandwidth_json(r)}};
  std::cout << out.dump() << '\n';
  return kOk;
}

int cmd_test(const DataOptions& opts, double alpha) {
  const auto s = load_sample(opts);
  const auto r = run_estimator(opts, s);
  TestResult<double> t;
  try {
    t = wald_test(r.estimate, r.n, alpha);
  } catch (const Error& e) {
    throw Failure{e.code() == ErrorCode::BadAlpha ? kBadAlpha : kEstimatorError, e.what()};
  }
  const json out{{"method", std::string(to_string(r.kind))},
                 {"n", r.n},
                 {"estimate", r.estimate},
                 {"bandwidth", bandwidth_json(r)},
                 {"z", t.z},
                 {"p_value", t.p_value},
                 {"alpha", t.alpha},
                 {"reject", t.reject}};
  std::cout << out.dump() << '\n';
  return kOk;
}

std::optional<std::uint64_t> seed_from(const std::optional<std::uint64_t>& flag) {
  if (flag) return flag;
  if (const char* env = std::getenv("RANKCORR_SEED")) {
    try {
      std::size_t used = 0;
      const std::string text(env);
      const auto value = std::stoull(text, &used);
      if (used == text.size()) return value;
    } catch (const std::exception&) {
    }
    throw Failure{kUsage, "RANKCORR_SEED must be a decimal 64-bit unsigned integer"};
  }
  return std::nullopt;
}

SimulationReport campaign_or_fail(const CampaignConfig& cfg) {
  try {
    return run_campaign(cfg);
  } catch (const Error& e) {
    throw Failure{kCampaignError, e.what()};
  }
}

constexpr double kFgmGridCap = 0.95;

int cmd_simulate(const std::string& config_path, const std::optional<std::uint64_t>& seed_flag, const std::string& prefix) {
  CampaignConfig cfg;
  try {
    cfg = read_campaign_file(config_path);
  } catch (const Error& e) {
    throw Failure{kBadInput, e.what()};
  }
  if (const auto seed = seed_from(seed_flag)) cfg.seed = *seed;
  if (cfg.family == ModelFamily::FgmExponential && !cfg.rho_grid.empty() && cfg.rho_grid.back() > kFgmGridCap + 1e-9) {
    std::erase_if(cfg.rho_grid, [](double rho) { return rho > kFgmGridCap + 1e-9; });
    std::cerr << "warning: FGM grid capped at rho <= " << kFgmGridCap << " (" << cfg.rho_grid.size() << " points)\n";
  }

  const auto report = campaign_or_fail(cfg);

  const std::string curves_path = prefix + "_curves.csv";
  const std::string report_path = prefix + "_report.json";
  std::ofstream curves(curves_path);
  std::ofstream doc(report_path);
  if (!curves || !doc) throw Failure{kCampaignError, "cannot write outputs with prefix " + prefix};
  write_curves_csv(report, curves);
  doc << report_to_json(report).dump(2) << '\n';

  std::cout << format_efficiency_table(report);
  std::cerr << "wrote " << curves_path << " and " << report_path << " in " << report.wall_seconds << " s\n";
  return kOk;
}

int cmd_tables(const std::string& model, Index replicates, const std::optional<std::uint64_t>& seed_flag, bool csv) {
  CampaignConfig cfg;
  if (model == "normal") cfg.family = ModelFamily::Normal;
  else if (model == "fgm") cfg.family = ModelFamily::FgmExponential;
  else throw Failure{kUsage, "--model must be normal or fgm"};
  cfg.rho_grid.clear();
  cfg.replicates = replicates;
  cfg.seed = seed_from(seed_flag).value_or(0);

  const auto report = campaign_or_fail(cfg);
  if (csv) write_efficiency_csv(report, std::cout);
  else std::cout << format_efficiency_table(report);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank correlation estimation, independence tests and efficiency campaigns"};
  app.require_subcommand(1);

  DataOptions estimate_opts;
  auto* estimate_cmd = app.add_subcommand("estimate", "Estimate a correlation from two CSV columns");
  add_data_options(estimate_cmd, estimate_opts);

  DataOptions test_opts;
  double alpha = 0.05;
  auto* test_cmd = app.add_subcommand("test", "Wald test of zero correlation");
  add_data_options(test_cmd, test_opts);
  test_cmd->add_option("--alpha", alpha, "Significance level")->capture_default_str();

  std::string config_path;
  std::optional<std::uint64_t> sim_seed;
  std::string prefix = "rankcorr";
  auto* simulate_cmd = app.add_subcommand("simulate", "Run a Monte Carlo MSE campaign from a JSON config");
  simulate_cmd->add_option("--config", config_path, "Campaign config (JSON)")->required();
  simulate_cmd->add_option("--seed", sim_seed, "Seed; overrides RANKCORR_SEED and the config");
  simulate_cmd->add_option("--out", prefix, "Output prefix for <prefix>_curves.csv and <prefix>_report.json")
      ->capture_default_str();

  std::string model = "normal";
  Index replicates = 2000;
  std::optional<std::uint64_t> tables_seed;
  bool csv = false;
  auto* tables_cmd = app.add_subcommand("tables", "Relative-efficiency table at rho = 0, .25, .5, .75, .95");
  tables_cmd->add_option("--model", model, "normal | fgm")->capture_default_str();
  tables_cmd->add_option("--replicates", replicates, "Monte Carlo replicates per rho")->capture_default_str();
  tables_cmd->add_option("--seed", tables_seed, "Seed; overrides RANKCORR_SEED");
  tables_cmd->add_flag("--csv", csv, "Emit CSV instead of the aligned table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (estimate_cmd->parsed()) return cmd_estimate(estimate_opts);
    if (test_cmd->parsed()) return cmd_test(test_opts, alpha);
    if (simulate_cmd->parsed()) return cmd_simulate(config_path, sim_seed, prefix);
    if (tables_cmd->parsed()) return cmd_tables(model, replicates, tables_seed, csv);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  }
  return kUsage;
}
