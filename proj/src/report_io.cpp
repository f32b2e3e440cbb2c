#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rankcorr/io.hpp"

namespace rankcorr {

using nlohmann::json;

namespace {

[[noreturn]] void bad_config(const std::string& message) { throw Error(ErrorCode::InvalidConfig, message); }

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::uint64_t parse_seed(const json& value) {
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer() && value.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(value.get<std::int64_t>());
  if (value.is_string()) {
    const auto text = value.get<std::string>();
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec == std::errc() && ptr == text.data() + text.size() && !text.empty()) return seed;
  }
  bad_config("seed must be a decimal 64-bit unsigned integer");
}

std::vector<double> parse_grid(const json& value) {
  if (value.is_array()) return value.get<std::vector<double>>();
  if (value.is_object()) {
    return make_rho_grid(value.at("start").get<double>(), value.at("stop").get<double>(), value.at("step").get<double>());
  }
  bad_config("rho_grid must be an array or {start, stop, step}");
}

}  // namespace

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

BandwidthSpec parse_bandwidth(std::string_view text) {
  if (text == "silverman") return BandwidthSpec::silverman();
  if (text == "heller") return BandwidthSpec::heller(ScaleEstimator::Mad);
  if (text == "heller-sd") return BandwidthSpec::heller(ScaleEstimator::SdIqrMin);
  if (text.starts_with("fixed:")) {
    const auto number = text.substr(6);
    double h = 0.0;
    const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), h);
    if (ec != std::errc() || ptr != number.data() + number.size()) {
      throw Error(ErrorCode::BadBandwidth, "cannot parse fixed bandwidth '" + std::string(number) + "'");
    }
    return BandwidthSpec::fixed(h);
  }
  throw Error(ErrorCode::BadBandwidth, "unknown bandwidth rule '" + std::string(text) + "'");
}

std::string format_bandwidth(const BandwidthSpec& spec) {
  switch (spec.rule) {
    case BandwidthRule::Silverman: return "silverman";
    case BandwidthRule::Heller: return spec.scale == ScaleEstimator::Mad ? "heller" : "heller-sd";
    case BandwidthRule::Fixed: return "fixed:" + format_real(spec.fixed_value);
  }
  return "unknown";
}

CampaignConfig campaign_from_json(const json& doc) {
  if (!doc.is_object()) bad_config("campaign config must be a JSON object");
  CampaignConfig cfg;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "model") {
        const auto name = value.get<std::string>();
        if (name == "normal") cfg.family = ModelFamily::Normal;
        else if (name == "fgm") cfg.family = ModelFamily::FgmExponential;
        else bad_config("model must be 'normal' or 'fgm'");
      } else if (key == "n") {
        cfg.n = value.get<Index>();
      } else if (key == "normal") {
        cfg.normal.mu1 = value.value("mu1", cfg.normal.mu1);
        cfg.normal.mu2 = value.value("mu2", cfg.normal.mu2);
        cfg.normal.sigma1 = value.value("sigma1", cfg.normal.sigma1);
        cfg.normal.sigma2 = value.value("sigma2", cfg.normal.sigma2);
      } else if (key == "fgm") {
        cfg.fgm.theta1 = value.value("theta1", cfg.fgm.theta1);
        cfg.fgm.theta2 = value.value("theta2", cfg.fgm.theta2);
      } else if (key == "rho_grid") {
        cfg.rho_grid = parse_grid(value);
      } else if (key == "reporting_rhos") {
        cfg.reporting_rhos = value.get<std::vector<double>>();
      } else if (key == "replicates") {
        cfg.replicates = value.get<Index>();
      } else if (key == "estimators") {
        cfg.estimators.clear();
        for (const auto& name : value) {
          const auto kind = parse_estimator(name.get<std::string>());
          if (!kind) bad_config("unknown estimator '" + name.get<std::string>() + "'");
          cfg.estimators.push_back(*kind);
        }
      } else if (key == "kernel") {
        const auto kernel = parse_kernel(value.get<std::string>());
        if (!kernel) bad_config("unknown kernel '" + value.get<std::string>() + "'");
        cfg.smoothing.kernel = *kernel;
      } else if (key == "bandwidth") {
        cfg.smoothing.bandwidth = parse_bandwidth(value.get<std::string>());
      } else if (key == "seed") {
        cfg.seed = parse_seed(value);
      } else if (key == "threads") {
        cfg.threads = value.get<unsigned>();
      } else {
        bad_config("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    bad_config(e.what());
  }
  validate_campaign(cfg);
  return cfg;
}

json campaign_to_json(const CampaignConfig& cfg) {
  json estimators = json::array();
  for (auto kind : cfg.estimators) estimators.push_back(std::string(to_string(kind)));
  return {
      {"model", std::string(to_string(cfg.family))},
      {"n", cfg.n},
      {"normal", {{"mu1", cfg.normal.mu1}, {"mu2", cfg.normal.mu2}, {"sigma1", cfg.normal.sigma1}, {"sigma2", cfg.normal.sigma2}}},
      {"fgm", {{"theta1", cfg.fgm.theta1}, {"theta2", cfg.fgm.theta2}}},
      {"rho_grid", cfg.rho_grid},
      {"reporting_rhos", cfg.reporting_rhos},
      {"replicates", cfg.replicates},
      {"estimators", estimators},
      {"kernel", std::string(to_string(cfg.smoothing.kernel))},
      {"bandwidth", format_bandwidth(cfg.smoothing.bandwidth)},
      {"seed", cfg.seed},
  };
}

CampaignConfig read_campaign_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return campaign_from_json(doc);
}

void write_curves_csv(const SimulationReport& report, std::ostream& out) {
  out << "estimator,rho,bias,variance,mse\n";
  for (const auto& c : report.curve_rows()) {
    out << to_string(c.kind) << ',' << format_real(c.rho) << ',' << format_real(c.bias) << ','
        << format_real(c.variance) << ',' << format_real(c.mse) << '\n';
  }
}

void write_efficiency_csv(const SimulationReport& report, std::ostream& out) {
  const auto cell = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string(); };
  out << "rho,pears_smoot,kendal_smoot,spear_smoot,pears_spear\n";
  for (const auto& row : report.efficiency) {
    out << format_real(row.rho) << ',' << cell(row.pears_smoot) << ',' << cell(row.kendal_smoot) << ','
        << cell(row.spear_smoot) << ',' << cell(row.pears_spear) << '\n';
  }
}

json report_to_json(const SimulationReport& report) {
  json cells = json::array();
  for (const auto& c : report.cells) {
    cells.push_back({{"estimator", std::string(to_string(c.kind))},
                     {"rho", c.rho},
                     {"mean_estimate", c.mean_estimate},
                     {"bias", c.bias},
                     {"variance", c.variance},
                     {"mse", c.mse}});
  }
  json efficiency = json::array();
  for (const auto& row : report.efficiency) {
    efficiency.push_back({{"rho", row.rho},
                          {"pears_smoot", optional_number(row.pears_smoot)},
                          {"kendal_smoot", optional_number(row.kendal_smoot)},
                          {"spear_smoot", optional_number(row.spear_smoot)},
                          {"pears_spear", optional_number(row.pears_spear)}});
  }
  const auto spear = report.spearman_kind();
  return {{"config", campaign_to_json(report.config)},
          {"seed", report.config.seed},
          {"spearman_estimator", spear ? json(std::string(to_string(*spear))) : json(nullptr)},
          {"cells", cells},
          {"efficiency", efficiency}};
}

std::string format_efficiency_table(const SimulationReport& report) {
  const auto cell = [](const std::optional<double>& v) {
    char buf[32];
    if (v) std::snprintf(buf, sizeof buf, "%12.4f", *v);
    else std::snprintf(buf, sizeof buf, "%12s", "-");
    return std::string(buf);
  };
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-8s%12s%12s%12s%12s\n", "rho", "Pears-Smoot", "Kendal-Smoot", "Spear-Smoot",
                "Pears-Spear");
  out << buf;
  for (const auto& row : report.efficiency) {
    std::snprintf(buf, sizeof buf, "%-8.2f", row.rho);
    out << buf << cell(row.pears_smoot) << cell(row.kendal_smoot) << cell(row.spear_smoot) << cell(row.pears_spear)
        << '\n';
  }
  return out.str();
}

}  // namespace rankcorr
