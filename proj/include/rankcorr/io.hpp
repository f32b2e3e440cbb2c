#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rankcorr/simulation.hpp"

namespace rankcorr {

/// Numeric CSV contents, column-major. Comma separated, '.' decimal point, an
/// optional single header row recognized by a non-numeric first row.
struct CsvTable {
  std::vector<std::string> header;  // empty when the file had none
  std::vector<std::vector<double>> columns;
  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
};

/// Throws ParseError on ragged rows, non-numeric cells or no data rows.
CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

/// "silverman", "heller" (MAD scale), "heller-sd" (min{s, IQR/1.349}) or "fixed:V".
BandwidthSpec parse_bandwidth(std::string_view text);
std::string format_bandwidth(const BandwidthSpec& spec);

/// Shortest round-trip decimal form of a double (at most 17 significant digits).
std::string format_real(double value);

CampaignConfig campaign_from_json(const nlohmann::json& doc);
nlohmann::json campaign_to_json(const CampaignConfig& cfg);
CampaignConfig read_campaign_file(const std::string& path);

/// Long format `estimator,rho,bias,variance,mse`, grid rows only.
void write_curves_csv(const SimulationReport& report, std::ostream& out);
/// `rho,pears_smoot,kendal_smoot,spear_smoot,pears_spear`; empty cells for missing ratios.
void write_efficiency_csv(const SimulationReport& report, std::ostream& out);
/// Config echo, seed, every cell and the efficiency matrix. Contains no
/// timing so equal configs serialize to identical bytes.
nlohmann::json report_to_json(const SimulationReport& report);
/// Human table with four decimals, one row per reporting rho.
std::string format_efficiency_table(const SimulationReport& report);

}  // namespace rankcorr
