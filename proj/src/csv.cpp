#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

#include "rankcorr/io.hpp"

namespace rankcorr {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::optional<double> parse_number(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  if (cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) return std::nullopt;
  return value;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  bool first_row = true;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    std::vector<std::optional<double>> values;
    values.reserve(cells.size());
    for (auto cell : cells) values.push_back(parse_number(cell));

    if (first_row) {
      first_row = false;
      width = cells.size();
      table.columns.resize(width);
      const bool numeric = std::all_of(values.begin(), values.end(), [](const auto& v) { return v.has_value(); });
      if (!numeric) {
        for (auto cell : cells) table.header.emplace_back(cell);
        continue;
      }
    }
    if (cells.size() != width) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                                             " fields, expected " + std::to_string(width));
    }
    for (std::size_t c = 0; c < width; ++c) {
      if (!values[c]) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ", column " + std::to_string(c + 1) +
                                               ": '" + std::string(cells[c]) + "' is not a number");
      }
      table.columns[c].push_back(*values[c]);
    }
  }
  if (table.rows() == 0) throw Error(ErrorCode::ParseError, "no data rows");
  return table;
}

CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_csv(in);
}

}  // namespace rankcorr
