#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "krzyz/scalar.hpp"

namespace krzyz {

// Machine-readable result of one CLI invocation. Exact-mode rationals
// serialize as "p/q" strings, never as floats; float values serialize with
// 17 significant digits (also as strings, so nothing ever rounds). Emission
// is byte-deterministic for identical reports.
struct ReportTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;
  Mode mode = Mode::exact;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json payload = nlohmann::json::object();
  // Derived views used by the csv and table formats. Commands with nested
  // stage logs have no tabular view and refuse csv.
  std::optional<ReportTable> table;
  std::vector<std::pair<std::string, std::string>> summary;
};

enum class ReportFormat { json, csv, table };

ReportFormat parse_format(const std::string& name);

nlohmann::json report_json(const Report& r);

/// Render the report; throws UnsupportedPayloadForCsv when csv is requested
/// for a report without a tabular view.
std::string emit(const Report& r, ReportFormat format);

/// "%.17g" with no locale surprises.
std::string float_str(double v);

}  // namespace krzyz
