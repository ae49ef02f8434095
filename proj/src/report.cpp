#include "krzyz/report.hpp"

#include <algorithm>
#include <cstdio>

#include "krzyz/errors.hpp"

namespace krzyz {

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "table") return ReportFormat::table;
  throw Error("unknown format '" + name + "' (expected json, csv or table)");
}

std::string float_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

nlohmann::json report_json(const Report& r) {
  return nlohmann::json{{"command", r.command},
                        {"mode", mode_name(r.mode)},
                        {"inputs", r.inputs},
                        {"payload", r.payload}};
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Report& r) {
  if (!r.table)
    throw UnsupportedPayloadForCsv("the '" + r.command +
                                   "' payload has no flat tabular view");
  std::string out;
  for (size_t i = 0; i < r.table->header.size(); ++i) {
    if (i) out += ",";
    out += csv_cell(r.table->header[i]);
  }
  out += "\n";
  for (const auto& row : r.table->rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += csv_cell(row[i]);
    }
    out += "\n";
  }
  return out;
}

std::string render_table(const Report& r) {
  std::string out = "command: " + r.command + "\n";
  out += "mode: " + std::string(mode_name(r.mode)) + "\n";
  for (const auto& [k, v] : r.summary) out += k + ": " + v + "\n";
  if (!r.table) return out;
  out += "\n";
  std::vector<size_t> width(r.table->header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  };
  widen(r.table->header);
  for (const auto& row : r.table->rows) widen(row);
  auto line = [&](const std::vector<std::string>& row) {
    std::string s;
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) s += "  ";
      s += row[i];
      if (i + 1 < row.size())
        s += std::string(width[i] - row[i].size(), ' ');
    }
    return s + "\n";
  };
  out += line(r.table->header);
  for (const auto& row : r.table->rows) out += line(row);
  return out;
}

}  // namespace

std::string emit(const Report& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return report_json(r).dump(2) + "\n";
    case ReportFormat::csv:
      return render_csv(r);
    default:
      return render_table(r);
  }
}

}  // namespace krzyz
