#pragma once

// Report rows and their CSV / JSON serializations. Numbers carry 12
// significant digits so that reports diff cleanly across runs.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "irreality/assertion.hpp"

namespace irreality {

struct ReportRow {
  std::string scenario;
  std::string assertion_id;
  std::string paper_anchor;
  double measured = 0.0;
  double expected = 0.0;
  double slack = 0.0;
  bool pass = false;
  /// Id without the sample suffix, and position within a randomized suite.
  std::string group;
  std::size_t sample = 0;
};

/// Column-oriented numeric table, e.g. one row per ε of a sweep.
struct ReportTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  bool empty() const { return columns.empty(); }
};

struct Report {
  std::vector<ReportRow> rows;
  ReportTable table;

  bool all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.pass; }));
  }

  void add(const std::string& scenario, const Assertion& a) {
    rows.push_back(ReportRow{scenario, a.id, a.anchor, a.measured, a.expected, a.slack, a.pass, a.id, 0});
  }
  /// Suite rows get the sample index appended to the id.
  void add_sample(const std::string& scenario, const Assertion& a, std::size_t sample) {
    rows.push_back(ReportRow{scenario, a.id + "[" + std::to_string(sample) + "]", a.anchor, a.measured, a.expected,
                             a.slack, a.pass, a.id, sample});
  }
  void add(const ScenarioResult& r) {
    for (const auto& a : r.assertions) add(r.name, a);
  }

  /// Orders rows by scenario, then assertion id, then sample index.
  void sort_rows() {
    std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
      return std::tie(a.scenario, a.group, a.sample) < std::tie(b.scenario, b.group, b.sample);
    });
  }
};

inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline double rounded(double v) {
  if (!std::isfinite(v)) return v;
  return std::stod(format_number(v));
}

}  // namespace detail

inline void write_csv(std::ostream& os, const Report& report) {
  os << "scenario,assertion_id,paper_anchor,measured,expected,slack,pass\n";
  for (const auto& r : report.rows) {
    os << detail::csv_field(r.scenario) << ',' << detail::csv_field(r.assertion_id) << ','
       << detail::csv_field(r.paper_anchor) << ',' << format_number(r.measured) << ',' << format_number(r.expected)
       << ',' << format_number(r.slack) << ',' << (r.pass ? "true" : "false") << '\n';
  }
  if (!report.table.empty()) {
    os << '\n';
    for (std::size_t c = 0; c < report.table.columns.size(); ++c)
      os << (c ? "," : "") << detail::csv_field(report.table.columns[c]);
    os << '\n';
    for (const auto& row : report.table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_number(row[c]);
      os << '\n';
    }
  }
}

inline nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"scenario", r.scenario},
                    {"assertion_id", r.assertion_id},
                    {"paper_anchor", r.paper_anchor},
                    {"measured", detail::rounded(r.measured)},
                    {"expected", detail::rounded(r.expected)},
                    {"slack", detail::rounded(r.slack)},
                    {"pass", r.pass}});
  }
  nlohmann::ordered_json doc;
  doc["rows"] = std::move(rows);
  doc["summary"] = {{"total", report.rows.size()}, {"failed", report.failures()}};
  if (!report.table.empty()) {
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (const auto& row : report.table.rows) {
      nlohmann::ordered_json entry;
      for (std::size_t c = 0; c < row.size(); ++c) entry[report.table.columns[c]] = detail::rounded(row[c]);
      table.push_back(std::move(entry));
    }
    doc["table"] = std::move(table);
  }
  return doc;
}

inline void write_structured(std::ostream& os, const Report& report) { os << to_json(report).dump(2) << '\n'; }

}  // namespace irreality
