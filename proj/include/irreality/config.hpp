#pragma once

// Run configuration: a flat `key = value` document, one entry per line, with
// `#` comments. Lists are comma separated and may be wrapped in brackets.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "irreality/errors.hpp"
#include "irreality/qstate.hpp"
#include "irreality/scenarios.hpp"
#include "irreality/tolerance.hpp"

namespace irreality {

enum class ReportFormat { Csv, Structured };

struct RunConfig {
  std::string scenario;
  std::uint64_t seed = 1;
  /// Unset means the suite's own default.
  std::optional<std::size_t> samples;
  std::optional<DimsSpec> dims;
  std::vector<double> epsilon;
  ToleranceConfig tolerance;
  std::string output;  // empty: standard output
  ReportFormat format = ReportFormat::Csv;

  ScatteringParams scattering;
  DetectorArraySpec detector;
  /// `plus` sweeps |+⟩ against σz; `random` draws a state from the seed.
  std::string sweep_state = "plus";
  /// Appends one deliberately failing row; exercises the exit-code contract.
  bool inject_failure = false;
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

inline Error config_error(const std::string& where, const std::string& what) {
  return Error(ErrorCode::ConfigParseError, where + ": " + what);
}

inline double parse_real(const std::string& text, const std::string& where) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) throw config_error(where, "expected a number, got '" + text + "'");
  return v;
}

inline std::uint64_t parse_unsigned(const std::string& text, const std::string& where) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw config_error(where, "expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

inline bool parse_bool(const std::string& text, const std::string& where) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw config_error(where, "expected true or false, got '" + text + "'");
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::string body = trim(text);
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
  std::vector<std::string> items;
  if (trim(body).empty()) return items;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) items.push_back(trim(item));
  return items;
}

}  // namespace detail

/// Epsilon grid from a comma-separated list; every entry must lie in [0, 1].
inline std::vector<double> parse_epsilon_list(const std::string& text, const std::string& where) {
  std::vector<double> grid;
  for (const auto& item : detail::split_list(text)) {
    const double e = detail::parse_real(item, where);
    if (!(e >= 0.0 && e <= 1.0)) throw detail::config_error(where, "epsilon " + item + " outside [0, 1]");
    grid.push_back(e);
  }
  if (grid.empty()) throw detail::config_error(where, "epsilon list is empty");
  return grid;
}

/// Sets one tolerance field by name.
inline void set_tolerance(ToleranceConfig& tol, const std::string& key, double value, const std::string& where) {
  if (key == "tol_herm") tol.tol_herm = value;
  else if (key == "tol_trace") tol.tol_trace = value;
  else if (key == "tol_psd") tol.tol_psd = value;
  else if (key == "tol_norm") tol.tol_norm = value;
  else if (key == "tol_ortho") tol.tol_ortho = value;
  else if (key == "tol_ineq_slack") tol.tol_ineq_slack = value;
  else if (key == "tol_identity") tol.tol_identity = value;
  else if (key == "eig_zero_floor") tol.eig_zero_floor = value;
  else throw detail::config_error(where, "unknown tolerance '" + key + "'");
}

/// Applies `KEY=VAL` as given to --tolerance.
inline void apply_tolerance_override(ToleranceConfig& tol, const std::string& assignment) {
  const auto eq = assignment.find('=');
  const std::string where = "--tolerance " + assignment;
  if (eq == std::string::npos) throw detail::config_error(where, "expected KEY=VAL");
  std::string key = detail::trim(assignment.substr(0, eq));
  if (key.rfind("tolerance.", 0) == 0) key = key.substr(10);
  set_tolerance(tol, key, detail::parse_real(detail::trim(assignment.substr(eq + 1)), where), where);
}

/// Applies one config entry. `where` names the source for diagnostics.
inline void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value,
                               const std::string& where) {
  using namespace detail;
  const std::string at = where + " (" + key + ")";
  if (key == "scenario") {
    cfg.scenario = value;
  } else if (key == "seed") {
    cfg.seed = parse_unsigned(value, at);
  } else if (key == "samples") {
    const auto n = parse_unsigned(value, at);
    if (n < 1) throw config_error(at, "samples must be at least 1");
    cfg.samples = static_cast<std::size_t>(n);
  } else if (key == "dims") {
    std::vector<std::size_t> d;
    for (const auto& item : split_list(value)) d.push_back(static_cast<std::size_t>(parse_unsigned(item, at)));
    try {
      cfg.dims = DimsSpec(std::move(d));
    } catch (const Error& e) {
      throw config_error(at, e.what());
    }
  } else if (key == "epsilon") {
    cfg.epsilon = parse_epsilon_list(value, at);
  } else if (key.rfind("tolerance.", 0) == 0) {
    set_tolerance(cfg.tolerance, key.substr(10), parse_real(value, at), at);
  } else if (key == "output") {
    cfg.output = value;
  } else if (key == "format") {
    if (value == "csv") cfg.format = ReportFormat::Csv;
    else if (value == "structured") cfg.format = ReportFormat::Structured;
    else throw config_error(at, "format must be csv or structured");
  } else if (key == "xi") {
    cfg.scattering.xi = parse_real(value, at);
  } else if (key == "velocity_ratio") {
    cfg.scattering.velocity_ratio = parse_real(value, at);
  } else if (key == "n_sites") {
    cfg.detector.n_sites = static_cast<std::size_t>(parse_unsigned(value, at));
  } else if (key == "packet_width") {
    cfg.detector.packet_width_sites = parse_real(value, at);
  } else if (key == "shift") {
    cfg.detector.shift_sites = static_cast<std::size_t>(parse_unsigned(value, at));
  } else if (key == "alpha") {
    cfg.detector.alpha = parse_real(value, at);
  } else if (key == "beta") {
    cfg.detector.beta = parse_real(value, at);
  } else if (key == "sweep_state") {
    if (value != "plus" && value != "random") throw config_error(at, "sweep_state must be plus or random");
    cfg.sweep_state = value;
  } else if (key == "inject_failure") {
    cfg.inject_failure = parse_bool(value, at);
  } else {
    throw config_error(where, "unknown key '" + key + "'");
  }
}

inline RunConfig parse_config(std::istream& in, const std::string& source = "config") {
  RunConfig cfg;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    const std::string body = detail::trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (body.empty()) continue;
    const std::string where = source + ":" + std::to_string(number);
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw detail::config_error(where, "expected 'key = value'");
    const std::string key = detail::trim(body.substr(0, eq));
    const std::string value = detail::trim(body.substr(eq + 1));
    if (key.empty()) throw detail::config_error(where, "missing key");
    apply_config_entry(cfg, key, value, where);
  }
  return cfg;
}

inline RunConfig parse_config_text(const std::string& text, const std::string& source = "config") {
  std::istringstream in(text);
  return parse_config(in, source);
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigParseError, path + ": cannot open config file");
  return parse_config(in, path);
}

}  // namespace irreality
