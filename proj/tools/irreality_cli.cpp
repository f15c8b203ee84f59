// irreality: run a named scenario or property suite and write a report.
//
//   irreality --scenario reality_bounds_suite --samples 1000 --seed 7
//   irreality --config demo/configs/sweep.conf --format structured
//
// Exit status: 0 all assertions pass, 1 an assertion failed, 2 bad
// configuration or unknown scenario.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "irreality/irreality.hpp"

namespace {

using namespace irreality;

int fail_config(const std::string& message) {
  std::cerr << "irreality: " << message << '\n';
  return kExitConfigError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irreality and information ledgers for monitored quantum systems"};
  std::string config_path, scenario, epsilon, output, format;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<std::string> tolerances;
  bool list = false;

  app.add_option("--config", config_path, "Config file of key = value lines");
  app.add_option("--scenario", scenario, "Scenario or suite name");
  app.add_option("--seed", seed, "Root seed");
  app.add_option("--samples", samples, "Samples per randomized suite")->check(CLI::PositiveNumber);
  app.add_option("--epsilon", epsilon, "Comma-separated intensities in [0, 1]");
  app.add_option("--tolerance", tolerances, "Tolerance override KEY=VAL (repeatable)")->take_all();
  app.add_option("--output", output, "Report path (default: standard output)");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "structured"}));
  app.add_flag("--list", list, "List scenario names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  if (list) {
    for (const auto& name : scenario_names()) std::cout << name << '\n';
    return kExitPass;
  }

  RunResult result;
  RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = load_config(config_path);
    if (!scenario.empty()) cfg.scenario = scenario;
    if (app.count("--seed")) cfg.seed = seed;
    if (app.count("--samples")) cfg.samples = samples;
    if (!epsilon.empty()) cfg.epsilon = parse_epsilon_list(epsilon, "--epsilon");
    for (const auto& t : tolerances) apply_tolerance_override(cfg.tolerance, t);
    if (!output.empty()) cfg.output = output;
    if (!format.empty()) cfg.format = format == "csv" ? ReportFormat::Csv : ReportFormat::Structured;
    result = run(cfg);
  } catch (const Error& e) {
    return fail_config(e.what());
  }

  if (cfg.output.empty()) {
    write_report(std::cout, result.report, cfg.format);
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) return fail_config("cannot write " + cfg.output);
    write_report(out, result.report, cfg.format);
  }
  if (result.exit_code != kExitPass) {
    std::cerr << "irreality: " << result.report.failures() << " of " << result.report.rows.size()
              << " assertions failed\n";
  }
  return result.exit_code;
}
