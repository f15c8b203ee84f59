#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "support.hpp"

namespace {

namespace fs = std::filesystem;

struct Invocation {
  int exit_code = -1;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("irreality_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Invocation invoke(const std::string& args) const {
    const auto out = dir_ / "stdout", err = dir_ / "stderr";
    const std::string cmd = std::string("'") + IRREALITY_CLI_PATH + "' " + args + " >'" + out.string() + "' 2>'" +
                            err.string() + "'";
    const int status = std::system(cmd.c_str());
    Invocation r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  fs::path write_config(const std::string& name, const std::string& text) const {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  static std::string demo(const std::string& name) { return std::string("'") + IRREALITY_DEMO_DIR + "/" + name + "'"; }

  fs::path dir_;
};

TEST_F(Cli, FlowConfigPasses) {
  const auto r = invoke("--config " + demo("flow.conf"));
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("scenario,assertion_id,paper_anchor,measured,expected,slack,pass\n", 0), 0u);
  EXPECT_NE(r.out.find("two_qubit_information_flow,total_information_conserved"), std::string::npos);
  EXPECT_TRUE(r.err.empty()) << r.err;
}

TEST_F(Cli, SameConfigAndSeedGiveIdenticalBytes) {
  const std::string args = "--config " + demo("bounds.conf") + " --samples 200";
  const auto a = invoke(args), b = invoke(args);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, invoke(args + " --seed 8").out);
}

TEST_F(Cli, FlagsOverrideConfigValues) {
  const auto r = invoke("--config " + demo("bounds.conf") + " --samples 3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("reality_lower_bound[2]"), std::string::npos);
  EXPECT_EQ(r.out.find("reality_lower_bound[3]"), std::string::npos);
}

TEST_F(Cli, AssertionFailureExitsOne) {
  const auto cfg = write_config("fail.conf", "scenario = two_qubit_information_flow\ninject_failure = true\n");
  const auto r = invoke("--config '" + cfg.string() + "'");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("injected_failure"), std::string::npos);
  EXPECT_NE(r.err.find("1 of 4 assertions failed"), std::string::npos) << r.err;
}

TEST_F(Cli, MalformedConfigExitsTwo) {
  const auto r = invoke("--config " + demo("malformed.conf"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("ConfigParseError"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find(":3 (epsilon)"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST_F(Cli, ConfigurationErrorsExitTwo) {
  EXPECT_EQ(invoke("--scenario no_such_scenario").exit_code, 2);
  EXPECT_EQ(invoke("").exit_code, 2);
  EXPECT_EQ(invoke("--scenario limit_laws --bogus-flag").exit_code, 2);
  EXPECT_EQ(invoke("--scenario limit_laws --samples 0").exit_code, 2);
  EXPECT_EQ(invoke("--scenario limit_laws --format xml").exit_code, 2);
  EXPECT_EQ(invoke("--scenario irreality_generation --epsilon 0.5,2").exit_code, 2);
  EXPECT_EQ(invoke("--scenario limit_laws --tolerance tol_nothing=1").exit_code, 2);
  EXPECT_EQ(invoke("--config '" + (dir_ / "missing.conf").string() + "'").exit_code, 2);
}

TEST_F(Cli, OutputFileMatchesStandardOutput) {
  const auto file = dir_ / "report.csv";
  const auto to_file = invoke("--config " + demo("flow.conf") + " --output '" + file.string() + "'");
  EXPECT_EQ(to_file.exit_code, 0);
  EXPECT_TRUE(to_file.out.empty());
  EXPECT_EQ(slurp(file), invoke("--config " + demo("flow.conf")).out);
}

TEST_F(Cli, StructuredSweepReport) {
  const auto r = invoke("--config " + demo("sweep.conf"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["summary"]["failed"], 0);
  ASSERT_EQ(doc["table"].size(), 11u);
  EXPECT_NEAR(doc["table"][10]["delta_R"].get<double>(), std::log(2.0), 1e-11);
}

TEST_F(Cli, EpsilonAndToleranceFlags) {
  const auto r = invoke("--scenario irreality_generation --epsilon 0.25,0.5 --tolerance tol_identity=1e-9");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("revealed_irreality[1],"), std::string::npos);
  EXPECT_NE(r.out.find("0.130812035941"), std::string::npos);
}

TEST_F(Cli, ListsScenarios) {
  const auto r = invoke("--list");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("epsilon_sweep\n"), std::string::npos);
  EXPECT_NE(r.out.find("map_algebra_suite\n"), std::string::npos);
}

}  // namespace
