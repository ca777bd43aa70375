#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "commands.hpp"

using alcove::cli::RunConfig;
using nlohmann::json;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(ALCOVE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

json capture(int (*cmd)(const RunConfig&, std::ostream&), const RunConfig& cfg, int expected = 0) {
  std::ostringstream out;
  CHECK(cmd(cfg, out) == expected);
  return json::parse(out.str());
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("alcove_test_" + name);
}

}  // namespace

TEST_CASE("describe reports counts and marks") {
  RunConfig cfg;
  cfg.type = "A";
  cfg.rank = 1;
  cfg.c = 3;
  const json a1 = capture(alcove::cli::cmd_describe, cfg);
  CHECK(a1["alcove_weights"] == 4);
  CHECK(a1["alcove_coweights"] == 4);
  cfg.type = "B";
  cfg.rank = 2;
  const json b2 = capture(alcove::cli::cmd_describe, cfg);
  CHECK(b2["marks"] == json::array({2, 1}));
  CHECK(b2["coxeter_number"] == 4);
  CHECK(b2["simple_roots"].size() == 2);
}

TEST_CASE("validation") {
  RunConfig cfg;
  CHECK_NOTHROW(alcove::cli::validate(cfg));
  cfg.c = 1;
  CHECK_THROWS_AS(alcove::cli::validate(cfg), alcove::cli::UsageError);
  cfg.c = 2;
  cfg.tau_s = -0.3;
  CHECK_THROWS_AS(alcove::cli::validate(cfg), alcove::cli::UsageError);
  cfg.allow_negative_tau = true;
  CHECK_NOTHROW(alcove::cli::validate(cfg));
  cfg.tau_s = 1.0;
  CHECK_THROWS_AS(alcove::cli::validate(cfg), alcove::cli::UsageError);
  cfg.tau_s = 0.5;
  cfg.format = "xml";
  CHECK_THROWS_AS(alcove::cli::validate(cfg), alcove::cli::UsageError);
}

TEST_CASE("spectrum of A1 at c = 2") {
  RunConfig cfg;
  const json s = capture(alcove::cli::cmd_spectrum, cfg);
  REQUIRE(s.size() == 3);
  for (const auto& p : s) {
    CHECK(p["in_alcove"] == true);
    CHECK(p["moment_gap_ok"] == true);
    CHECK(p["grad_norm"].get<double>() <= 1e-12);
  }
}

TEST_CASE("coeffs and laplacian emit tables") {
  RunConfig cfg;
  cfg.word = "1,0";
  cfg.nu = "1";
  cfg.exact = true;
  const json c = capture(alcove::cli::cmd_coeffs, cfg);
  CHECK(c["length"] == 2);
  CHECK(!c["terms"].empty());
  cfg.type = "A";
  cfg.rank = 2;
  cfg.omega = "1";
  const json l = capture(alcove::cli::cmd_laplacian, cfg);
  CHECK(l["basis"].size() == 6);
  CHECK(l["matrix"].size() == 6);
  cfg.omega = "7";
  std::ostringstream sink;
  CHECK_THROWS_AS(alcove::cli::cmd_laplacian(cfg, sink), alcove::cli::UsageError);
}

TEST_CASE("csv writes complex values as re+imi") {
  RunConfig cfg;
  cfg.c = 3;
  cfg.format = "csv";
  std::ostringstream out;
  CHECK(alcove::cli::cmd_verify(cfg, out) == 0);
  const std::string s = out.str();
  CHECK(s.rfind("mu,", 0) == 0);
  CHECK(s.find("i,") != std::string::npos);
}

TEST_CASE("verify report round-trips through a spectrum file") {
  RunConfig cfg;
  cfg.type = "G";
  cfg.rank = 2;
  cfg.c = 3;
  cfg.tau_s = 0.5;
  cfg.tau_l = 0.2;
  const auto spec = temp_file("spectrum.json");
  {
    std::ofstream f(spec);
    CHECK(alcove::cli::cmd_spectrum(cfg, f) == 0);
  }
  std::ostringstream direct, reread;
  CHECK(alcove::cli::cmd_verify(cfg, direct) == 0);
  cfg.spectrum_in = spec.string();
  CHECK(alcove::cli::cmd_verify(cfg, reread) == 0);
  CHECK(direct.str() == reread.str());
  std::filesystem::remove(spec);
}

TEST_CASE("exit codes of the executable") {
  CHECK(run("describe --type A --rank 2") == 0);
  CHECK(run("verify --type A --rank 1 --c 3") == 0);
  CHECK(run("verify --type B --rank 2 --c 2") == 0);
  CHECK(run("verify --type A --rank 1 --c 3 --tol-eigen 0") == 1);
  CHECK(run("describe --type C --rank 2") == 2);
  CHECK(run("spectrum --tau-s -0.5") == 2);
  CHECK(run("spectrum --tau-s -0.5 --allow-negative-tau") == 0);
  CHECK(run("spectrum --c 1") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("") == 2);
}

TEST_CASE("config file values yield to flags") {
  const auto cfg = temp_file("config.json");
  const auto out = temp_file("describe.json");
  {
    std::ofstream f(cfg);
    f << R"({"type": "B", "rank": 3, "c": 4})";
  }
  CHECK(run("describe --config " + cfg.string() + " --c 2 --out " + out.string()) == 0);
  std::ifstream in(out);
  const json j = json::parse(in);
  CHECK(j["label"] == "B3");
  CHECK(j["c"] == 2);
  {
    std::ofstream f(cfg);
    f << R"({"c": "three"})";
  }
  CHECK(run("describe --config " + cfg.string()) == 2);
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);
}
