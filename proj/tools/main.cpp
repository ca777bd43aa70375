#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "alcove/bethe.hpp"
#include "alcove/lattice_ops.hpp"
#include "commands.hpp"

namespace {

using alcove::cli::RunConfig;
using nlohmann::json;

// Copies config-file values into options the command line left unset.
template <class T>
void fill(const json& j, const char* key, const CLI::Option* opt, T& target) {
  if (opt->count() > 0 || !j.contains(key)) return;
  try {
    target = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw alcove::cli::UsageError(std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  std::string config_path;
  double tau_l = 0.0;

  CLI::App app{"Discrete spherical functions on Weyl alcoves"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config();  // disable CLI11's own INI handling; JSON is read below
  app.add_option("--config", config_path, "JSON file of option values (flags win)")->check(CLI::ExistingFile);

  std::map<std::string, CLI::Option*> o;
  o["type"] = app.add_option("--type", cfg.type, "Cartan type A-G, or a label such as B3");
  o["rank"] = app.add_option("--rank", cfg.rank, "rank n");
  o["c"] = app.add_option("--c", cfg.c, "level c >= 2");
  o["tau_s"] = app.add_option("--tau-s", cfg.tau_s, "tau^2 on short roots");
  o["tau_l"] = app.add_option("--tau-l", tau_l, "tau^2 on long roots (default: --tau-s)");
  o["omega"] = app.add_option("--omega", cfg.omega, "minuscule index or 'quasiminuscule'");
  o["format"] = app.add_option("--format", cfg.format, "json or csv");
  o["out"] = app.add_option("--out", cfg.out, "output file (default stdout)");
  o["jobs"] = app.add_option("--jobs", cfg.jobs, "worker threads");
  o["tol_grad"] = app.add_option("--tol-grad", cfg.tol_grad, "gradient tolerance");
  o["tol_eigen"] = app.add_option("--tol-eigen", cfg.tol_eigen, "eigen-residual tolerance");
  o["allow_negative_tau"] = app.add_flag("--allow-negative-tau", cfg.allow_negative_tau, "permit -1 < tau^2 < 0");
  o["q_vee"] = app.add_flag("--q-vee", cfg.q_vee, "restrict to mu in the coroot lattice");

  auto* describe = app.add_subcommand("describe", "root data and alcove counts");
  auto* coeffs = app.add_subcommand("coeffs", "coefficients of T_w X^nu");
  o["word"] = coeffs->add_option("--word", cfg.word, "reduced word, letters 0..n, comma separated")->required();
  o["nu"] = coeffs->add_option("--nu", cfg.nu, "weight in the (quasi-)minuscule star");
  o["exact"] = coeffs->add_flag("--exact", cfg.exact, "polynomials in q_j instead of numbers");
  auto* laplacian = app.add_subcommand("laplacian", "matrix of L_omega on the alcove");
  auto* spectrum = app.add_subcommand("spectrum", "solve the Bethe equations");
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  o["spectrum_in"] = verify->add_option("--spectrum", cfg.spectrum_in, "reuse a spectrum JSON file")
                         ->check(CLI::ExistingFile);
  auto* norms = app.add_subcommand("norms", "quadratic norms against the Gaudin formula");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : alcove::cli::kUsage;
  }

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw alcove::cli::UsageError(std::string("bad config file: ") + e.what());
      }
      fill(j, "type", o["type"], cfg.type);
      fill(j, "rank", o["rank"], cfg.rank);
      fill(j, "c", o["c"], cfg.c);
      fill(j, "tau_s", o["tau_s"], cfg.tau_s);
      fill(j, "tau_l", o["tau_l"], tau_l);
      if (o["tau_l"]->count() == 0 && j.contains("tau_l")) o["tau_l"]->add_result(std::to_string(tau_l));
      fill(j, "omega", o["omega"], cfg.omega);
      fill(j, "format", o["format"], cfg.format);
      fill(j, "out", o["out"], cfg.out);
      fill(j, "jobs", o["jobs"], cfg.jobs);
      fill(j, "tol_grad", o["tol_grad"], cfg.tol_grad);
      fill(j, "tol_eigen", o["tol_eigen"], cfg.tol_eigen);
      fill(j, "allow_negative_tau", o["allow_negative_tau"], cfg.allow_negative_tau);
      fill(j, "q_vee", o["q_vee"], cfg.q_vee);
    }
    if (o["tau_l"]->count() > 0) cfg.tau_l = tau_l;
    alcove::cli::validate(cfg);

    std::ofstream file;
    if (!cfg.out.empty()) {
      file.open(cfg.out);
      if (!file) throw alcove::cli::UsageError("cannot write " + cfg.out);
    }
    std::ostream& out = cfg.out.empty() ? std::cout : file;

    if (*describe) return alcove::cli::cmd_describe(cfg, out);
    if (*coeffs) return alcove::cli::cmd_coeffs(cfg, out);
    if (*laplacian) return alcove::cli::cmd_laplacian(cfg, out);
    if (*spectrum) return alcove::cli::cmd_spectrum(cfg, out);
    if (*verify) return alcove::cli::cmd_verify(cfg, out);
    if (*norms) return alcove::cli::cmd_norms(cfg, out);
  } catch (const alcove::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return alcove::cli::kUsage;
  } catch (const alcove::NonConvergence& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return alcove::cli::kNonConvergence;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return alcove::cli::kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return alcove::cli::kUsage;
  }
  return alcove::cli::kUsage;
}
