#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace alcove::cli {

enum ExitCode : int { kPass = 0, kVerifyFailed = 1, kUsage = 2, kNonConvergence = 3 };

// Flags win over the config file; the config file wins over these defaults.
struct RunConfig {
  std::string type = "A";
  int rank = 1;
  int c = 2;
  double tau_s = 0.25;  // τ_s²
  std::optional<double> tau_l;  // τ_l², defaults to τ_s²
  std::string omega = "quasiminuscule";
  std::string format = "json";
  std::string out;
  int jobs = 1;
  double tol_grad = 1e-12;
  double tol_eigen = 1e-9;
  bool allow_negative_tau = false;
  bool q_vee = false;
  // coeffs
  std::string word;
  std::string nu;
  bool exact = false;
  // verify
  std::string spectrum_in;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void validate(const RunConfig& cfg);

int cmd_describe(const RunConfig& cfg, std::ostream& out);
int cmd_coeffs(const RunConfig& cfg, std::ostream& out);
int cmd_laplacian(const RunConfig& cfg, std::ostream& out);
int cmd_spectrum(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_norms(const RunConfig& cfg, std::ostream& out);

}  // namespace alcove::cli
