#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "alcove/spectral.hpp"

namespace alcove {

struct Tolerances {
  double grad = 1e-12;
  double bae = 1e-9;
  double eigen = 1e-9;       // relative to ‖Φ‖∞
  double commute = 1e-10;
  double adjoint = 1e-10;
  double orthogonal = 1e-8;  // relative to ‖Φ_μ‖‖Φ_μ̃‖
  double gaudin = 1e-7;
  double degenerate = 1e-9;
  double poincare = 1e-12;
  double rank = 1e-8;        // σ_min/σ_max
};

// A check passes when its worst value is strictly below the tolerance.
struct SuiteResult {
  std::string name;
  double worst = 0.0;
  double tolerance = 0.0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty() && worst < tolerance; }
};

// Solves the Bethe system for every μ ∈ P_c^{∨,+} (optionally only those in Q∨), split over
// `jobs` threads. Throws NonConvergence from any worker.
std::vector<SpectralPoint> compute_spectrum(const RootSystem& R, int c, const TauParams& tau,
                                            const SolverOptions& opt = {}, int jobs = 1,
                                            bool coroot_lattice_only = false);

// Matrix of L_ω with K(μ, λ) the coefficient of f(μ) in (L_ω f)(λ), i.e. the transpose of
// LaplacianSymmetric::matrix.
Eigen::MatrixXd operator_matrix(const LaplacianSymmetric& L);

// ω* = −v₀ω
Weight dual_weight(const RootSystem& R, const Weight& omega);

struct VerificationReport {
  std::string system;
  int c = 0;
  double tau2_short = 0.0, tau2_long = 0.0;
  std::vector<SpectralPoint> spectrum;
  std::vector<Weight> basis;
  std::vector<Weight> omegas;
  Eigen::MatrixXcd phi;               // rows μ, columns λ
  Eigen::MatrixXcd gram;              // ⟨Φ_μ, Φ_μ̃⟩_Δ
  std::vector<double> eigen_residuals;  // per μ, max over ω
  std::vector<double> gaudin_ratios;    // ⟨Φ,Φ⟩_Δ / RHS
  std::vector<std::string> separation;  // criterion that fired, per unordered pair (i<j)
  std::vector<std::pair<int, int>> unseparated;
  double singular_ratio = 0.0;
  DegenerateReport degenerate0, degenerate1;
  std::vector<SuiteResult> suites;
  bool passed() const;
};

VerificationReport verify_all(const RootSystem& R, int c, const TauParams& tau, const Tolerances& tol = {},
                              int jobs = 1);

// Same suites on a precomputed spectrum (e.g. read back from a file).
VerificationReport verify_spectrum(const RootSystem& R, int c, const TauParams& tau,
                                   const std::vector<SpectralPoint>& spectrum, const Tolerances& tol = {},
                                   int jobs = 1);

// Individual suites, usable on their own.
SuiteResult check_bethe(const RootSystem& R, int c, const std::vector<SpectralPoint>& pts, const Tolerances& tol);
SuiteResult check_commutation(const std::vector<LaplacianSymmetric>& Ls, const Tolerances& tol);
SuiteResult check_adjointness(const RootSystem& R, const std::vector<Weight>& omegas,
                              const std::vector<LaplacianSymmetric>& Ls, const InnerProductWeights& w,
                              const Tolerances& tol);
SuiteResult check_poincare(const AffineWeyl& G, const TauParams& tau, const Tolerances& tol);

}  // namespace alcove
