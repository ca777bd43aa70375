#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alcove/hecke_coeff.hpp"

namespace alcove {

// Points ξ ∈ V are stored through x_k = ⟨ξ, α_k⟩ (fundamental coweight coordinates).

struct MorseProblem {
  const RootSystem* R = nullptr;
  int c = 2;
  TauParams tau{0.25, 0.25};
  Coweight mu;
};

struct SpectralPoint {
  Coweight mu;
  Eigen::VectorXd xi;
  int iterations = 0;
  double grad_norm = 0.0;
  double hessian_det = 0.0;
  double hessian_condition = 0.0;
  double bae_residual = 0.0;
  bool in_alcove = false;
  bool moment_gap_ok = false;
  bool hessian_positive = false;
};

class NonConvergence : public std::runtime_error {
public:
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct SolverOptions {
  double tol_grad = 1e-12;
  int max_iterations = 200;
  double armijo = 1e-4;
};

// v_α(x) with t = τ²_{α∨}: principal branch on (−π, π), quasi-periodic.
double v_function(double t, double x);
double v_derivative(double t, double x);
// ∫₀ˣ v_α
double v_antiderivative(double t, double x);

double morse_value(const MorseProblem& p, const Eigen::VectorXd& xi);
// cξ + ρ∨_v(ξ) − 2π(ρ∨+μ), in the same coordinates as ξ.
Eigen::VectorXd morse_gradient(const MorseProblem& p, const Eigen::VectorXd& xi);
// ℋ(ξ) as an endomorphism of V in these coordinates (det is basis independent).
Eigen::MatrixXd hessian(const MorseProblem& p, const Eigen::VectorXd& xi);
// Symmetric form ℋ_{η,ζ} on the coordinate basis: Gram(ω∨)·ℋ.
Eigen::MatrixXd hessian_form(const MorseProblem& p, const Eigen::VectorXd& xi);

// 2π(ρ∨+μ)/(c+h), the τ → 0 position.
Eigen::VectorXd seed_tau0(const RootSystem& R, int c, const Coweight& mu);
// 2πμ/c, the τ → 1 position.
Eigen::VectorXd seed_tau1(const RootSystem& R, int c, const Coweight& mu);

double bae_residual(const RootSystem& R, int c, const TauParams& tau, const Eigen::VectorXd& xi);

// κ₊ and κ₋ of the moment-gap bounds.
std::pair<double, double> kappa(const RootSystem& R, const TauParams& tau);
bool moment_gaps_hold(const MorseProblem& p, const Eigen::VectorXd& xi, double slack = 1e-10);
bool in_open_alcove(const RootSystem& R, const Eigen::VectorXd& xi);
// ⟨ξ, α⟩ for every positive root, in root order.
Eigen::VectorXd root_pairings(const RootSystem& R, const Eigen::VectorXd& xi);

SpectralPoint solve_bethe(const MorseProblem& p, const SolverOptions& opt = {});
SpectralPoint solve_bethe(const MorseProblem& p, const Eigen::VectorXd& start, const SolverOptions& opt);
// Warm-started solves along a τ² grid ending at the target parameters.
SpectralPoint solve_bethe_continuation(const MorseProblem& p, int steps, const SolverOptions& opt = {});

// ⟨ρ∨+μ, α⟩ ∉ (c+h)ℤ for every root α.
bool is_regular_label(const RootSystem& R, int c, const Coweight& mu);
// Dot action w·μ = w(μ+ρ∨)−ρ∨ of the reflection in α_k (finite part only).
Coweight dot_reflect(const RootSystem& R, const Coweight& mu, int k);

}  // namespace alcove
