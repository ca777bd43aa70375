#pragma once

#include <Eigen/Core>

#include <complex>
#include <string>
#include <vector>

#include "alcove/bethe.hpp"
#include "alcove/lattice_ops.hpp"

namespace alcove {

// ⟨ξ, λ⟩ for ξ in coweight coordinates and λ ∈ P.
double pairing(const RootSystem& R, const Eigen::VectorXd& xi, const Weight& lambda);

// C(ξ) = ∏_{α>0} (1 − τ²_{α∨} e^{−i⟨ξ,α⟩}) / (1 − e^{−i⟨ξ,α⟩}). Throws if some ⟨ξ,α⟩ is
// within `margin` of 2πℤ.
Complex c_function(const RootSystem& R, const TauParams& tau, const Eigen::VectorXd& xi, double margin = 1e-8);

struct SphericalFunction {
  Eigen::VectorXd xi;
  std::vector<Weight> basis;  // P_c^+
  Eigen::VectorXcd values;
};

// Φ_ξ(λ) = Σ_{v∈W₀} C(vξ) e^{i⟨vξ, λ₊⟩}.
Complex spherical_value(const RootSystem& R, const TauParams& tau, const Eigen::VectorXd& xi, const Weight& lambda);
SphericalFunction spherical_function(const RootSystem& R, int c, const TauParams& tau, const Eigen::VectorXd& xi);

// m_ω(e^{−iξ}) = Σ_{ν∈W₀ω} e^{−i⟨ν,ξ⟩}
Complex eigenvalue(const RootSystem& R, const Weight& omega, const Eigen::VectorXd& xi);
// m_ω(e^{iξ})
Complex monomial(const RootSystem& R, const Weight& omega, const Eigen::VectorXd& xi);

struct InnerProductWeights {
  std::vector<Weight> basis;
  Eigen::VectorXd delta;  // Δ_λ = 1/W_{R,λ}(τ²)
};

InnerProductWeights delta_weights(const AffineWeyl& G, const TauParams& tau);

// ⟨f, g⟩_Δ = Σ f(λ) conj(g(λ)) Δ_λ
Complex inner_product(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g, const InnerProductWeights& w);

struct GaudinValue {
  double value = 0.0;         // real part of Ind·C(ξ)C(−ξ)·det ℋ(ξ)
  double imag_residue = 0.0;  // |imaginary part|
  double hessian_det = 0.0;
  Complex c_plus, c_minus;
};

GaudinValue gaudin_rhs(const RootSystem& R, int c, const TauParams& tau, const Eigen::VectorXd& xi);

// ξ_μ^0 = 2π(ρ∨+μ)/(c+h) and ξ_μ^1 = 2πμ/c.
Eigen::VectorXd limit_point(const RootSystem& R, int c, const Coweight& mu, int epsilon);

enum class Separation { none, value_tau0, value_tau1, derivative_tau0 };
std::string to_string(Separation s);

// Which part of the orthogonality criterion separates μ from μ̃ (first one that fires).
Separation orthogonality_criterion(const RootSystem& R, int c, const Coweight& mu, const Coweight& mu_t,
                                   const std::vector<Weight>& omegas, double threshold = 1e-9);

// |W_{R,λ}|, counted as #{v ∈ W₀ : λ − vλ ∈ cQ}.
int stabilizer_size(const RootSystem& R, int c, const Weight& lambda);
// |W_{R̂_c,μ}| = #{v ∈ W₀ : μ − vμ ∈ cQ∨}.
int coweight_stabilizer_size(const RootSystem& R, int c, const Coweight& mu);

// M_λ(e^{iξ}) = Σ_v e^{i⟨λ, vξ⟩} and χ_λ(e^{iξ}) = Σ_v (−1)^{ℓ(v)} e^{i⟨ρ+λ, vξ⟩}.
Complex symmetric_monomial(const RootSystem& R, const std::vector<FiniteWeylElement>& W, const Weight& lambda,
                           const Eigen::VectorXd& xi);
Complex antisymmetric_monomial(const RootSystem& R, const std::vector<FiniteWeylElement>& W, const Weight& lambda,
                               const Eigen::VectorXd& xi);

struct DegenerateReport {
  int epsilon = 0;
  std::vector<Coweight> labels;
  Eigen::MatrixXcd lhs;  // Gram-type sums over P_c^+
  Eigen::MatrixXd rhs;   // predicted diagonal constants, zero off the diagonal
  double max_residual = 0.0;
};

DegenerateReport degenerate_orthogonality(const RootSystem& R, int c, int epsilon);

}  // namespace alcove
