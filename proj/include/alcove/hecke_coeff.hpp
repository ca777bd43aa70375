#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "alcove/affine_weyl.hpp"
#include "alcove/qpoly.hpp"

namespace alcove {

// Multiplicity parameters, stored through their squares τ_s², τ_l².
// Odd powers of τ need τ² > 0 and use the positive root.
class TauParams {
public:
  TauParams(double tau2_short, double tau2_long);
  static TauParams equal(double tau2) { return {tau2, tau2}; }
  static TauParams from_tau(double tau_short, double tau_long);

  double tau2_short() const { return t_short_; }
  double tau2_long() const { return t_long_; }
  double tau2(bool is_long) const { return is_long ? t_long_ : t_short_; }
  double tau(bool is_long) const;
  double q(bool is_long) const;  // τ − τ⁻¹
  // τ_s^es · τ_l^el
  double monomial(int es, int el) const;

private:
  double t_short_;
  double t_long_;
};

// Exponent pairs (short, long) of the multiplicative characters.
using TauExponent = std::pair<int, int>;
TauExponent tau_exponent(const AffineWeyl& G, const AffineWeylElement& w);        // τ_w
TauExponent e_tau_exponent(const RootSystem& R, const Coweight& eta);             // e_τ(η) = ∏τ_{α∨}^{⟨η,α⟩}
TauExponent e_tau_vee_exponent(const RootSystem& R, const Weight& eta);           // e∨_τ(η) = ∏τ_{α∨}^{⟨η,α∨⟩}
TauExponent h_tau_exponent(const RootSystem& R);                                  // τ₀² e_τ(ϑ∨)
TauExponent h_tau_vee_exponent(const RootSystem& R);                              // τ₀² e∨_τ(ϑ)

double tau_of(const AffineWeyl& G, const AffineWeylElement& w, const TauParams& tau);
double tau_squared_of(const AffineWeyl& G, const AffineWeylElement& w, const TauParams& tau);
double eval(const TauParams& tau, const TauExponent& e);

// q_j for j = 0..n.
std::vector<double> q_values(const AffineWeyl& G, const TauParams& tau);
std::vector<QPoly> q_symbols(const AffineWeyl& G);

// Coefficients of T_w X^ν = Σ_{v≤w} (B_{v,w} + Σ_η A^{η}_{v,w} X^η) T_v; the v = w row
// carries A^{w'ν}_{w,w} = 1.
template <class Scalar>
struct CoeffTable {
  AffineWeylElement w;
  Weight nu;
  std::vector<Weight> orbit;
  std::vector<AffineWeylElement> interval;
  std::unordered_map<AffineWeylElement, int, AffineWeylElementHash> position;
  std::unordered_map<Weight, int, WeightHash> orbit_position;
  std::vector<std::vector<Scalar>> A;  // A[v][η]
  std::vector<Scalar> B;

  int index_of(const AffineWeylElement& v) const {
    auto it = position.find(v);
    return it == position.end() ? -1 : it->second;
  }
  int orbit_index(const Weight& eta) const {
    auto it = orbit_position.find(eta);
    return it == orbit_position.end() ? -1 : it->second;
  }
  Scalar a(const AffineWeylElement& v, const Weight& eta) const {
    const int i = index_of(v), k = orbit_index(eta);
    return (i < 0 || k < 0) ? Scalar(0) : A[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  }
  Scalar b(const AffineWeylElement& v) const {
    const int i = index_of(v);
    return i < 0 ? Scalar(0) : B[static_cast<std::size_t>(i)];
  }
};

bool in_quasi_minuscule_star(const RootSystem& R, const Weight& nu);

// Recurrence of the multiplication theorem along the reduced word of w; q holds q_0..q_n.
template <class Scalar>
CoeffTable<Scalar> expansion_coefficients(const AffineWeyl& G, const AffineWeylElement& w, const Weight& nu,
                                          const std::vector<Scalar>& q);

inline CoeffTable<double> expansion_coefficients(const AffineWeyl& G, const AffineWeylElement& w,
                                                 const Weight& nu, const TauParams& tau) {
  return expansion_coefficients<double>(G, w, nu, q_values(G, tau));
}

// W_{R,λ}(τ²) as a direct stabilizer sum and via the product over walls through λ.
double poincare_direct(const AffineWeyl& G, const Weight& lambda, const TauParams& tau);
double poincare_product(const AffineWeyl& G, const Weight& lambda, const TauParams& tau);
inline double poincare_polynomial(const AffineWeyl& G, const Weight& lambda, const TauParams& tau) {
  return poincare_product(G, lambda, tau);
}

}  // namespace alcove
