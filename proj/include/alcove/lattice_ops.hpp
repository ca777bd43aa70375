#pragma once

#include <Eigen/Core>

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "alcove/hecke_coeff.hpp"

namespace alcove {

using Complex = std::complex<double>;

// Query of a lattice function outside its window.
class WindowError : public std::out_of_range {
public:
  explicit WindowError(const Weight& x) : std::out_of_range("point " + x.str() + " outside the window") {}
};

// Function on a finite window of P.
template <class Value = Complex>
class LatticeFunction {
public:
  using map_type = std::unordered_map<Weight, Value, WeightHash>;

  bool contains(const Weight& x) const { return values_.count(x) != 0; }
  const Value& at(const Weight& x) const {
    auto it = values_.find(x);
    if (it == values_.end()) throw WindowError(x);
    return it->second;
  }
  Value operator()(const Weight& x) const { return at(x); }
  void set(const Weight& x, Value v) { values_[x] = std::move(v); }
  std::size_t size() const { return values_.size(); }
  const map_type& values() const { return values_; }
  std::vector<Weight> window() const {
    std::vector<Weight> w;
    for (const auto& [k, v] : values_) w.push_back(k);
    std::sort(w.begin(), w.end());
    return w;
  }

private:
  map_type values_;
};

// Finitely supported linear form f ↦ Σ c_μ f(μ); used to extract operator matrices.
struct SparseForm {
  std::unordered_map<Weight, double, WeightHash> terms;

  static SparseForm delta(const Weight& x) {
    SparseForm s;
    s.terms.emplace(x, 1.0);
    return s;
  }
  SparseForm& operator+=(const SparseForm& o) {
    for (const auto& [k, v] : o.terms) terms[k] += v;
    return *this;
  }
  SparseForm& operator-=(const SparseForm& o) {
    for (const auto& [k, v] : o.terms) terms[k] -= v;
    return *this;
  }
  friend SparseForm operator+(SparseForm a, const SparseForm& b) { return a += b; }
  friend SparseForm operator-(SparseForm a, const SparseForm& b) { return a -= b; }
  friend SparseForm operator*(double s, SparseForm a) {
    for (auto& [k, v] : a.terms) v *= s;
    return a;
  }
  double coefficient(const Weight& x) const {
    auto it = terms.find(x);
    return it == terms.end() ? 0.0 : it->second;
  }
};

// Weights with ‖λ‖ ≤ radius·‖ϑ‖.
std::vector<Weight> ball_window(const RootSystem& R, double radius);

// Coefficients a_{λ,ν}, b_{λ,ν}, c_{λ,η} of the Dunkl-type operators; they depend on τ² only.
double a_coefficient(const AffineWeyl& G, const TauParams& tau, const Weight& lambda, const Weight& nu);
double b_coefficient(const AffineWeyl& G, const TauParams& tau, const Weight& lambda, const Weight& nu);
double c_coefficient(const AffineWeyl& G, const TauParams& tau, const Weight& lambda, const Weight& eta);

// T̂, I, X̂, 𝒥 and L_ω for fixed (R, c, τ). Word operators are evaluated pointwise with
// memoization, so only the dependency set of the requested point is touched.
class LatticeOperators {
public:
  LatticeOperators(const AffineWeyl& G, const TauParams& tau);

  const AffineWeyl& group() const { return *G_; }
  const RootSystem& root_system() const { return G_->root_system(); }
  const TauParams& tau() const { return tau_; }
  double tau_root(const AffineRoot& a) const { return tau_.tau(G_->is_long(a)); }

  // (T̂_a f)(x)
  template <class Value, class F>
  Value T_hat(const AffineRoot& a, F&& f, const Weight& x) const {
    const int v = G_->evaluate(a, x);
    const double t = tau_root(a);
    if (v > 0) return t * f(G_->reflect(a, x));
    if (v == 0) return t * f(x);
    return (1.0 / t) * f(G_->reflect(a, x)) + (t - 1.0 / t) * f(x);
  }

  // (I_a f)(λ) = τ_a f(s_aλ) + (τ_a − τ_a⁻¹)(J_a f)(λ)
  template <class Value, class F>
  Value I(const AffineRoot& a, F&& f, const Weight& x) const {
    const int v = G_->evaluate(a, x);
    const double t = tau_root(a);
    const Weight& alpha = root_system().root(a.root).weight;
    Value out = t * f(G_->reflect(a, x));
    if (v == 0) return out;
    Value j{};
    if (v > 0) {
      for (int k = 1; k <= v; ++k) j -= f(x - alpha * k);
    } else {
      for (int k = 0; k < -v; ++k) j += f(x + alpha * k);
    }
    return out + (t - 1.0 / t) * j;
  }

  enum class Kind { T_hat, I };

  // Operator image of T_w = T_u T_{j₁}···T_{jℓ} evaluated at x.
  template <class Value, class F>
  Value word(Kind kind, const AffineWeylElement& w, F&& f, const Weight& x) const {
    const ReducedWord rw = G_->reduced_word(w);
    return word<Value>(kind, rw, std::forward<F>(f), x);
  }

  template <class Value, class F>
  Value word(Kind kind, const ReducedWord& rw, F&& f, const Weight& x) const {
    const std::size_t len = rw.letters.size();
    std::vector<std::unordered_map<Weight, Value, WeightHash>> memo(len);
    std::function<Value(std::size_t, const Weight&)> g = [&](std::size_t k, const Weight& y) -> Value {
      if (k == len) return f(y);
      auto it = memo[k].find(y);
      if (it != memo[k].end()) return it->second;
      const AffineRoot a = G_->simple_root(rw.letters[k]);
      auto next = [&](const Weight& z) { return g(k + 1, z); };
      Value r = kind == Kind::T_hat ? T_hat<Value>(a, next, y) : I<Value>(a, next, y);
      memo[k].emplace(y, r);
      return r;
    };
    return g(0, G_->act(G_->inverse(rw.omega), x));
  }

  // (𝒥f)(λ) = τ_{w_λ}⁻¹ (I_{w_λ} f)(λ₊)
  template <class Value, class F>
  Value intertwiner(F&& f, const Weight& lambda) const {
    const MinimalRep mr = G_->minimal_rep(lambda);
    const ReducedWord rw{G_->identity(), mr.word};
    return (1.0 / tau_of(*G_, mr.element, tau_)) * word<Value>(Kind::I, rw, std::forward<F>(f), mr.dominant);
  }

  // Coefficients of the Dunkl-type operators.
  double a_coeff(const Weight& lambda, const Weight& nu) const { return a_coefficient(*G_, tau_, lambda, nu); }
  double b_coeff(const Weight& lambda, const Weight& nu) const { return b_coefficient(*G_, tau_, lambda, nu); }
  double c_coeff(const Weight& lambda, const Weight& eta) const { return c_coefficient(*G_, tau_, lambda, eta); }

  // (X̂^ν f)(λ)
  template <class Value, class F>
  Value X_hat(const Weight& nu, F&& f, const Weight& lambda) const {
    const MinimalRep mr = G_->minimal_rep(lambda);
    const double one_minus = 1.0 - 1.0 / tau_.tau2_short();
    Value out = a_coeff(lambda, nu) * f(lambda - nu) + (b_coeff(lambda, nu) * one_minus) * f(lambda);
    if (mr.word.empty()) return out;
    const CoeffTable<double>& table = coefficients(mr.element, nu);
    const double tw_inv = 1.0 / tau_of(*G_, mr.element, tau_);
    std::vector<double> c_eta(table.orbit.size());
    for (std::size_t e = 0; e < table.orbit.size(); ++e) c_eta[e] = c_coeff(mr.dominant, table.orbit[e]);
    for (std::size_t i = 0; i < table.interval.size(); ++i) {
      const AffineWeylElement& v = table.interval[i];
      if (v == mr.element) continue;
      const ReducedWord rv = G_->reduced_word(v);
      double bterm = table.B[i];
      for (std::size_t e = 0; e < table.orbit.size(); ++e) {
        const double A = table.A[i][e];
        if (A == 0.0) continue;
        bterm += one_minus * c_eta[e] * A;
        const Weight pt = mr.dominant - table.orbit[e];
        const double coef = A * tau_squared_of(*G_, G_->minimal_rep(pt).element, tau_);
        out += (tw_inv * coef) * word<Value>(Kind::T_hat, rv, f, pt);
      }
      if (bterm != 0.0) {
        out += (tw_inv * tau_of(*G_, v, tau_) * bterm) * f(G_->act(G_->inverse(v), mr.dominant));
      }
    }
    return out;
  }

  // (L_ω f)(λ) = Σ_{ν∈W₀ω} a_{λ,ν} f(λ−ν) + b_{λ,ν}(1−τ₀⁻²) f(λ)
  template <class Value, class F>
  Value laplacian(const Weight& omega, F&& f, const Weight& lambda) const {
    const double one_minus = 1.0 - 1.0 / tau_.tau2_short();
    Value out{};
    double diag = 0.0;
    for (const Weight& nu : weyl_orbit(root_system(), omega)) {
      out += a_coeff(lambda, nu) * f(lambda - nu);
      diag += b_coeff(lambda, nu) * one_minus;
    }
    if (diag != 0.0) out += diag * f(lambda);
    return out;
  }

  const CoeffTable<double>& coefficients(const AffineWeylElement& w, const Weight& nu) const;

private:
  const AffineWeyl* G_;
  TauParams tau_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<std::vector<int>, std::vector<int>>, std::unique_ptr<CoeffTable<double>>> cache_;
};

// Whole-function application: the result lives on the part of the window whose dependency
// set is available.
template <class Value, class Eval>
LatticeFunction<Value> apply_on_window(const LatticeFunction<Value>& f, const std::vector<Weight>& points,
                                       Eval&& eval) {
  LatticeFunction<Value> out;
  auto fn = [&](const Weight& y) -> Value { return f.at(y); };
  for (const Weight& x : points) {
    try {
      out.set(x, eval(fn, x));
    } catch (const WindowError&) {
    }
  }
  return out;
}

LatticeFunction<Complex> apply_T_hat(const LatticeOperators& ops, const AffineRoot& a, const LatticeFunction<Complex>& f);
LatticeFunction<Complex> apply_I(const LatticeOperators& ops, const AffineRoot& a, const LatticeFunction<Complex>& f);
LatticeFunction<Complex> apply_T_hat_word(const LatticeOperators& ops, const AffineWeylElement& w,
                                          const LatticeFunction<Complex>& f);
LatticeFunction<Complex> apply_I_word(const LatticeOperators& ops, const AffineWeylElement& w,
                                      const LatticeFunction<Complex>& f);
LatticeFunction<Complex> intertwiner(const LatticeOperators& ops, const LatticeFunction<Complex>& f);
// Solves 𝒥f = g on the window of g; throws WindowError if the window is not ⪯-downward closed.
LatticeFunction<Complex> intertwiner_inverse(const LatticeOperators& ops, const LatticeFunction<Complex>& g);
LatticeFunction<Complex> apply_X_nu(const LatticeOperators& ops, const Weight& nu, const LatticeFunction<Complex>& f);
LatticeFunction<Complex> laplacian_full(const LatticeOperators& ops, const Weight& omega,
                                        const LatticeFunction<Complex>& f);

// Vertices of [λ₊, λ] = {v⁻¹λ₊ : v ≤ w_λ}.
std::vector<Weight> orbit_interval(const AffineWeyl& G, const Weight& lambda);
// μ ⪯ λ: λ − μ ∈ Q and Conv[μ₊, μ] ⊆ Conv[λ₊, λ].
bool partial_order_leq(const AffineWeyl& G, const Weight& mu, const Weight& lambda);

// Matrix of L_ω on W_R-invariant functions in the basis P_c^+.
struct LaplacianSymmetric {
  std::vector<Weight> basis;
  Eigen::MatrixXd matrix;  // (L f)(λ) = Σ_μ matrix(λ, μ) f(μ)
};

double v_coefficient(const AffineWeyl& G, const TauParams& tau, const Weight& lambda, const Weight& nu);
double u_coefficient(const AffineWeyl& G, const TauParams& tau, const Weight& lambda, const Weight& omega);
LaplacianSymmetric laplacian_symmetric_matrix(const AffineWeyl& G, const Weight& omega, const TauParams& tau);

// The (quasi-)minuscule dominant weights: minuscule ω_k, then ϑ.
std::vector<Weight> laplacian_labels(const RootSystem& R);

}  // namespace alcove
