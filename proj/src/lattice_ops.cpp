#include "alcove/lattice_ops.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "alcove/hull.hpp"

namespace alcove {

namespace {

TauExponent operator+(TauExponent a, TauExponent b) { return {a.first + b.first, a.second + b.second}; }
TauExponent operator-(TauExponent a, TauExponent b) { return {a.first - b.first, a.second - b.second}; }
TauExponent scaled(TauExponent a, int k) { return {a.first * k, a.second * k}; }

std::vector<int> element_key(const AffineWeylElement& w) {
  std::vector<int> k(w.finite.data(), w.finite.data() + w.finite.size());
  k.insert(k.end(), w.translation.coords.data(), w.translation.coords.data() + w.translation.coords.size());
  return k;
}

}  // namespace

std::vector<Weight> ball_window(const RootSystem& R, double radius) {
  const int n = R.rank();
  const Eigen::MatrixXd gram = R.weight_gram().unaryExpr([](const Rational& r) { return r.to_double(); });
  const double theta2 = R.inner(R.theta(), R.theta()).to_double();
  const double bound2 = radius * radius * theta2 * (1.0 + 1e-12);
  Coords box(n);
  for (int j = 1; j <= n; ++j) {
    const double alpha2 = R.root(R.simple_root_index(j)).norm2.to_double();
    box(j - 1) = static_cast<int>(std::ceil(radius * std::sqrt(theta2) * 2.0 / std::sqrt(alpha2)));
  }
  std::vector<Weight> out;
  Coords x(n);
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      const Eigen::VectorXd v = x.cast<double>();
      if (v.dot(gram * v) <= bound2) out.push_back(Weight(x));
      return;
    }
    for (int k = -box(j); k <= box(j); ++k) {
      x(j) = k;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

double a_coefficient(const AffineWeyl& G, const TauParams& tau, const Weight& lambda, const Weight& nu) {
  const MinimalRep mr = G.minimal_rep(lambda);
  const Weight y = G.act(mr.element, lambda - nu);
  const AffineWeylElement wy = G.minimal_rep(y).element;
  const TauExponent e = tau_exponent(G, wy) + tau_exponent(G, G.multiply(wy, mr.element)) - tau_exponent(G, mr.element);
  return eval(tau, e);
}

double c_coefficient(const AffineWeyl& G, const TauParams& tau, const Weight& lambda, const Weight& eta) {
  if (G.theta(lambda - eta) == 0) return 0.0;
  const RootSystem& R = G.root_system();
  const int idx = R.find_root(eta);
  if (idx < 0) throw std::logic_error("theta(lambda - eta) > 0 requires eta to be a root");
  const int p = R.pair(lambda, idx);
  const int sgn = (p > 0) - (p < 0);
  return eval(tau, e_tau_vee_exponent(R, eta) + scaled(h_tau_vee_exponent(R), -sgn));
}

double b_coefficient(const AffineWeyl& G, const TauParams& tau, const Weight& lambda, const Weight& nu) {
  const RootSystem& R = G.root_system();
  const MinimalRep mr = G.minimal_rep(lambda);
  const MinimalRep shifted = G.minimal_rep(lambda - nu);
  if (shifted.dominant != mr.dominant) {
    return c_coefficient(G, tau, mr.dominant, Weight(Coords(mr.element.finite * nu.coords)));
  }
  const int idx = R.find_root(nu);
  if (idx < 0) throw std::logic_error("(λ−ν)₊ = λ₊ requires ν to be a root");
  const int k = 1 - R.pair(lambda, idx);
  if (k % G.c() != 0) throw std::logic_error("level of the affine root is not integral");
  const AffineRoot a{idx, k / G.c()};
  if (G.is_positive(a)) return 0.0;
  const AffineWeylElement wy = G.minimal_rep(G.act(mr.element, lambda - nu)).element;
  return eval(tau, scaled(tau_exponent(G, wy), 2));
}

LatticeOperators::LatticeOperators(const AffineWeyl& G, const TauParams& tau) : G_(&G), tau_(tau) {}

const CoeffTable<double>& LatticeOperators::coefficients(const AffineWeylElement& w, const Weight& nu) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto key = std::make_pair(element_key(w), std::vector<int>(nu.coords.data(), nu.coords.data() + nu.coords.size()));
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    auto table = std::make_unique<CoeffTable<double>>(expansion_coefficients<double>(*G_, w, nu, q_values(*G_, tau_)));
    it = cache_.emplace(std::move(key), std::move(table)).first;
  }
  return *it->second;
}

LatticeFunction<Complex> apply_T_hat(const LatticeOperators& ops, const AffineRoot& a, const LatticeFunction<Complex>& f) {
  return apply_on_window(f, f.window(), [&](auto&& fn, const Weight& x) { return ops.T_hat<Complex>(a, fn, x); });
}

LatticeFunction<Complex> apply_I(const LatticeOperators& ops, const AffineRoot& a, const LatticeFunction<Complex>& f) {
  return apply_on_window(f, f.window(), [&](auto&& fn, const Weight& x) { return ops.I<Complex>(a, fn, x); });
}

LatticeFunction<Complex> apply_T_hat_word(const LatticeOperators& ops, const AffineWeylElement& w,
                                          const LatticeFunction<Complex>& f) {
  const ReducedWord rw = ops.group().reduced_word(w);
  return apply_on_window(f, f.window(), [&](auto&& fn, const Weight& x) {
    return ops.word<Complex>(LatticeOperators::Kind::T_hat, rw, fn, x);
  });
}

LatticeFunction<Complex> apply_I_word(const LatticeOperators& ops, const AffineWeylElement& w,
                                      const LatticeFunction<Complex>& f) {
  const ReducedWord rw = ops.group().reduced_word(w);
  return apply_on_window(f, f.window(), [&](auto&& fn, const Weight& x) {
    return ops.word<Complex>(LatticeOperators::Kind::I, rw, fn, x);
  });
}

LatticeFunction<Complex> intertwiner(const LatticeOperators& ops, const LatticeFunction<Complex>& f) {
  return apply_on_window(f, f.window(), [&](auto&& fn, const Weight& x) { return ops.intertwiner<Complex>(fn, x); });
}

LatticeFunction<Complex> intertwiner_inverse(const LatticeOperators& ops, const LatticeFunction<Complex>& g) {
  const std::vector<Weight> window = g.window();
  std::unordered_map<Weight, int, WeightHash> index;
  for (std::size_t i = 0; i < window.size(); ++i) index.emplace(window[i], static_cast<int>(i));
  const Eigen::Index n = static_cast<Eigen::Index>(window.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  auto delta = [&](const Weight& mu) -> SparseForm {
    if (!index.count(mu)) throw WindowError(mu);
    return SparseForm::delta(mu);
  };
  for (Eigen::Index i = 0; i < n; ++i) {
    const SparseForm row = ops.intertwiner<SparseForm>(delta, window[static_cast<std::size_t>(i)]);
    for (const auto& [mu, v] : row.terms) J(i, index.at(mu)) += v;
  }
  Eigen::VectorXcd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) rhs(i) = g.at(window[static_cast<std::size_t>(i)]);
  const Eigen::VectorXcd sol = J.cast<Complex>().partialPivLu().solve(rhs);
  LatticeFunction<Complex> f;
  for (Eigen::Index i = 0; i < n; ++i) f.set(window[static_cast<std::size_t>(i)], sol(i));
  return f;
}

LatticeFunction<Complex> apply_X_nu(const LatticeOperators& ops, const Weight& nu, const LatticeFunction<Complex>& f) {
  return apply_on_window(f, f.window(), [&](auto&& fn, const Weight& x) { return ops.X_hat<Complex>(nu, fn, x); });
}

LatticeFunction<Complex> laplacian_full(const LatticeOperators& ops, const Weight& omega,
                                        const LatticeFunction<Complex>& f) {
  return apply_on_window(f, f.window(), [&](auto&& fn, const Weight& x) { return ops.laplacian<Complex>(omega, fn, x); });
}

std::vector<Weight> orbit_interval(const AffineWeyl& G, const Weight& lambda) {
  const MinimalRep mr = G.minimal_rep(lambda);
  std::set<Weight> pts;
  for (const auto& v : G.lower_interval(mr.element)) pts.insert(G.act(G.inverse(v), mr.dominant));
  return {pts.begin(), pts.end()};
}

bool partial_order_leq(const AffineWeyl& G, const Weight& mu, const Weight& lambda) {
  const RootSystem& R = G.root_system();
  if (!R.in_root_lattice(lambda - mu)) return false;
  std::vector<std::vector<Rational>> verts;
  for (const Weight& x : orbit_interval(G, lambda)) {
    verts.emplace_back(x.coords.data(), x.coords.data() + x.coords.size());
  }
  return in_convex_hull(verts, std::vector<Rational>(mu.coords.data(), mu.coords.data() + mu.coords.size()));
}

double v_coefficient(const AffineWeyl& G, const TauParams& tau, const Weight& lambda, const Weight& nu) {
  const RootSystem& R = G.root_system();
  const TauExponent h = h_tau_exponent(R);
  double v = 1.0;
  for (int i = 0; i < R.num_positive(); ++i) {
    const int p = R.pair(lambda, i);
    const int q = R.pair(nu, i);
    const TauExponent e = e_tau_exponent(R, R.root(i).coweight);
    const double t = tau.tau2(R.root(i).is_long);
    double x = 0.0;
    if (p == 0 && q < 0) x = eval(tau, e);
    else if (p == G.c() && q > 0) x = eval(tau, h - e);
    else continue;
    if (std::abs(1.0 - x) < 1e-14) throw std::domain_error("V coefficient has a pole at this tau");
    v *= (1.0 - t * x) / (1.0 - x);
  }
  return v;
}

double u_coefficient(const AffineWeyl& G, const TauParams& tau, const Weight& lambda, const Weight& omega) {
  const RootSystem& R = G.root_system();
  double u = 0.0;
  double cterm = 0.0;
  for (const Weight& nu : weyl_orbit(R, omega)) {
    const MinimalRep mr = G.minimal_rep(lambda - nu);
    if (mr.dominant == lambda) u += eval(tau, scaled(tau_exponent(G, mr.element), 2));
    if (G.act(mr.element, lambda) == lambda) cterm += c_coefficient(G, tau, lambda, nu);
  }
  return u + (1.0 - 1.0 / tau.tau2_short()) * cterm;
}

LaplacianSymmetric laplacian_symmetric_matrix(const AffineWeyl& G, const Weight& omega, const TauParams& tau) {
  const RootSystem& R = G.root_system();
  LaplacianSymmetric L;
  L.basis = enumerate_alcove_weights(R, G.c());
  std::unordered_map<Weight, Eigen::Index, WeightHash> index;
  for (std::size_t i = 0; i < L.basis.size(); ++i) index.emplace(L.basis[i], static_cast<Eigen::Index>(i));
  const Eigen::Index n = static_cast<Eigen::Index>(L.basis.size());
  L.matrix = Eigen::MatrixXd::Zero(n, n);
  const std::vector<Weight> orbit = weyl_orbit(R, omega);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Weight& lambda = L.basis[static_cast<std::size_t>(i)];
    for (const Weight& nu : orbit) {
      auto it = index.find(lambda - nu);
      if (it != index.end()) L.matrix(i, it->second) += v_coefficient(G, tau, lambda, nu);
    }
    L.matrix(i, i) += u_coefficient(G, tau, lambda, omega);
  }
  return L;
}

std::vector<Weight> laplacian_labels(const RootSystem& R) {
  std::vector<Weight> out;
  for (int k : R.minuscule_indices()) out.push_back(R.fundamental_weight(k));
  out.push_back(R.theta());
  return out;
}

}  // namespace alcove
