#include "alcove/spectral.hpp"

#include <Eigen/LU>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace alcove {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const std::vector<FiniteWeylElement>& weyl_group_of(const RootSystem& R) {
  static std::mutex m;
  static std::map<std::string, std::vector<FiniteWeylElement>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(R.label());
  if (it == cache.end()) it = cache.emplace(R.label(), R.weyl_group()).first;
  return it->second;
}

Eigen::MatrixXd pairing_matrix(const RootSystem& R) {
  const int n = R.rank();
  Eigen::MatrixXd P(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) P(i, j) = R.weight_coweight_pairing()(i, j).to_double();
  return P;
}

// (1 − t e^{−ix}) / (1 − e^{−ix})
Complex c_factor(double t, double x, double margin) {
  if (std::abs(std::remainder(x, kTwoPi)) < margin) throw std::domain_error("spectral parameter is not regular");
  const Complex e = std::exp(Complex(0.0, -x));
  return (1.0 - t * e) / (1.0 - e);
}

// ⟨ξ, β⟩ for every root β, in root order.
Eigen::VectorXd all_root_pairings(const RootSystem& R, const Eigen::VectorXd& xi) {
  Eigen::VectorXd out(R.num_roots());
  for (int i = 0; i < R.num_roots(); ++i) out(i) = R.root(i).simple.cast<double>().dot(xi);
  return out;
}

// Plane-wave data of Σ_v C(v⁻¹ξ) e^{i⟨ξ, vλ⟩}: per v, the coefficient and the vector
// y_v with ⟨ξ, vλ⟩ = λ · y_v.
struct PlaneWaves {
  std::vector<Complex> coeff;
  std::vector<Eigen::VectorXd> dir;
};

PlaneWaves plane_waves(const RootSystem& R, const TauParams& tau, const Eigen::VectorXd& xi) {
  const std::vector<FiniteWeylElement>& W = weyl_group_of(R);
  const Eigen::VectorXd rp = all_root_pairings(R, xi);
  const Eigen::VectorXd Px = pairing_matrix(R) * xi;
  PlaneWaves pw;
  pw.coeff.reserve(W.size());
  pw.dir.reserve(W.size());
  for (const FiniteWeylElement& v : W) {
    Complex C = 1.0;
    for (int i = 0; i < R.num_positive(); ++i)
      C *= c_factor(tau.tau2(R.root(i).is_long), rp(R.act_on_root(v.matrix, i)), 1e-8);
    pw.coeff.push_back(C);
    pw.dir.push_back(v.matrix.cast<double>().transpose() * Px);
  }
  return pw;
}

Complex evaluate(const PlaneWaves& pw, const Weight& lambda) {
  const Eigen::VectorXd l = lambda.coords.cast<double>();
  Complex s = 0.0;
  for (std::size_t k = 0; k < pw.coeff.size(); ++k) s += pw.coeff[k] * std::exp(Complex(0.0, l.dot(pw.dir[k])));
  return s;
}

bool in_scaled_lattice(const Coords& d, int c, auto&& member) {
  if ((d.array() - c * (d.array() / c)).any()) return false;
  return member(Coords(d / c));
}

}  // namespace

double pairing(const RootSystem& R, const Eigen::VectorXd& xi, const Weight& lambda) {
  return lambda.coords.cast<double>().dot(pairing_matrix(R) * xi);
}

Complex c_function(const RootSystem& R, const TauParams& tau, const Eigen::VectorXd& xi, double margin) {
  Complex C = 1.0;
  for (int i = 0; i < R.num_positive(); ++i)
    C *= c_factor(tau.tau2(R.root(i).is_long), R.root(i).simple.cast<double>().dot(xi), margin);
  return C;
}

Complex spherical_value(const RootSystem& R, const TauParams& tau, const Eigen::VectorXd& xi, const Weight& lambda) {
  return evaluate(plane_waves(R, tau, xi), R.dominant(lambda));
}

SphericalFunction spherical_function(const RootSystem& R, int c, const TauParams& tau, const Eigen::VectorXd& xi) {
  SphericalFunction out;
  out.xi = xi;
  out.basis = enumerate_alcove_weights(R, c);
  out.values.resize(static_cast<Eigen::Index>(out.basis.size()));
  const PlaneWaves pw = plane_waves(R, tau, xi);
  for (std::size_t k = 0; k < out.basis.size(); ++k) out.values(static_cast<Eigen::Index>(k)) = evaluate(pw, out.basis[k]);
  return out;
}

Complex eigenvalue(const RootSystem& R, const Weight& omega, const Eigen::VectorXd& xi) {
  return std::conj(monomial(R, omega, xi));
}

Complex monomial(const RootSystem& R, const Weight& omega, const Eigen::VectorXd& xi) {
  const Eigen::VectorXd Px = pairing_matrix(R) * xi;
  Complex s = 0.0;
  for (const Weight& nu : weyl_orbit(R, omega)) s += std::exp(Complex(0.0, nu.coords.cast<double>().dot(Px)));
  return s;
}

InnerProductWeights delta_weights(const AffineWeyl& G, const TauParams& tau) {
  InnerProductWeights w;
  w.basis = enumerate_alcove_weights(G.root_system(), G.c());
  w.delta.resize(static_cast<Eigen::Index>(w.basis.size()));
  for (std::size_t k = 0; k < w.basis.size(); ++k)
    w.delta(static_cast<Eigen::Index>(k)) = 1.0 / poincare_polynomial(G, w.basis[k], tau);
  return w;
}

Complex inner_product(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g, const InnerProductWeights& w) {
  if (f.size() != w.delta.size() || g.size() != w.delta.size()) throw std::invalid_argument("size mismatch");
  Complex s = 0.0;
  for (Eigen::Index k = 0; k < f.size(); ++k) s += f(k) * std::conj(g(k)) * w.delta(k);
  return s;
}

GaudinValue gaudin_rhs(const RootSystem& R, int c, const TauParams& tau, const Eigen::VectorXd& xi) {
  GaudinValue g;
  g.c_plus = c_function(R, tau, xi);
  g.c_minus = c_function(R, tau, -xi);
  const MorseProblem p{&R, c, tau, Coweight::zero(R.rank())};
  g.hessian_det = hessian(p, xi).determinant();
  const Complex v = static_cast<double>(R.index()) * g.c_plus * g.c_minus * g.hessian_det;
  g.value = v.real();
  g.imag_residue = std::abs(v.imag());
  return g;
}

Eigen::VectorXd limit_point(const RootSystem& R, int c, const Coweight& mu, int epsilon) {
  if (epsilon == 0) return seed_tau0(R, c, mu);
  if (epsilon == 1) return seed_tau1(R, c, mu);
  throw std::invalid_argument("epsilon must be 0 or 1");
}

std::string to_string(Separation s) {
  switch (s) {
    case Separation::value_tau0: return "value_tau0";
    case Separation::value_tau1: return "value_tau1";
    case Separation::derivative_tau0: return "derivative_tau0";
    case Separation::none: break;
  }
  return "none";
}

Separation orthogonality_criterion(const RootSystem& R, int c, const Coweight& mu, const Coweight& mu_t,
                                   const std::vector<Weight>& omegas, double threshold) {
  for (int eps : {0, 1}) {
    const Eigen::VectorXd a = limit_point(R, c, mu, eps), b = limit_point(R, c, mu_t, eps);
    for (const Weight& w : omegas)
      if (std::abs(monomial(R, w, a) - monomial(R, w, b)) > threshold)
        return eps == 0 ? Separation::value_tau0 : Separation::value_tau1;
  }
  // τ-derivative at τ → 0, one length class of roots at a time.
  auto derivative = [&](const Eigen::VectorXd& xi0, const Weight& omega, bool is_long) {
    const Eigen::VectorXd Px = pairing_matrix(R) * xi0;
    Complex s = 0.0;
    for (const Weight& nu : weyl_orbit(R, omega)) {
      const Complex e = std::exp(Complex(0.0, nu.coords.cast<double>().dot(Px)));
      for (int i = 0; i < R.num_positive(); ++i) {
        if (R.root(i).is_long != is_long) continue;
        s += e * std::sin(R.root(i).simple.cast<double>().dot(xi0)) * static_cast<double>(R.pair(nu, i));
      }
    }
    return s;
  };
  const Eigen::VectorXd a = limit_point(R, c, mu, 0), b = limit_point(R, c, mu_t, 0);
  for (bool is_long : {false, true}) {
    if (is_long && R.simply_laced()) continue;
    for (const Weight& w : omegas)
      if (std::abs(derivative(a, w, is_long) - derivative(b, w, is_long)) > threshold)
        return Separation::derivative_tau0;
  }
  return Separation::none;
}

int stabilizer_size(const RootSystem& R, int c, const Weight& lambda) {
  int count = 0;
  for (const FiniteWeylElement& v : weyl_group_of(R)) {
    const Coords d = lambda.coords - v.matrix * lambda.coords;
    if (in_scaled_lattice(d, c, [&](const Coords& q) { return R.in_root_lattice(Weight(q)); })) ++count;
  }
  return count;
}

int coweight_stabilizer_size(const RootSystem& R, int c, const Coweight& mu) {
  int count = 0;
  for (const FiniteWeylElement& v : weyl_group_of(R)) {
    const Coords d = mu.coords - R.act_on_coweight(v.matrix, mu).coords;
    if (in_scaled_lattice(d, c, [&](const Coords& q) { return R.in_coroot_lattice(Coweight(q)); })) ++count;
  }
  return count;
}

Complex symmetric_monomial(const RootSystem& R, const std::vector<FiniteWeylElement>& W, const Weight& lambda,
                           const Eigen::VectorXd& xi) {
  const Eigen::VectorXd Px = pairing_matrix(R) * xi;
  Complex s = 0.0;
  for (const FiniteWeylElement& v : W) s += std::exp(Complex(0.0, (v.matrix * lambda.coords).cast<double>().dot(Px)));
  return s;
}

Complex antisymmetric_monomial(const RootSystem& R, const std::vector<FiniteWeylElement>& W, const Weight& lambda,
                               const Eigen::VectorXd& xi) {
  const Eigen::VectorXd Px = pairing_matrix(R) * xi;
  const Coords shifted = lambda.coords + R.rho().coords;
  Complex s = 0.0;
  for (const FiniteWeylElement& v : W)
    s += static_cast<double>(v.sign()) * std::exp(Complex(0.0, (v.matrix * shifted).cast<double>().dot(Px)));
  return s;
}

DegenerateReport degenerate_orthogonality(const RootSystem& R, int c, int epsilon) {
  if (c < 2) throw std::invalid_argument("c must be at least 2");
  const std::vector<FiniteWeylElement>& W = weyl_group_of(R);
  const std::vector<Weight> basis = enumerate_alcove_weights(R, c);
  DegenerateReport rep;
  rep.epsilon = epsilon;
  rep.labels = enumerate_alcove_coweights(R, c);
  const auto m = static_cast<Eigen::Index>(rep.labels.size());
  const auto nb = static_cast<Eigen::Index>(basis.size());

  Eigen::MatrixXcd F(nb, m);
  Eigen::VectorXd weight = Eigen::VectorXd::Ones(nb);
  for (Eigen::Index j = 0; j < m; ++j) {
    const Eigen::VectorXd xi = limit_point(R, c, rep.labels[static_cast<std::size_t>(j)], epsilon);
    for (Eigen::Index k = 0; k < nb; ++k) {
      const Weight& lam = basis[static_cast<std::size_t>(k)];
      F(k, j) = epsilon == 1 ? symmetric_monomial(R, W, lam, xi) : antisymmetric_monomial(R, W, lam, xi);
    }
  }
  if (epsilon == 1)
    for (Eigen::Index k = 0; k < nb; ++k) weight(k) = 1.0 / stabilizer_size(R, c, basis[static_cast<std::size_t>(k)]);

  rep.lhs = F.transpose() * weight.asDiagonal() * F.conjugate();
  rep.rhs = Eigen::MatrixXd::Zero(m, m);
  const double base = std::pow(static_cast<double>(epsilon == 1 ? c : c + R.coxeter_number()), R.rank()) * R.index();
  for (Eigen::Index j = 0; j < m; ++j)
    rep.rhs(j, j) = epsilon == 1 ? base * coweight_stabilizer_size(R, c, rep.labels[static_cast<std::size_t>(j)]) : base;
  rep.max_residual = (rep.lhs - rep.rhs.cast<Complex>()).cwiseAbs().maxCoeff();
  return rep;
}

}  // namespace alcove
