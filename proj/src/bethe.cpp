#include "alcove/bethe.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include "alcove/dilog.hpp"

namespace alcove {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct PositiveRoot {
  Eigen::VectorXd simple;    // ⟨ξ, α⟩ = simple · x
  Eigen::VectorXd coweight;  // α∨ in coweight coordinates
  double weight;             // 2/⟨α, α⟩
  double t;                  // τ²_{α∨}
};

struct Geometry {
  Eigen::MatrixXd gram;  // ⟨ω_j∨, ω_k∨⟩
  std::vector<PositiveRoot> roots;
};

Geometry geometry(const RootSystem& R, const TauParams& tau) {
  const int n = R.rank();
  Geometry g;
  g.gram.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.gram(i, j) = R.coweight_gram()(i, j).to_double();
  for (int i = 0; i < R.num_positive(); ++i) {
    const Root& a = R.root(i);
    g.roots.push_back({a.simple.cast<double>(), a.coweight.coords.cast<double>(), 2.0 / a.norm2.to_double(),
                       tau.tau2(a.is_long)});
  }
  return g;
}

void check_regime(const TauParams& tau) {
  for (double t : {tau.tau2_short(), tau.tau2_long()})
    if (!(std::abs(t) < 1.0)) throw std::domain_error("solver needs -1 < tau^2 < 1");
}

Eigen::VectorXd shifted(const Coweight& mu) { return (mu.coords.cast<double>().array() + 1.0).matrix(); }

double value(const Geometry& g, int c, const Eigen::VectorXd& m, const Eigen::VectorXd& x) {
  double v = 0.5 * c * x.dot(g.gram * x) - kTwoPi * m.dot(g.gram * x);
  for (const PositiveRoot& a : g.roots) v += a.weight * v_antiderivative(a.t, a.simple.dot(x));
  return v;
}

Eigen::VectorXd residual(const Geometry& g, int c, const Eigen::VectorXd& m, const Eigen::VectorXd& x) {
  Eigen::VectorXd r = c * x - kTwoPi * m;
  for (const PositiveRoot& a : g.roots) r += v_function(a.t, a.simple.dot(x)) * a.coweight;
  return r;
}

Eigen::MatrixXd jacobian(const Geometry& g, int c, const Eigen::VectorXd& x) {
  const auto n = x.size();
  Eigen::MatrixXd M = c * Eigen::MatrixXd::Identity(n, n);
  for (const PositiveRoot& a : g.roots) M += v_derivative(a.t, a.simple.dot(x)) * a.coweight * a.simple.transpose();
  return M;
}

Eigen::MatrixXd symmetric_form(const Geometry& g, int c, const Eigen::VectorXd& x) {
  Eigen::MatrixXd H = g.gram * jacobian(g, c, x);
  return 0.5 * (H + H.transpose());
}

double norm(const Geometry& g, const Eigen::VectorXd& r) { return std::sqrt(std::max(0.0, r.dot(g.gram * r))); }

}  // namespace

double v_function(double t, double x) {
  const double k = std::round(x / kTwoPi);
  const double y = x - kTwoPi * k;
  return kTwoPi * k + 2.0 * std::atan2((1.0 + t) * std::sin(0.5 * y), (1.0 - t) * std::cos(0.5 * y));
}

double v_derivative(double t, double x) { return (1.0 - t * t) / (1.0 - 2.0 * t * std::cos(x) + t * t); }

// Σ 2tᵏ(1 − cos kx)/k² summed through Li₂.
double v_antiderivative(double t, double x) {
  const std::complex<double> z = t * std::exp(std::complex<double>(0.0, x));
  return 0.5 * x * x + 2.0 * (dilog({t, 0.0}).real() - dilog(z).real());
}

double morse_value(const MorseProblem& p, const Eigen::VectorXd& xi) {
  check_regime(p.tau);
  return value(geometry(*p.R, p.tau), p.c, shifted(p.mu), xi);
}

Eigen::VectorXd morse_gradient(const MorseProblem& p, const Eigen::VectorXd& xi) {
  check_regime(p.tau);
  return residual(geometry(*p.R, p.tau), p.c, shifted(p.mu), xi);
}

Eigen::MatrixXd hessian(const MorseProblem& p, const Eigen::VectorXd& xi) {
  check_regime(p.tau);
  return jacobian(geometry(*p.R, p.tau), p.c, xi);
}

Eigen::MatrixXd hessian_form(const MorseProblem& p, const Eigen::VectorXd& xi) {
  check_regime(p.tau);
  return symmetric_form(geometry(*p.R, p.tau), p.c, xi);
}

Eigen::VectorXd seed_tau0(const RootSystem& R, int c, const Coweight& mu) {
  return kTwoPi / (c + R.coxeter_number()) * shifted(mu);
}

Eigen::VectorXd seed_tau1(const RootSystem& /*R*/, int c, const Coweight& mu) {
  return kTwoPi / c * mu.coords.cast<double>();
}

Eigen::VectorXd root_pairings(const RootSystem& R, const Eigen::VectorXd& xi) {
  Eigen::VectorXd out(R.num_positive());
  for (int i = 0; i < R.num_positive(); ++i) out(i) = R.root(i).simple.cast<double>().dot(xi);
  return out;
}

bool in_open_alcove(const RootSystem& R, const Eigen::VectorXd& xi) {
  const Eigen::VectorXd x = root_pairings(R, xi);
  return (x.array() > 0.0).all() && (x.array() < kTwoPi).all();
}

double bae_residual(const RootSystem& R, int c, const TauParams& tau, const Eigen::VectorXd& xi) {
  using cd = std::complex<double>;
  const Eigen::VectorXd x = root_pairings(R, xi);
  std::vector<cd> factor(static_cast<std::size_t>(R.num_positive()));
  for (int i = 0; i < R.num_positive(); ++i) {
    const double r = std::remainder(x(i), kTwoPi);
    if (std::abs(r) < 1e-12) throw std::domain_error("spectral parameter is not regular");
    const double t = tau.tau2(R.root(i).is_long);
    const cd e = std::exp(cd(0.0, x(i)));
    factor[static_cast<std::size_t>(i)] = (1.0 - t * e) / (t - e);
  }
  double worst = 0.0;
  for (int j = 0; j < R.rank(); ++j) {
    const cd lhs = std::exp(cd(0.0, c * xi(j)));
    cd rhs = 1.0;
    for (int i = 0; i < R.num_positive(); ++i) {
      const int k = R.root(i).coweight.coords(j);
      if (k) rhs *= std::pow(factor[static_cast<std::size_t>(i)], k);
    }
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

std::pair<double, double> kappa(const RootSystem& R, const TauParams& tau) {
  double plus = 0.0, minus = 0.0;
  for (int i = 0; i < R.num_positive(); ++i) {
    const double t = tau.tau2(R.root(i).is_long);
    const double a = std::abs(t);
    plus += (1.0 - t * t) / ((1.0 + a) * (1.0 + a));
    minus += (1.0 - t * t) / ((1.0 - a) * (1.0 - a));
  }
  return {2.0 * plus / R.rank(), 2.0 * minus / R.rank()};
}

bool moment_gaps_hold(const MorseProblem& p, const Eigen::VectorXd& xi, double slack) {
  const auto [kp, km] = kappa(*p.R, p.tau);
  const Eigen::VectorXd m = shifted(p.mu);
  const Eigen::VectorXd x = root_pairings(*p.R, xi);
  for (int i = 0; i < p.R->num_positive(); ++i) {
    const double s = kTwoPi * p.R->root(i).simple.cast<double>().dot(m);
    const double tol = slack * std::max(1.0, s);
    if (x(i) < s / (p.c + km) - tol || x(i) > s / (p.c + kp) + tol) return false;
  }
  return true;
}

SpectralPoint solve_bethe(const MorseProblem& p, const Eigen::VectorXd& start, const SolverOptions& opt) {
  check_regime(p.tau);
  if (p.c < 1) throw std::invalid_argument("c must be positive");
  const Geometry g = geometry(*p.R, p.tau);
  const Eigen::VectorXd m = shifted(p.mu);

  SpectralPoint out;
  out.mu = p.mu;
  out.hessian_positive = true;
  Eigen::VectorXd x = start;
  Eigen::VectorXd r = residual(g, p.c, m, x);
  double gn = norm(g, r);
  std::ostringstream trace;
  int it = 0;
  for (; it < opt.max_iterations && gn > opt.tol_grad; ++it) {
    trace << " [" << it << "] |grad|=" << gn;
    Eigen::LLT<Eigen::MatrixXd> llt(symmetric_form(g, p.c, x));
    if (llt.info() != Eigen::Success) {
      out.hessian_positive = false;
      throw NonConvergence("Hessian lost positive definiteness:" + trace.str());
    }
    const Eigen::VectorXd grad = g.gram * r;
    const Eigen::VectorXd step = llt.solve(-grad);

    Eigen::VectorXd trial = x + step;
    Eigen::VectorXd r_trial = residual(g, p.c, m, trial);
    double gn_trial = norm(g, r_trial);
    if (!(gn_trial < gn)) {
      // Backtrack on the Morse function itself.
      const double v0 = value(g, p.c, m, x);
      const double slope = grad.dot(step);
      double s = 1.0;
      bool accepted = false;
      for (int k = 0; k < 60; ++k, s *= 0.5) {
        trial = x + s * step;
        if (value(g, p.c, m, trial) <= v0 + opt.armijo * s * slope) {
          accepted = true;
          break;
        }
      }
      if (!accepted) break;  // roundoff floor
      r_trial = residual(g, p.c, m, trial);
      gn_trial = norm(g, r_trial);
    }
    x = trial;
    r = r_trial;
    gn = gn_trial;
  }
  if (gn > opt.tol_grad) {
    std::ostringstream msg;
    msg << "Newton did not converge for mu=" << p.mu.str() << " after " << it << " iterations:" << trace.str()
        << " final |grad|=" << gn;
    throw NonConvergence(msg.str());
  }

  // Polish below the tolerance while the residual keeps dropping.
  for (int k = 0; k < 2 && gn > 0.0; ++k) {
    const Eigen::VectorXd trial = x + jacobian(g, p.c, x).partialPivLu().solve(-r);
    const Eigen::VectorXd r_trial = residual(g, p.c, m, trial);
    const double gn_trial = norm(g, r_trial);
    if (!(gn_trial < gn)) break;
    x = trial;
    r = r_trial;
    gn = gn_trial;
  }

  out.xi = x;
  out.iterations = it;
  out.grad_norm = gn;
  const Eigen::MatrixXd M = jacobian(g, p.c, x);
  out.hessian_det = M.determinant();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(symmetric_form(g, p.c, x), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  out.hessian_positive = out.hessian_positive && ev.minCoeff() > 0.0;
  out.hessian_condition = ev.maxCoeff() / ev.minCoeff();
  out.in_alcove = in_open_alcove(*p.R, x);
  out.moment_gap_ok = moment_gaps_hold(p, x);
  try {
    out.bae_residual = bae_residual(*p.R, p.c, p.tau, x);
  } catch (const std::domain_error&) {
    out.bae_residual = std::numeric_limits<double>::infinity();
  }
  return out;
}

SpectralPoint solve_bethe(const MorseProblem& p, const SolverOptions& opt) {
  return solve_bethe(p, seed_tau0(*p.R, p.c, p.mu), opt);
}

SpectralPoint solve_bethe_continuation(const MorseProblem& p, int steps, const SolverOptions& opt) {
  if (steps < 1) throw std::invalid_argument("continuation needs at least one step");
  // Geometric approach to the target so that τ² ↑ 1 is resolved near the end.
  auto grid = [steps](double target, int k) {
    const double s = static_cast<double>(k) / steps;
    if (target > 0.0) return 1.0 - std::pow(1.0 - target, s);
    return target * s;
  };
  Eigen::VectorXd x = seed_tau0(*p.R, p.c, p.mu);
  SpectralPoint pt;
  for (int k = 1; k <= steps; ++k) {
    MorseProblem q = p;
    q.tau = TauParams(grid(p.tau.tau2_short(), k), grid(p.tau.tau2_long(), k));
    pt = solve_bethe(q, x, opt);
    x = pt.xi;
  }
  return pt;
}

bool is_regular_label(const RootSystem& R, int c, const Coweight& mu) {
  const int period = c + R.coxeter_number();
  for (int i = 0; i < R.num_positive(); ++i) {
    const int s = R.root(i).simple.dot(mu.coords) + R.root(i).height;
    if (s % period == 0) return false;
  }
  return true;
}

Coweight dot_reflect(const RootSystem& R, const Coweight& mu, int k) {
  Coords nu = mu.coords.array() + 1;
  const int nk = nu(k - 1);
  for (int j = 0; j < R.rank(); ++j) nu(j) -= nk * R.cartan()(j, k - 1);
  return Coweight(Coords(nu.array() - 1));
}

}  // namespace alcove
