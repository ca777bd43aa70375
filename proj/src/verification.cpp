#include "alcove/verification.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace alcove {

namespace {

// Runs fn(i) for i in [0, n) on up to `jobs` threads; rethrows the first failure.
template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < workers; ++k) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

void record(SuiteResult& r, double value, const std::string& where) {
  r.worst = std::max(r.worst, value);
  if (!(value < r.tolerance)) r.failures.push_back(where + ": " + fmt(value));
}

}  // namespace

std::vector<SpectralPoint> compute_spectrum(const RootSystem& R, int c, const TauParams& tau, const SolverOptions& opt,
                                            int jobs, bool coroot_lattice_only) {
  std::vector<Coweight> labels;
  for (const Coweight& mu : enumerate_alcove_coweights(R, c))
    if (!coroot_lattice_only || R.in_coroot_lattice(mu)) labels.push_back(mu);
  std::vector<SpectralPoint> out(labels.size());
  parallel_for(labels.size(), jobs, [&](std::size_t i) { out[i] = solve_bethe(MorseProblem{&R, c, tau, labels[i]}, opt); });
  return out;
}

Eigen::MatrixXd operator_matrix(const LaplacianSymmetric& L) { return L.matrix.transpose(); }

Weight dual_weight(const RootSystem& R, const Weight& omega) {
  return Weight(Coords(-(R.longest_element() * omega.coords)));
}

bool VerificationReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

SuiteResult check_bethe(const RootSystem& R, int c, const std::vector<SpectralPoint>& pts, const Tolerances& tol) {
  SuiteResult r{"bethe", 0.0, tol.grad, {}};
  for (const SpectralPoint& p : pts) {
    const std::string at = "mu=" + p.mu.str();
    record(r, p.grad_norm, at + " gradient");
    if (!(p.bae_residual < tol.bae)) r.failures.push_back(at + " bae residual " + fmt(p.bae_residual));
    if (!p.in_alcove) r.failures.push_back(at + " outside the alcove");
    if (!p.moment_gap_ok) r.failures.push_back(at + " moment gaps violated");
    if (!p.hessian_positive) r.failures.push_back(at + " Hessian not positive definite");
    const bool regular = is_regular_label(R, c, p.mu);
    if (!regular) r.failures.push_back(at + " label not dot-regular");
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((pts[i].xi - pts[j].xi).norm() < 1e-8)
        r.failures.push_back("coincident points for mu=" + pts[i].mu.str() + " and " + pts[j].mu.str());
  return r;
}

SuiteResult check_commutation(const std::vector<LaplacianSymmetric>& Ls, const Tolerances& tol) {
  SuiteResult r{"commutation", 0.0, tol.commute, {}};
  for (std::size_t i = 0; i < Ls.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const Eigen::MatrixXd& A = Ls[i].matrix;
      const Eigen::MatrixXd& B = Ls[j].matrix;
      record(r, (A * B - B * A).cwiseAbs().maxCoeff(), "pair " + std::to_string(i) + "," + std::to_string(j));
    }
  return r;
}

SuiteResult check_adjointness(const RootSystem& R, const std::vector<Weight>& omegas,
                              const std::vector<LaplacianSymmetric>& Ls, const InnerProductWeights& w,
                              const Tolerances& tol) {
  SuiteResult r{"adjointness", 0.0, tol.adjoint, {}};
  const Eigen::MatrixXd D = w.delta.asDiagonal();
  for (std::size_t k = 0; k < omegas.size(); ++k) {
    const Weight star = dual_weight(R, omegas[k]);
    auto it = std::find(omegas.begin(), omegas.end(), star);
    if (it == omegas.end()) {
      r.failures.push_back("omega*=" + star.str() + " missing");
      continue;
    }
    const auto ks = static_cast<std::size_t>(it - omegas.begin());
    const Eigen::MatrixXd K = operator_matrix(Ls[k]), Ks = operator_matrix(Ls[ks]);
    record(r, (K * D - (Ks * D).adjoint()).cwiseAbs().maxCoeff(), "omega=" + omegas[k].str());
  }
  return r;
}

SuiteResult check_poincare(const AffineWeyl& G, const TauParams& tau, const Tolerances& tol) {
  SuiteResult r{"poincare", 0.0, tol.poincare, {}};
  for (const Weight& lam : enumerate_alcove_weights(G.root_system(), G.c())) {
    const double a = poincare_direct(G, lam, tau), b = poincare_product(G, lam, tau);
    record(r, std::abs(a - b) / std::max(1.0, std::abs(a)), "lambda=" + lam.str());
  }
  return r;
}

VerificationReport verify_all(const RootSystem& R, int c, const TauParams& tau, const Tolerances& tol, int jobs) {
  SolverOptions opt;
  opt.tol_grad = tol.grad > 0.0 ? tol.grad : SolverOptions{}.tol_grad;
  return verify_spectrum(R, c, tau, compute_spectrum(R, c, tau, opt, jobs), tol, jobs);
}

VerificationReport verify_spectrum(const RootSystem& R, int c, const TauParams& tau,
                                   const std::vector<SpectralPoint>& spectrum, const Tolerances& tol, int jobs) {
  VerificationReport rep;
  rep.system = R.label();
  rep.c = c;
  rep.tau2_short = tau.tau2_short();
  rep.tau2_long = tau.tau2_long();

  rep.spectrum = spectrum;
  rep.suites.push_back(check_bethe(R, c, rep.spectrum, tol));

  const AffineWeyl G(R, c);
  const InnerProductWeights w = delta_weights(G, tau);
  rep.basis = w.basis;
  rep.omegas = laplacian_labels(R);
  std::vector<LaplacianSymmetric> Ls(rep.omegas.size());
  parallel_for(Ls.size(), jobs, [&](std::size_t k) { Ls[k] = laplacian_symmetric_matrix(G, rep.omegas[k], tau); });

  const auto m = static_cast<Eigen::Index>(rep.spectrum.size());
  const auto nb = static_cast<Eigen::Index>(rep.basis.size());
  rep.phi.resize(m, nb);
  rep.eigen_residuals.assign(rep.spectrum.size(), 0.0);
  parallel_for(rep.spectrum.size(), jobs, [&](std::size_t i) {
    const SphericalFunction f = spherical_function(R, c, tau, rep.spectrum[i].xi);
    rep.phi.row(static_cast<Eigen::Index>(i)) = f.values.transpose();
    const double scale = f.values.cwiseAbs().maxCoeff();
    for (std::size_t k = 0; k < Ls.size(); ++k) {
      const Eigen::VectorXcd res =
          Ls[k].matrix.cast<Complex>() * f.values - eigenvalue(R, rep.omegas[k], rep.spectrum[i].xi) * f.values;
      rep.eigen_residuals[i] = std::max(rep.eigen_residuals[i], res.cwiseAbs().maxCoeff() / scale);
    }
  });
  SuiteResult eig{"eigen_residual", 0.0, tol.eigen, {}};
  for (std::size_t i = 0; i < rep.spectrum.size(); ++i)
    record(eig, rep.eigen_residuals[i], "mu=" + rep.spectrum[i].mu.str());
  rep.suites.push_back(eig);

  rep.suites.push_back(check_commutation(Ls, tol));
  rep.suites.push_back(check_adjointness(R, rep.omegas, Ls, w, tol));

  // Gram matrix ⟨Φ_μ, Φ_μ̃⟩_Δ
  rep.gram = rep.phi * w.delta.asDiagonal() * rep.phi.adjoint();
  SuiteResult orth{"orthogonality", 0.0, tol.orthogonal, {}};
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const Separation s = orthogonality_criterion(R, c, rep.spectrum[static_cast<std::size_t>(i)].mu,
                                                   rep.spectrum[static_cast<std::size_t>(j)].mu, rep.omegas);
      rep.separation.push_back(to_string(s));
      if (s == Separation::none) {
        rep.unseparated.emplace_back(static_cast<int>(i), static_cast<int>(j));
        continue;
      }
      const double scale = std::sqrt(rep.gram(i, i).real() * rep.gram(j, j).real());
      record(orth, std::abs(rep.gram(i, j)) / scale,
             "pair " + rep.spectrum[static_cast<std::size_t>(i)].mu.str() + "," +
                 rep.spectrum[static_cast<std::size_t>(j)].mu.str());
    }
  rep.suites.push_back(orth);

  SuiteResult gaudin{"gaudin", 0.0, tol.gaudin, {}};
  for (Eigen::Index i = 0; i < m; ++i) {
    const GaudinValue g = gaudin_rhs(R, c, tau, rep.spectrum[static_cast<std::size_t>(i)].xi);
    const double ratio = rep.gram(i, i).real() / g.value;
    rep.gaudin_ratios.push_back(ratio);
    record(gaudin, std::abs(ratio - 1.0), "mu=" + rep.spectrum[static_cast<std::size_t>(i)].mu.str());
    if (g.imag_residue > 1e-10 * std::abs(g.value))
      gaudin.failures.push_back("mu=" + rep.spectrum[static_cast<std::size_t>(i)].mu.str() + " complex norm formula");
  }
  rep.suites.push_back(gaudin);

  rep.degenerate0 = degenerate_orthogonality(R, c, 0);
  rep.degenerate1 = degenerate_orthogonality(R, c, 1);
  SuiteResult deg{"degenerate", 0.0, tol.degenerate, {}};
  record(deg, rep.degenerate0.max_residual, "tau->0");
  record(deg, rep.degenerate1.max_residual, "tau->1");
  rep.suites.push_back(deg);

  SuiteResult comp{"completeness", 0.0, tol.rank, {}};
  if (m != nb) {
    comp.failures.push_back("spectrum size " + std::to_string(m) + " differs from |P_c^+| = " + std::to_string(nb));
  } else {
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(rep.phi);
    const Eigen::VectorXd s = svd.singularValues();
    rep.singular_ratio = s(s.size() - 1) / s(0);
    // Stored as a shortfall so that "worst < tolerance" reads as full rank.
    comp.worst = 0.0;
    if (!(rep.singular_ratio > tol.rank)) comp.failures.push_back("rank deficient: " + fmt(rep.singular_ratio));
  }
  rep.suites.push_back(comp);

  rep.suites.push_back(check_poincare(G, tau, tol));
  return rep;
}

}  // namespace alcove
