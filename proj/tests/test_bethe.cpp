#include <doctest.h>

#include <cmath>
#include <complex>

#include "alcove/bethe.hpp"
#include "alcove/dilog.hpp"
#include "oracles.hpp"

using namespace alcove;

namespace {

constexpr double kPi = 3.14159265358979323846;

Eigen::MatrixXd coweight_gram(const RootSystem& R) {
  return R.coweight_gram().unaryExpr([](const Rational& r) { return r.to_double(); });
}

}  // namespace

TEST_CASE("dilogarithm against its power series") {
  double worst = 0.0;
  for (double r : {0.1, 0.5, 0.8})
    for (double phi = -3.0; phi < 3.2; phi += 0.4) {
      const std::complex<double> z = std::polar(r, phi);
      std::complex<double> s = 0, zk = 1;
      for (int k = 1; k < 400; ++k) {
        zk *= z;
        s += zk / static_cast<double>(k * k);
      }
      worst = std::max(worst, std::abs(s - dilog(z)));
    }
  CHECK(worst < 1e-13);
  CHECK(dilog(1.0).real() == doctest::Approx(kPi * kPi / 6).epsilon(1e-14));
  CHECK(dilog(-1.0).real() == doctest::Approx(-kPi * kPi / 12).epsilon(1e-14));
}

TEST_CASE("v, its derivative and antiderivative are consistent") {
  for (double t : {-0.6, 0.1, 0.5, 0.95})
    for (double x = -8.0; x < 8.0; x += 0.7) {
      const double h = 1e-5;
      CHECK((v_function(t, x + h) - v_function(t, x - h)) / (2 * h) ==
            doctest::Approx(v_derivative(t, x)).epsilon(1e-7));
      CHECK((v_antiderivative(t, x + h) - v_antiderivative(t, x - h)) / (2 * h) ==
            doctest::Approx(v_function(t, x)).epsilon(1e-7));
      // Quasi-periodicity and oddness.
      CHECK(v_function(t, x + 2 * kPi) == doctest::Approx(v_function(t, x) + 2 * kPi).epsilon(1e-12));
      CHECK(v_function(t, -x) == doctest::Approx(-v_function(t, x)).epsilon(1e-12));
    }
  CHECK(v_function(0.0, 1.3) == doctest::Approx(1.3));
}

TEST_CASE("gradient and hessian match finite differences of the morse function") {
  for (const std::string l : {"A2", "B2", "G2", "C3"}) {
    CAPTURE(l);
    const RootSystem R = build_root_system(l);
    const MorseProblem p{&R, 3, TauParams(0.3, 0.6), enumerate_alcove_coweights(R, 3).back()};
    const Eigen::VectorXd x = seed_tau0(R, 3, p.mu) + Eigen::VectorXd::Constant(R.rank(), 0.05);
    const Eigen::MatrixXd Gw = coweight_gram(R);
    const Eigen::VectorXd grad = Gw * morse_gradient(p, x);
    const double h = 1e-5;
    Eigen::MatrixXd fd_hess(R.rank(), R.rank());
    for (int k = 0; k < R.rank(); ++k) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(R.rank());
      e(k) = h;
      CHECK((morse_value(p, x + e) - morse_value(p, x - e)) / (2 * h) == doctest::Approx(grad(k)).epsilon(1e-6));
      fd_hess.col(k) = (Gw * morse_gradient(p, x + e) - Gw * morse_gradient(p, x - e)) / (2 * h);
    }
    const Eigen::MatrixXd H = hessian_form(p, x);
    CHECK((H - fd_hess).norm() < 1e-6 * H.norm());
    CHECK((H - H.transpose()).norm() < 1e-12 * H.norm());
    CHECK(hessian(p, x).determinant() == doctest::Approx(H.determinant() / Gw.determinant()).epsilon(1e-10));
  }
}

TEST_CASE("rank one spectrum at c = 2") {
  const RootSystem R = build_root_system("A1");
  const TauParams tau(0.25, 0.25);
  std::vector<double> xs;
  for (const Coweight& mu : enumerate_alcove_coweights(R, 2)) {
    const SpectralPoint s = solve_bethe(MorseProblem{&R, 2, tau, mu});
    CHECK(s.in_alcove);
    CHECK(s.moment_gap_ok);
    CHECK(s.grad_norm < 1e-12);
    xs.push_back(s.xi(0));
  }
  REQUIRE(xs.size() == 3);
  CHECK(xs[1] == doctest::Approx(kPi).epsilon(1e-14));  // μ = ω∨ sits at the symmetric point
  CHECK(xs[0] + xs[2] == doctest::Approx(2 * kPi).epsilon(1e-13));
  // Hessian at ξ = π: c + 2 v'(π) with v'(π) = (1 − t)/(1 + t).
  const SpectralPoint mid = solve_bethe(MorseProblem{&R, 2, tau, Coweight{1}});
  CHECK(mid.hessian_det == doctest::Approx(3.2).epsilon(1e-12));
}

TEST_CASE("kappa closed form in rank one") {
  const RootSystem R = build_root_system("A1");
  for (double t : {0.2, 0.7, -0.4}) {
    const auto [kp, km] = kappa(R, TauParams(t, t));
    const double a = std::abs(t);
    CHECK(kp == doctest::Approx(2 * (1 - t * t) / ((1 + a) * (1 + a))));
    CHECK(km == doctest::Approx(2 * (1 - t * t) / ((1 - a) * (1 - a))));
  }
}

TEST_CASE("solver certifies every point and never repeats a root") {
  for (const std::string l : {"A2", "B3", "G2", "D4"}) {
    const RootSystem R = build_root_system(l);
    for (double t2 : {0.1, 0.9, -0.5}) {
      std::vector<Eigen::VectorXd> seen;
      for (const Coweight& mu : enumerate_alcove_coweights(R, 3)) {
        CAPTURE(l);
        CAPTURE(t2);
        const SpectralPoint s = solve_bethe(MorseProblem{&R, 3, TauParams(t2, t2), mu});
        CHECK(s.grad_norm <= 1e-12);
        CHECK(s.bae_residual <= 1e-9);
        CHECK(s.in_alcove);
        CHECK(s.moment_gap_ok);
        CHECK(s.hessian_positive);
        for (const auto& x : seen) CHECK((x - s.xi).norm() > 1e-6);
        seen.push_back(s.xi);
      }
    }
  }
}

TEST_CASE("limits in tau") {
  const RootSystem R = build_root_system("A2");
  for (const Coweight& mu : enumerate_alcove_coweights(R, 4)) {
    const SpectralPoint s = solve_bethe(MorseProblem{&R, 4, TauParams(1e-6, 1e-6), mu});
    CHECK((s.xi - seed_tau0(R, 4, mu)).norm() < 1e-4);
  }
  // μ = (1,1) at c = 3 has ⟨ρ∨+μ, α⟩ ∈ {2, 4} modulo 6: regular.
  const Coweight mu{1, 1};
  REQUIRE(is_regular_label(R, 3, mu));
  const SpectralPoint s = solve_bethe_continuation(MorseProblem{&R, 3, TauParams(1 - 1e-6, 1 - 1e-6), mu}, 40);
  CHECK((s.xi - seed_tau1(R, 3, mu)).norm() < 1e-2);
}

TEST_CASE("regime and input checks") {
  const RootSystem R = build_root_system("A1");
  CHECK_THROWS_AS(solve_bethe(MorseProblem{&R, 2, TauParams(1.0, 1.0), Coweight{0}}), std::domain_error);
  CHECK_THROWS_AS(solve_bethe(MorseProblem{&R, 2, TauParams(-1.5, -1.5), Coweight{0}}), std::domain_error);
  CHECK_THROWS_AS(bae_residual(R, 2, TauParams(0.5, 0.5), Eigen::VectorXd::Zero(1)), std::domain_error);
  SolverOptions tight;
  tight.max_iterations = 0;
  tight.tol_grad = 1e-300;
  CHECK_THROWS_AS(solve_bethe(MorseProblem{&R, 2, TauParams(0.5, 0.5), Coweight{0}}, tight), NonConvergence);
}

TEST_CASE("dot action of simple reflections") {
  const RootSystem R = build_root_system("B2");
  const Coweight mu{1, 0};
  for (int k = 1; k <= 2; ++k) CHECK(dot_reflect(R, dot_reflect(R, mu, k), k) == mu);
  CHECK(dot_reflect(R, Coweight{0, 0}, 1) == Coweight{-2, 1});  // s₁(ρ∨) − ρ∨ = −α₁∨
}
