#include <doctest.h>

#include <cmath>

#include "alcove/bethe.hpp"
#include "alcove/spectral.hpp"
#include "alcove/verification.hpp"
#include "oracles.hpp"

using namespace alcove;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("rank one norm at the symmetric point by hand") {
  // A₁, c = 2, μ = ω∨, τ² = 1/4: ξ = π, C(±ξ) = (1+τ²)/2, Φ = (5/4)(1, 0, −1),
  // Δ = (4/5, 1, 4/5), so ⟨Φ,Φ⟩_Δ = 5/2 = Ind·C(ξ)C(−ξ)·det ℋ = 2·(25/64)·(16/5).
  const RootSystem R = build_root_system("A1");
  const TauParams tau(0.25, 0.25);
  const AffineWeyl G(R, 2);
  const Eigen::VectorXd xi = Eigen::VectorXd::Constant(1, kPi);
  const SphericalFunction f = spherical_function(R, 2, tau, xi);
  REQUIRE(f.values.size() == 3);
  CHECK(std::abs(f.values(0) - 1.25) < 1e-14);
  CHECK(std::abs(f.values(1)) < 1e-14);
  CHECK(std::abs(f.values(2) + 1.25) < 1e-14);
  const InnerProductWeights w = delta_weights(G, tau);
  CHECK(w.delta(0) == doctest::Approx(0.8));
  CHECK(w.delta(1) == doctest::Approx(1.0));
  CHECK(inner_product(f.values, f.values, w).real() == doctest::Approx(2.5).epsilon(1e-14));
  const GaudinValue g = gaudin_rhs(R, 2, tau, xi);
  CHECK(g.value == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(g.hessian_det == doctest::Approx(3.2).epsilon(1e-14));
  CHECK(std::abs(g.c_plus - 0.625) < 1e-14);
}

TEST_CASE("spherical function is an eigenfunction of the pointwise operator") {
  // Extends Φ to all of P by W_R-invariance and applies L_ω through the lattice operators,
  // bypassing the assembled matrix.
  for (const std::string l : {"A1", "A2", "B2"}) {
    const RootSystem R = build_root_system(l);
    const int c = 3;
    const AffineWeyl G(R, c);
    const TauParams tau(0.25, 0.5);
    const LatticeOperators ops(G, tau);
    for (const Coweight& mu : enumerate_alcove_coweights(R, c)) {
      const SpectralPoint s = solve_bethe(MorseProblem{&R, c, tau, mu});
      auto phi = [&](const Weight& x) { return spherical_value(R, tau, s.xi, G.minimal_rep(x).dominant); };
      for (const Weight& om : laplacian_labels(R)) {
        const Complex E = eigenvalue(R, om, s.xi);
        for (const Weight& lam : enumerate_alcove_weights(R, c)) {
          CAPTURE(l);
          const Complex lhs = ops.laplacian<Complex>(om, phi, lam);
          CHECK(std::abs(lhs - E * phi(lam)) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("c-function rejects walls") {
  const RootSystem R = build_root_system("A2");
  CHECK_THROWS(c_function(R, TauParams(0.5, 0.5), Eigen::VectorXd::Zero(2)));
  CHECK_NOTHROW(c_function(R, TauParams(0.5, 0.5), Eigen::VectorXd::Constant(2, 1.0)));
}

TEST_CASE("stabilizer sizes") {
  const RootSystem R = build_root_system("A1");
  CHECK(stabilizer_size(R, 2, Weight{0}) == 2);
  CHECK(stabilizer_size(R, 2, Weight{1}) == 1);
  CHECK(stabilizer_size(R, 2, Weight{2}) == 2);
  CHECK(coweight_stabilizer_size(R, 2, Coweight{1}) == 1);
  const RootSystem A2 = build_root_system("A2");
  CHECK(stabilizer_size(A2, 3, Weight{0, 0}) == 6);
  CHECK(stabilizer_size(A2, 3, Weight{1, 1}) == 1);
}

TEST_CASE("degenerate orthogonality in rank one") {
  const RootSystem R = build_root_system("A1");
  // τ = 1, c = 2, μ = 0: Σ_λ |M_λ|² / |W_{R,λ}| = 4/2 + 4/1 + 4/2 = 8 = c·Ind·|W_{R̂,μ}|.
  const DegenerateReport d1 = degenerate_orthogonality(R, 2, 1);
  REQUIRE(d1.labels.front() == Coweight{0});
  CHECK(d1.rhs(0, 0) == doctest::Approx(8.0));
  CHECK(std::abs(d1.lhs(0, 0) - 8.0) < 1e-12);
  CHECK(d1.max_residual < 1e-9);
  // τ = 0: (c+h)^n·Ind = 4·2 on the diagonal.
  const DegenerateReport d0 = degenerate_orthogonality(R, 2, 0);
  CHECK(d0.rhs(0, 0) == doctest::Approx(8.0));
  CHECK(d0.max_residual < 1e-9);
}

TEST_CASE("limit points") {
  const RootSystem R = build_root_system("B2");
  const Coweight mu{1, 0};
  CHECK((limit_point(R, 3, mu, 0) - seed_tau0(R, 3, mu)).norm() < 1e-15);
  CHECK((limit_point(R, 3, mu, 1) - seed_tau1(R, 3, mu)).norm() < 1e-15);
}

TEST_CASE("full verification passes on small systems") {
  for (const std::string l : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(l);
    const RootSystem R = build_root_system(l);
    const VerificationReport rep = verify_all(R, 3, TauParams(0.25, 0.5));
    for (const auto& s : rep.suites) {
      CAPTURE(s.name);
      CHECK(s.passed());
    }
    CHECK(rep.unseparated.empty());
  }
}

TEST_CASE("zero tolerance fails the suite") {
  const RootSystem R = build_root_system("A1");
  Tolerances tol;
  tol.eigen = 0.0;
  const VerificationReport rep = verify_all(R, 3, TauParams(0.25, 0.25), tol);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("parallel spectrum equals the serial one") {
  const RootSystem R = build_root_system("B3");
  const TauParams tau(0.5, 0.3);
  const auto a = compute_spectrum(R, 3, tau, {}, 1);
  const auto b = compute_spectrum(R, 3, tau, {}, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].mu == b[i].mu);
    CHECK((a[i].xi - b[i].xi).norm() == 0.0);
  }
  const auto q = compute_spectrum(R, 3, tau, {}, 2, true);
  for (const auto& p : q) CHECK(R.in_coroot_lattice(p.mu));
  CHECK(q.size() < a.size());
}
