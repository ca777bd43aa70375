#include <doctest.h>

#include <cmath>

#include "oracles.hpp"

using namespace alcove;

namespace {

oracle::HeckeElement as_element(const RootSystem& R, const CoeffTable<QPoly>& t) {
  oracle::HeckeElement e;
  for (std::size_t i = 0; i < t.interval.size(); ++i) {
    for (std::size_t k = 0; k < t.orbit.size(); ++k) oracle::add_term(e, t.orbit[k], t.interval[i], t.A[i][k]);
    oracle::add_term(e, Weight::zero(R.rank()), t.interval[i], t.B[i]);
  }
  return e;
}

bool same(const oracle::HeckeElement& a, const oracle::HeckeElement& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || it->second != v) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("qpoly arithmetic") {
  const QPoly q = QPoly::q_short();
  const QPoly p = (q + 1) * (q - 1);
  CHECK(p == q * q - 1);
  CHECK(p.coeff(2, 0) == 1);
  CHECK(p.coeff(0, 0) == -1);
  CHECK((p - p).is_zero());
  CHECK(p.evaluate(3.0, 0.0) == doctest::Approx(8.0));
  const Laurent t = Laurent::tau();
  CHECK((t * t - 1).divide_exact(t - 1) == t + 1);
  CHECK_THROWS_AS((t * t + 1).divide_exact(t - 1), std::domain_error);
}

TEST_CASE("recurrence agrees with the normal-form product on small elements") {
  for (const std::string l : {"A1", "A2", "B2", "G2"}) {
    const RootSystem R = build_root_system(l);
    const AffineWeyl G(R, 2);
    for (const Weight& nu : quasi_minuscule_set(R)) {
      if (nu.is_zero()) continue;
      for (const auto& w : oracle::elements_up_to(G, 3)) {
        CAPTURE(l);
        CHECK(same(as_element(R, expansion_coefficients<QPoly>(G, w, nu, q_symbols(G))),
                   oracle::normal_form(G, w, nu)));
      }
    }
  }
}

TEST_CASE("leading coefficient and minuscule B vanish") {
  const RootSystem R = build_root_system("A2");
  const AffineWeyl G(R, 3);
  const Weight nu = R.fundamental_weight(1);
  for (const auto& w : oracle::elements_up_to(G, 4)) {
    const auto t = expansion_coefficients<QPoly>(G, w, nu, q_symbols(G));
    CHECK(t.a(w, Weight(Coords(w.finite * nu.coords))) == QPoly(1));
    for (const auto& b : t.B) CHECK(b.is_zero());
  }
}

TEST_CASE("numeric coefficients are the polynomials evaluated at q") {
  const RootSystem R = build_root_system("B2");
  const AffineWeyl G(R, 2);
  const TauParams tau(0.3, 0.6);
  const double qs = tau.q(false), ql = tau.q(true);
  for (const auto& w : oracle::elements_up_to(G, 4)) {
    const auto ex = expansion_coefficients<QPoly>(G, w, R.theta(), q_symbols(G));
    const auto nm = expansion_coefficients(G, w, R.theta(), tau);
    for (std::size_t i = 0; i < ex.interval.size(); ++i) {
      CHECK(nm.B[i] == doctest::Approx(ex.B[i].evaluate(qs, ql)).epsilon(1e-12));
      for (std::size_t k = 0; k < ex.orbit.size(); ++k)
        CHECK(nm.A[i][k] == doctest::Approx(ex.A[i][k].evaluate(qs, ql)).epsilon(1e-12));
    }
  }
}

TEST_CASE("omega invariance of the coefficients") {
  const RootSystem R = build_root_system("A2");
  const AffineWeyl G(R, 2);
  const Weight nu = R.theta();
  for (const auto& u : G.omega_group()) {
    for (const auto& w : oracle::elements_up_to(G, 3)) {
      const auto t = expansion_coefficients<QPoly>(G, w, nu, q_symbols(G));
      const auto tu = expansion_coefficients<QPoly>(G, G.multiply(u, w), nu, q_symbols(G));
      for (std::size_t i = 0; i < t.interval.size(); ++i) {
        const auto uv = G.multiply(u, t.interval[i]);
        CHECK(tu.b(uv) == t.B[i]);
        for (std::size_t k = 0; k < t.orbit.size(); ++k)
          CHECK(tu.a(uv, Weight(Coords(u.finite * t.orbit[k].coords))) == t.A[i][k]);
      }
    }
  }
}

TEST_CASE("weights outside the star are rejected") {
  const RootSystem R = build_root_system("A2");
  const AffineWeyl G(R, 2);
  CHECK_THROWS_AS(expansion_coefficients(G, G.identity(), Weight{2, 0}, TauParams(0.5, 0.5)), std::invalid_argument);
  CHECK_FALSE(in_quasi_minuscule_star(R, Weight::zero(2)));
}

TEST_CASE("poincare polynomial: direct sum equals product formula") {
  for (const std::string l : {"A1", "A2", "B2", "G2", "C3"}) {
    const RootSystem R = build_root_system(l);
    for (int c : {2, 3}) {
      const AffineWeyl G(R, c);
      const TauParams tau(0.35, 0.6);
      for (const Weight& lam : enumerate_alcove_weights(R, c)) {
        CAPTURE(l);
        const double d = poincare_direct(G, lam, tau);
        CHECK(std::abs(d - poincare_product(G, lam, tau)) < 1e-12 * d);
      }
    }
  }
  // Interior point: trivial stabilizer.
  const RootSystem R = build_root_system("A1");
  const AffineWeyl G(R, 2);
  CHECK(poincare_direct(G, Weight{1}, TauParams(0.5, 0.5)) == doctest::Approx(1.0));
  CHECK(poincare_direct(G, Weight{0}, TauParams(0.5, 0.5)) == doctest::Approx(1.5));
}
