#include "alcove/hecke_coeff.hpp"

#include <cmath>
#include <stdexcept>

namespace alcove {

TauParams::TauParams(double tau2_short, double tau2_long) : t_short_(tau2_short), t_long_(tau2_long) {
  if (tau2_short == 0.0 || tau2_long == 0.0) throw std::invalid_argument("multiplicity parameters must be nonzero");
}

TauParams TauParams::from_tau(double tau_short, double tau_long) {
  if (tau_short <= 0.0 || tau_long <= 0.0) throw std::invalid_argument("tau must be positive");
  return {tau_short * tau_short, tau_long * tau_long};
}

double TauParams::tau(bool is_long) const {
  const double t = tau2(is_long);
  if (t <= 0.0) throw std::domain_error("odd powers of tau need tau^2 > 0");
  return std::sqrt(t);
}

double TauParams::q(bool is_long) const {
  const double t = tau(is_long);
  return t - 1.0 / t;
}

namespace {

double power(double t2, double root, int e) {
  if (e % 2 == 0) return std::pow(t2, e / 2);
  return std::pow(root, e);
}

}  // namespace

double TauParams::monomial(int es, int el) const {
  double r = 1.0;
  if (es) r *= power(t_short_, es % 2 ? tau(false) : 0.0, es);
  if (el) r *= power(t_long_, el % 2 ? tau(true) : 0.0, el);
  return r;
}

double eval(const TauParams& tau, const TauExponent& e) { return tau.monomial(e.first, e.second); }

TauExponent tau_exponent(const AffineWeyl& G, const AffineWeylElement& w) { return G.inversion_counts(w); }

TauExponent e_tau_exponent(const RootSystem& R, const Coweight& eta) {
  TauExponent e{0, 0};
  for (int i = 0; i < R.num_positive(); ++i) (R.root(i).is_long ? e.second : e.first) += R.pair(eta, i);
  return e;
}

TauExponent e_tau_vee_exponent(const RootSystem& R, const Weight& eta) {
  TauExponent e{0, 0};
  for (int i = 0; i < R.num_positive(); ++i) (R.root(i).is_long ? e.second : e.first) += R.pair(eta, i);
  return e;
}

TauExponent h_tau_exponent(const RootSystem& R) {
  TauExponent e = e_tau_exponent(R, R.root(R.theta_index()).coweight);
  e.first += 2;
  return e;
}

TauExponent h_tau_vee_exponent(const RootSystem& R) {
  TauExponent e = e_tau_vee_exponent(R, R.theta());
  e.first += 2;
  return e;
}

double tau_of(const AffineWeyl& G, const AffineWeylElement& w, const TauParams& tau) {
  return eval(tau, tau_exponent(G, w));
}

double tau_squared_of(const AffineWeyl& G, const AffineWeylElement& w, const TauParams& tau) {
  auto [s, l] = tau_exponent(G, w);
  return tau.monomial(2 * s, 2 * l);
}

std::vector<double> q_values(const AffineWeyl& G, const TauParams& tau) {
  std::vector<double> q;
  for (int j = 0; j <= G.rank(); ++j) q.push_back(tau.q(G.is_long(G.simple_root(j))));
  return q;
}

std::vector<QPoly> q_symbols(const AffineWeyl& G) {
  std::vector<QPoly> q;
  for (int j = 0; j <= G.rank(); ++j) q.push_back(G.is_long(G.simple_root(j)) ? QPoly::q_long() : QPoly::q_short());
  return q;
}

bool in_quasi_minuscule_star(const RootSystem& R, const Weight& nu) {
  if (nu.is_zero()) return false;
  const Weight d = R.dominant(nu);
  if (d == R.theta()) return true;
  for (int k : R.minuscule_indices())
    if (d == R.fundamental_weight(k)) return true;
  return false;
}

namespace {

template <class Scalar>
CoeffTable<Scalar> empty_table(const AffineWeyl& G, const AffineWeylElement& w, const Weight& nu,
                               const std::vector<Weight>& orbit) {
  CoeffTable<Scalar> t;
  t.w = w;
  t.nu = nu;
  t.orbit = orbit;
  for (std::size_t k = 0; k < orbit.size(); ++k) t.orbit_position.emplace(orbit[k], static_cast<int>(k));
  t.interval = G.lower_interval(w);
  for (std::size_t i = 0; i < t.interval.size(); ++i) t.position.emplace(t.interval[i], static_cast<int>(i));
  t.A.assign(t.interval.size(), std::vector<Scalar>(orbit.size(), Scalar(0)));
  t.B.assign(t.interval.size(), Scalar(0));
  return t;
}

}  // namespace

template <class Scalar>
CoeffTable<Scalar> expansion_coefficients(const AffineWeyl& G, const AffineWeylElement& w, const Weight& nu,
                                          const std::vector<Scalar>& q) {
  const RootSystem& R = G.root_system();
  if (!in_quasi_minuscule_star(R, nu)) throw std::invalid_argument("weight " + nu.str() + " is not in P_theta*");
  const std::vector<Weight> orbit = weyl_orbit(R, nu);
  const ReducedWord rw = G.reduced_word(w);
  const std::vector<int> perm = G.omega_permutation(rw.omega);

  CoeffTable<Scalar> table = empty_table<Scalar>(G, rw.omega, nu, orbit);
  table.A[0][static_cast<std::size_t>(table.orbit_index(Weight(Coords(rw.omega.finite * nu.coords))))] = Scalar(1);

  AffineWeylElement current = rw.omega;
  for (std::size_t k = rw.letters.size(); k-- > 0;) {
    const int p = perm[static_cast<std::size_t>(rw.letters[k])];
    const AffineRoot ap = G.simple_root(p);
    const Scalar& qp = q[static_cast<std::size_t>(p)];
    const AffineWeylElement next = G.left_mul(p, current);
    CoeffTable<Scalar> nt = empty_table<Scalar>(G, next, nu, orbit);

    // s'η and ⟨η, α_p∨⟩ per orbit element.
    std::vector<int> pairing(orbit.size()), reflected(orbit.size());
    for (std::size_t e = 0; e < orbit.size(); ++e) {
      pairing[e] = R.pair(orbit[e], ap.root);
      reflected[e] = nt.orbit_index(R.reflect_by_root(orbit[e], ap.root));
    }

    for (std::size_t i = 0; i < nt.interval.size(); ++i) {
      const AffineWeylElement& v = nt.interval[i];
      const AffineWeylElement sv = G.left_mul(p, v);
      const bool descends = !G.is_positive(G.act(G.inverse(v), ap));  // sv < v
      const int i_sv = table.index_of(sv);
      const int i_v = table.index_of(v);
      auto prevA = [&](int idx, std::size_t e) -> Scalar {
        return idx < 0 ? Scalar(0) : table.A[static_cast<std::size_t>(idx)][e];
      };
      auto prevB = [&](int idx) -> Scalar { return idx < 0 ? Scalar(0) : table.B[static_cast<std::size_t>(idx)]; };

      Scalar bsum(0);
      for (std::size_t e = 0; e < orbit.size(); ++e) {
        const std::size_t se = static_cast<std::size_t>(reflected[e]);
        const int pe = pairing[e];
        Scalar val = prevA(i_sv, se);
        if (!descends) {
          if (pe > 0) val += qp * (prevA(i_v, e) - prevA(i_v, se));
        } else {
          val += qp * prevA(i_v, pe >= 0 ? e : se);
        }
        nt.A[i][e] = val;
        if (pe == 2) bsum += prevA(i_v, e) - prevA(i_v, se);
      }
      Scalar bval = qp * bsum + prevB(i_sv);
      if (descends) bval += qp * prevB(i_v);
      nt.B[i] = bval;
    }
    table = std::move(nt);
    current = next;
  }
  return table;
}

template CoeffTable<double> expansion_coefficients<double>(const AffineWeyl&, const AffineWeylElement&,
                                                           const Weight&, const std::vector<double>&);
template CoeffTable<QPoly> expansion_coefficients<QPoly>(const AffineWeyl&, const AffineWeylElement&,
                                                         const Weight&, const std::vector<QPoly>&);

double poincare_direct(const AffineWeyl& G, const Weight& lambda, const TauParams& tau) {
  double s = 0.0;
  for (const auto& w : G.stabilizer(lambda)) s += tau_squared_of(G, w, tau);
  return s;
}

double poincare_product(const AffineWeyl& G, const Weight& lambda, const TauParams& tau) {
  if (!G.in_alcove(lambda)) throw std::invalid_argument("poincare: weight " + lambda.str() + " is not in P_c^+");
  const RootSystem& R = G.root_system();
  const double h = eval(tau, h_tau_exponent(R));
  double prod = 1.0;
  auto factor = [](double t, double x) {
    const double den = 1.0 - x;
    if (std::abs(den) < 1e-14) throw std::domain_error("poincare: product formula has a pole at this tau");
    return (1.0 - t * x) / den;
  };
  for (int i = 0; i < R.num_positive(); ++i) {
    const int p = R.pair(lambda, i);
    if (p != 0 && p != G.c()) continue;
    const double t = tau.tau2(R.root(i).is_long);
    const double e = eval(tau, e_tau_exponent(R, R.root(i).coweight));
    if (p == 0) prod *= factor(t, e);
    if (p == G.c()) prod *= factor(t, h / e);
  }
  return prod;
}

}  // namespace alcove
