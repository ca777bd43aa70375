// Acceptance run: one PASS/FAIL line per criterion. Tolerances are fixed here and nowhere else.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "alcove/bethe.hpp"
#include "alcove/spectral.hpp"
#include "alcove/verification.hpp"
#include "oracles.hpp"
#include "relations.hpp"

using namespace alcove;

namespace {

constexpr double kTolRelations = 1e-12;
constexpr double kTolAppendix = 1e-12;
constexpr double kTolGrad = 1e-12;
constexpr double kTolBae = 1e-9;
constexpr double kTolLimit0 = 1e-4;
constexpr double kTolLimit1 = 1e-2;
constexpr double kTolEigen = 1e-9;
constexpr double kTolCommute = 1e-10;
constexpr double kTolAdjoint = 1e-10;
constexpr double kTolOrthogonal = 1e-8;
constexpr double kTolGaudin = 1e-7;
constexpr double kTolDegenerate = 1e-9;
constexpr double kTolPoincare = 1e-12;

constexpr double kBudgetCountSeconds = 1.0;      // per (R, c)
constexpr double kBudgetOracleSeconds = 120.0;   // all of the Hecke oracle comparison
constexpr double kBudgetBetheSeconds = 60.0;     // per (R, c, τ)
constexpr double kBudgetGaudinSeconds = 600.0;   // all of the norm run

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

const std::vector<std::string> kBetheSystems = {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"};
const std::vector<int> kBetheLevels = {2, 3, 4};
const std::vector<double> kBetheTaus = {0.1, 0.25, 0.5, 0.9};
const std::vector<std::string> kNormSystems = {"A1", "A2", "A3", "A4", "B2", "B3",
                                               "B4", "C3", "C4", "D4", "G2"};

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << title << ": " << o.detail << std::endl;
  if (!o.pass) ++failures;
}

Tolerances pinned() {
  Tolerances t;
  t.grad = kTolGrad;
  t.bae = kTolBae;
  t.eigen = kTolEigen;
  t.commute = kTolCommute;
  t.adjoint = kTolAdjoint;
  t.orthogonal = kTolOrthogonal;
  t.gaudin = kTolGaudin;
  t.degenerate = kTolDegenerate;
  t.poincare = kTolPoincare;
  return t;
}

const SuiteResult& suite(const VerificationReport& r, const std::string& name) {
  for (const auto& s : r.suites)
    if (s.name == name) return s;
  throw std::logic_error("missing suite " + name);
}

std::string where(const std::string& sys, int c, double t2) {
  std::ostringstream s;
  s << sys << " c=" << c << " tau2=" << t2;
  return s.str();
}

// ---------------------------------------------------------------------------------------------

Outcome dimension_identity() {
  Outcome o;
  int cases = 0;
  double slowest = 0.0;
  for (const std::string l : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"}) {
    const RootSystem R = build_root_system(l);
    const std::vector<int> marks = oracle::highest_coroot_marks(R);
    for (int c = 2; c <= 5; ++c) {
      const auto t0 = Clock::now();
      const long n = static_cast<long>(enumerate_alcove_weights(R, c).size());
      const long nv = static_cast<long>(enumerate_alcove_coweights(R, c).size());
      const double dt = seconds_since(t0);
      slowest = std::max(slowest, dt);
      const long gf = oracle::generating_count(marks, c);
      ++cases;
      if (n != gf || n != nv || dt >= kBudgetCountSeconds) {
        o.pass = false;
        o.detail += l + " c=" + std::to_string(c) + " |P|=" + std::to_string(n) + " gf=" + std::to_string(gf) +
                    " |Pv|=" + std::to_string(nv) + "; ";
      }
    }
  }
  o.detail += std::to_string(cases) + " cases, slowest " + sci(slowest) + " s";
  return o;
}

bool same_element(const RootSystem& R, const CoeffTable<QPoly>& t, const oracle::HeckeElement& nf) {
  oracle::HeckeElement e;
  for (std::size_t i = 0; i < t.interval.size(); ++i) {
    for (std::size_t k = 0; k < t.orbit.size(); ++k) oracle::add_term(e, t.orbit[k], t.interval[i], t.A[i][k]);
    oracle::add_term(e, Weight::zero(R.rank()), t.interval[i], t.B[i]);
  }
  if (e.size() != nf.size()) return false;
  for (const auto& [key, v] : nf) {
    auto it = e.find(key);
    if (it == e.end() || it->second != v) return false;
  }
  return true;
}

Outcome hecke_oracle() {
  Outcome o;
  const auto t0 = Clock::now();
  long compared = 0, mismatched = 0;
  for (const std::string l : {"A1", "A2", "B2"}) {
    const RootSystem R = build_root_system(l);
    for (int c : {2, 3}) {
      const AffineWeyl G(R, c);
      const auto elements = oracle::elements_up_to(G, 6);
      for (const Weight& nu : quasi_minuscule_set(R)) {
        if (nu.is_zero()) continue;
        for (const auto& w : elements) {
          ++compared;
          if (!same_element(R, expansion_coefficients<QPoly>(G, w, nu, q_symbols(G)), oracle::normal_form(G, w, nu))) {
            ++mismatched;
            if (mismatched <= 3) o.detail += l + " " + G.render(w) + " nu=" + nu.str() + "; ";
          }
        }
      }
    }
  }
  const double dt = seconds_since(t0);
  o.pass = mismatched == 0 && dt < kBudgetOracleSeconds;
  o.detail += std::to_string(compared) + " tables, " + std::to_string(mismatched) + " mismatches, " + sci(dt) + " s";
  return o;
}

Outcome rank_one_closed_form() {
  Outcome o;
  long compared = 0, mismatched = 0;
  const RootSystem R = build_root_system("A1");
  for (int c : {2, 3}) {
    const AffineWeyl G(R, c);
    const AffineWeylElement s = G.simple_reflection(1);
    for (const auto& w : oracle::elements_up_to(G, 10)) {
      const int lw = G.length(w);
      const int d = G.length(G.multiply(w, s)) - lw;
      const int sign = ((lw + (R.in_root_lattice(w.translation) ? 0 : 1)) % 2 == 0) ? 1 : -1;
      for (int eps : {1, -1}) {
        const auto t = expansion_coefficients<QPoly>(G, w, Weight{eps}, q_symbols(G));
        for (std::size_t i = 0; i < t.interval.size(); ++i) {
          const AffineWeylElement& v = t.interval[i];
          if (!t.B[i].is_zero()) ++mismatched;
          for (std::size_t k = 0; k < t.orbit.size(); ++k) {
            Laurent want;
            if (v == w) {
              if (t.orbit[k] == Weight{eps * sign}) want = 1;
            } else if (t.orbit[k] == Weight{d * sign}) {
              // A(k) = (1−τ²)/(1+τ²)·(τ^{−k} + (−1)^{k+1}τ^k), exact in ℤ[τ^{±1}].
              const int kk = lw - G.length(v);
              const Laurent num = (Laurent(1) - Laurent::monomial(2)) *
                                  (Laurent::monomial(-kk) + Laurent::monomial(kk, kk % 2 ? 1 : -1));
              want = num.divide_exact(Laurent(1) + Laurent::monomial(2)) * Laurent(eps * d);
            }
            ++compared;
            if (!(to_laurent_equal_labels(t.A[i][k]) == want)) ++mismatched;
          }
        }
      }
    }
  }
  o.pass = mismatched == 0;
  o.detail = std::to_string(compared) + " coefficients up to length 10, " + std::to_string(mismatched) + " mismatches";
  return o;
}

Outcome representation_relations() {
  Outcome o;
  const int c = 2;
  const TauParams tau(0.3, 0.55);
  double worst = 0.0;
  long checks = 0;
  for (const std::string l : {"A1", "A2", "B2", "G2"}) {
    const RootSystem R = build_root_system(l);
    const AffineWeyl G(R, c);
    relations::Harness h(G, tau);
    relations::Worst rel, ita, itb, itc;
    for (const Weight& lam : ball_window(R, 3.0 * c)) {
      h.hecke_relations(lam, 100, rel);
      h.intertwining(lam, 100, ita, itb, itc);
    }
    const double w = std::max({rel.value, ita.value, itb.value, itc.value});
    worst = std::max(worst, w);
    checks += rel.checks + ita.checks + itb.checks + itc.checks;
    o.detail += l + " " + sci(w) + "; ";
  }
  o.pass = worst < kTolRelations;
  o.detail += std::to_string(checks) + " identities x 100 functions, worst relative " + sci(worst) + " (tol " +
              sci(kTolRelations) + ")";
  return o;
}

Outcome appendix_identities() {
  Outcome o;
  double worst_prop = 0.0, worst_prop_abs = 0.0, worst_sym = 0.0;
  long checks = 0;
  for (const std::string l : {"A1", "A2", "B2"}) {
    const RootSystem R = build_root_system(l);
    for (int c : {2, 3}) {
      const AffineWeyl G(R, c);
      relations::Harness h(G, TauParams(0.4, 0.7));
      relations::Worst prop, sym;
      for (const Weight& lam : ball_window(R, 2.0 * c)) {
        h.intertwining_property(lam, prop);
        h.symmetry_relation(lam, sym);
      }
      worst_prop = std::max(worst_prop, prop.value);
      worst_prop_abs = std::max(worst_prop_abs, prop.absolute);
      worst_sym = std::max(worst_sym, sym.value);
      checks += prop.checks + sym.checks;
    }
  }
  o.pass = worst_prop < kTolAppendix && worst_sym < kTolAppendix;
  o.detail = std::to_string(checks) + " (lambda, nu) pairs; intertwining property " + sci(worst_prop) +
             " relative (" + sci(worst_prop_abs) + " absolute), tau symmetry " + sci(worst_sym) + " (tol " + sci(kTolAppendix) + ")";
  return o;
}

Outcome bethe_certification() {
  Outcome o;
  double worst_grad = 0.0, worst_bae = 0.0, slowest = 0.0;
  long points = 0;
  SolverOptions opt;
  opt.tol_grad = kTolGrad;
  for (const auto& l : kBetheSystems) {
    const RootSystem R = build_root_system(l);
    for (int c : kBetheLevels)
      for (double t2 : kBetheTaus) {
        const auto t0 = Clock::now();
        const auto pts = compute_spectrum(R, c, TauParams(t2, t2), opt, jobs());
        const double dt = seconds_since(t0);
        slowest = std::max(slowest, dt);
        if (dt >= kBudgetBetheSeconds) {
          o.pass = false;
          o.detail += where(l, c, t2) + " took " + sci(dt) + " s; ";
        }
        for (const auto& p : pts) {
          ++points;
          worst_grad = std::max(worst_grad, p.grad_norm);
          worst_bae = std::max(worst_bae, p.bae_residual);
          if (!(p.grad_norm <= kTolGrad && p.bae_residual <= kTolBae && p.in_alcove && p.moment_gap_ok &&
                p.hessian_positive)) {
            o.pass = false;
            o.detail += where(l, c, t2) + " mu=" + p.mu.str() + "; ";
          }
        }
      }
  }
  o.detail += std::to_string(points) + " points, gradient " + sci(worst_grad) + ", BAE " + sci(worst_bae) +
              ", slowest case " + sci(slowest) + " s";
  return o;
}

Outcome limits() {
  Outcome o;
  double worst0 = 0.0, worst1 = 0.0;
  long n0 = 0, n1 = 0;
  SolverOptions opt;
  opt.tol_grad = kTolGrad;
  for (const auto& l : kBetheSystems) {
    const RootSystem R = build_root_system(l);
    for (int c : kBetheLevels)
      for (const Coweight& mu : enumerate_alcove_coweights(R, c)) {
        const SpectralPoint s = solve_bethe(MorseProblem{&R, c, TauParams(1e-6, 1e-6), mu}, opt);
        worst0 = std::max(worst0, (s.xi - seed_tau0(R, c, mu)).norm());
        ++n0;
      }
    // Regular labels are rare at small level, so the τ → 1 side also runs up to c = 6.
    for (int c = 2; c <= 6; ++c)
      for (const Coweight& mu : enumerate_alcove_coweights(R, c)) {
        if (!is_regular_label(R, c, mu)) continue;
        const SpectralPoint s =
            solve_bethe_continuation(MorseProblem{&R, c, TauParams(1 - 1e-6, 1 - 1e-6), mu}, 40, opt);
        worst1 = std::max(worst1, (s.xi - seed_tau1(R, c, mu)).norm());
        ++n1;
      }
  }
  o.pass = worst0 <= kTolLimit0 && worst1 <= kTolLimit1 && n1 > 0;
  o.detail = "tau2=1e-6: " + std::to_string(n0) + " points, max distance " + sci(worst0) + " (tol " + sci(kTolLimit0) +
             "); tau2=1-1e-6: " + std::to_string(n1) + " regular points, max distance " + sci(worst1) + " (tol " +
             sci(kTolLimit1) + ")";
  return o;
}

// One verification run per case, shared by the criteria that read its suites.
struct Run {
  std::string where;
  VerificationReport report;
};

std::vector<Run> run_grid(const std::vector<std::string>& systems, const std::vector<int>& levels,
                          const std::vector<double>& taus) {
  std::vector<Run> out;
  for (const auto& l : systems) {
    const RootSystem R = build_root_system(l);
    for (int c : levels)
      for (double t2 : taus) out.push_back({where(l, c, t2), verify_all(R, c, TauParams(t2, t2), pinned(), jobs())});
  }
  return out;
}

Outcome suite_outcome(const std::vector<Run>& runs, const std::vector<std::string>& names, double tol) {
  Outcome o;
  double worst = 0.0;
  for (const auto& r : runs)
    for (const auto& n : names) {
      const SuiteResult& s = suite(r.report, n);
      worst = std::max(worst, s.worst);
      if (!(s.failures.empty() && s.worst <= tol)) {
        o.pass = false;
        o.detail += r.where + " " + n + " " + sci(s.worst) + "; ";
      }
    }
  o.detail += std::to_string(runs.size()) + " cases, worst " + sci(worst) + " (tol " + sci(tol) + ")";
  return o;
}

Outcome diagonalization(const std::vector<Run>& runs) {
  Outcome e = suite_outcome(runs, {"eigen_residual"}, kTolEigen);
  Outcome m = suite_outcome(runs, {"commutation"}, kTolCommute);
  return {e.pass && m.pass, "eigen-residual: " + e.detail + "; commutation: " + m.detail};
}

Outcome orthogonality(const std::vector<Run>& runs) {
  Outcome o = suite_outcome(runs, {"orthogonality"}, kTolOrthogonal);
  std::size_t pairs = 0, unseparated = 0;
  for (const auto& r : runs) {
    pairs += r.report.separation.size();
    unseparated += r.report.unseparated.size();
    for (const auto& [i, j] : r.report.unseparated)
      o.detail += "; unseparated " + r.where + " " + r.report.spectrum[static_cast<std::size_t>(i)].mu.str() + "," +
                  r.report.spectrum[static_cast<std::size_t>(j)].mu.str();
  }
  o.detail += "; " + std::to_string(pairs) + " pairs, " + std::to_string(unseparated) + " not separated";
  return o;
}

Outcome timed(Outcome o, double seconds, double budget) {
  o.detail += ", " + sci(seconds) + " s";
  if (seconds >= budget) {
    o.pass = false;
    o.detail += " over budget";
  }
  return o;
}

}  // namespace

int main() {
  std::cout << "acceptance run, " << jobs() << " threads" << std::endl;
  report(1, "alcove dimension identity", dimension_identity());
  report(2, "multiplication recurrence vs normal-form product", hecke_oracle());
  report(3, "rank-one closed form", rank_one_closed_form());
  report(4, "Hecke relations and intertwining on random functions", representation_relations());
  report(5, "intertwining property and tau symmetry", appendix_identities());
  report(6, "Bethe certification", bethe_certification());
  report(7, "tau limits of the spectrum", limits());

  const std::vector<Run> grid = run_grid(kBetheSystems, kBetheLevels, kBetheTaus);
  report(8, "diagonalization and commutation", diagonalization(grid));
  report(9, "adjointness", suite_outcome(grid, {"adjointness"}, kTolAdjoint));
  report(10, "orthogonality", orthogonality(grid));

  const auto t0 = Clock::now();
  const std::vector<Run> norms = run_grid(kNormSystems, {2, 3}, {0.25, 0.5});
  const double norm_seconds = seconds_since(t0);
  report(11, "quadratic norm formula", timed(suite_outcome(norms, {"gaudin"}, kTolGaudin), norm_seconds,
                                             kBudgetGaudinSeconds));
  report(12, "degenerate orthogonality", suite_outcome(norms, {"degenerate"}, kTolDegenerate));
  report(13, "Poincare product formula", suite_outcome(grid, {"poincare"}, kTolPoincare));

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
