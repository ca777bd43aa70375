#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "alcove/verification.hpp"

namespace alcove::cli {

using json = nlohmann::ordered_json;

namespace {

RootSystem make_system(const RunConfig& cfg) {
  try {
    if (cfg.type.size() > 1) return build_root_system(cfg.type);
    if (cfg.type.empty()) throw std::invalid_argument("empty type");
    return RootSystem(cfg.type[0], cfg.rank);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

TauParams make_tau(const RunConfig& cfg) { return TauParams(cfg.tau_s, cfg.tau_l.value_or(cfg.tau_s)); }

std::vector<int> parse_ints(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + s);
    }
  }
  return out;
}

std::string csv_complex(Complex z) {
  std::ostringstream s;
  s << std::setprecision(15) << z.real() << (z.imag() < 0 || std::signbit(z.imag()) ? "-" : "+")
    << std::abs(z.imag()) << "i";
  return s.str();
}

std::string csv_double(double x) {
  std::ostringstream s;
  s << std::setprecision(15) << x;
  return s.str();
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

template <class Tag>
json to_json(const LatticePoint<Tag>& p) {
  return std::vector<int>(p.coords.data(), p.coords.data() + p.coords.size());
}

json to_json(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

json to_json(const SpectralPoint& p) {
  return {{"mu", to_json(p.mu)},
          {"xi", to_json(p.xi)},
          {"iterations", p.iterations},
          {"grad_norm", p.grad_norm},
          {"hessian_det", p.hessian_det},
          {"hessian_condition", p.hessian_condition},
          {"bae_residual", p.bae_residual},
          {"in_alcove", p.in_alcove},
          {"moment_gap_ok", p.moment_gap_ok}};
}

std::string join(const Eigen::VectorXd& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? " " : "") + csv_double(v(i));
  return s;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

Weight select_omega(const RootSystem& R, const std::string& sel) {
  if (sel == "quasiminuscule" || sel == "theta") return R.theta();
  const std::vector<int> k = parse_ints(sel);
  const std::vector<int> mins = R.minuscule_indices();
  if (k.size() != 1 || std::find(mins.begin(), mins.end(), k[0]) == mins.end())
    throw UsageError("omega must be 'quasiminuscule' or the index of a minuscule fundamental weight");
  return R.fundamental_weight(k[0]);
}

std::vector<SpectralPoint> solve_all(const RootSystem& R, const RunConfig& cfg) {
  const TauParams tau = make_tau(cfg);
  SolverOptions opt;
  if (cfg.tol_grad > 0.0) opt.tol_grad = cfg.tol_grad;
  const double top = std::max(std::abs(tau.tau2_short()), std::abs(tau.tau2_long()));
  if (top <= 0.99) return compute_spectrum(R, cfg.c, tau, opt, cfg.jobs, cfg.q_vee);
  std::vector<SpectralPoint> out;
  for (const Coweight& mu : enumerate_alcove_coweights(R, cfg.c))
    if (!cfg.q_vee || R.in_coroot_lattice(mu))
      out.push_back(solve_bethe_continuation(MorseProblem{&R, cfg.c, tau, mu}, 40, opt));
  return out;
}

std::vector<SpectralPoint> read_spectrum(const RootSystem& R, const RunConfig& cfg) {
  std::ifstream in(cfg.spectrum_in);
  if (!in) throw UsageError("cannot read " + cfg.spectrum_in);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad spectrum file: ") + e.what());
  }
  SolverOptions opt;
  if (cfg.tol_grad > 0.0) opt.tol_grad = cfg.tol_grad;
  std::vector<SpectralPoint> out;
  for (const json& e : j) {
    const std::vector<int> mu = e.at("mu").get<std::vector<int>>();
    const std::vector<double> xi = e.at("xi").get<std::vector<double>>();
    if (static_cast<int>(mu.size()) != R.rank() || static_cast<int>(xi.size()) != R.rank())
      throw UsageError("spectrum file does not match the root system");
    Coords m(R.rank());
    for (int k = 0; k < R.rank(); ++k) m(k) = mu[static_cast<std::size_t>(k)];
    // Re-certify from the stored point; a converged point costs no iterations.
    out.push_back(solve_bethe(MorseProblem{&R, cfg.c, make_tau(cfg), Coweight(m)},
                              Eigen::Map<const Eigen::VectorXd>(xi.data(), R.rank()), opt));
  }
  return out;
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.c < 2) throw UsageError("c must be at least 2");
  if (cfg.jobs < 1) throw UsageError("jobs must be positive");
  if (cfg.format != "json" && cfg.format != "csv") throw UsageError("format must be json or csv");
  for (double t : {cfg.tau_s, cfg.tau_l.value_or(cfg.tau_s)}) {
    if (!(std::abs(t) < 1.0) || t == 0.0) throw UsageError("tau^2 must lie in (-1,1) and be nonzero");
    if (t < 0.0 && !cfg.allow_negative_tau) throw UsageError("negative tau^2 needs --allow-negative-tau");
  }
}

int cmd_describe(const RunConfig& cfg, std::ostream& out) {
  const RootSystem R = make_system(cfg);
  const int n = R.rank();
  json cartan = json::array(), gram = json::array(), roots = json::array();
  for (int i = 0; i < n; ++i) {
    json crow = json::array(), grow = json::array();
    for (int j = 0; j < n; ++j) {
      crow.push_back(R.cartan()(i, j));
      grow.push_back(R.gram()(i, j).str());
    }
    cartan.push_back(crow);
    gram.push_back(grow);
  }
  for (int i = 0; i < R.num_positive(); ++i) {
    const Root& a = R.root(i);
    roots.push_back({{"simple", std::vector<int>(a.simple.data(), a.simple.data() + n)},
                     {"coroot", std::vector<int>(a.coroot.data(), a.coroot.data() + n)},
                     {"long", a.is_long},
                     {"height", a.height}});
  }
  json simple = json::array();
  for (const auto& v : R.simple_roots_cartesian()) {
    json row = json::array();
    for (const Rational& x : v) row.push_back(x.str());
    simple.push_back(row);
  }
  const std::size_t pc = enumerate_alcove_weights(R, cfg.c).size();
  const std::size_t pcv = enumerate_alcove_coweights(R, cfg.c).size();
  const std::vector<int> marks(R.marks().data(), R.marks().data() + n);
  const std::vector<int> comarks(R.comarks().data(), R.comarks().data() + n);
  if (cfg.format == "csv") {
    out << "key,value\n"
        << "label," << R.label() << "\nrank," << n << "\nc," << cfg.c << "\ncoxeter_number," << R.coxeter_number()
        << "\ndual_coxeter_number," << R.dual_coxeter_number() << "\nindex," << R.index() << "\npositive_roots,"
        << R.num_positive() << "\nalcove_weights," << pc << "\nalcove_coweights," << pcv << "\n";
    for (int j = 0; j < n; ++j) out << "mark_" << j + 1 << "," << marks[static_cast<std::size_t>(j)] << "\n";
    return kPass;
  }
  json j{{"label", R.label()},
         {"type", std::string(1, R.type())},
         {"rank", n},
         {"c", cfg.c},
         {"simple_roots", simple},
         {"cartan", cartan},
         {"gram", gram},
         {"positive_roots", roots},
         {"marks", marks},
         {"comarks", comarks},
         {"highest_short_root", to_json(R.theta())},
         {"coxeter_number", R.coxeter_number()},
         {"dual_coxeter_number", R.dual_coxeter_number()},
         {"index", R.index()},
         {"minuscule", R.minuscule_indices()},
         {"alcove_weights", pc},
         {"alcove_coweights", pcv}};
  out << j.dump(2) << "\n";
  return kPass;
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
  const RootSystem R = make_system(cfg);
  const AffineWeyl G(R, cfg.c);
  const std::vector<int> letters = parse_ints(cfg.word);
  for (int j : letters)
    if (j < 0 || j > R.rank()) throw UsageError("word letters must lie in 0..rank");
  const std::vector<int> nu_c = parse_ints(cfg.nu.empty() ? "0" : cfg.nu);
  if (static_cast<int>(nu_c.size()) != R.rank()) throw UsageError("nu needs rank coordinates");
  Coords nc(R.rank());
  for (int k = 0; k < R.rank(); ++k) nc(k) = nu_c[static_cast<std::size_t>(k)];
  const Weight nu(nc);
  if (!in_quasi_minuscule_star(R, nu)) throw UsageError("nu must lie in the (quasi-)minuscule star");
  const AffineWeylElement w = G.from_word(G.identity(), letters);

  const CoeffTable<QPoly> exact = expansion_coefficients<QPoly>(G, w, nu, q_symbols(G));
  const CoeffTable<double> num = expansion_coefficients(G, w, nu, make_tau(cfg));
  json rows = json::array();
  if (cfg.format == "csv") out << "v,eta,A,B\n";
  for (std::size_t i = 0; i < exact.interval.size(); ++i) {
    const std::string v = G.render(exact.interval[i]);
    for (std::size_t e = 0; e < exact.orbit.size(); ++e) {
      const QPoly& A = exact.A[i][e];
      if (A == QPoly()) continue;
      const std::string a = cfg.exact ? A.str() : csv_double(num.A[i][e]);
      const std::string b = cfg.exact ? exact.B[i].str() : csv_double(num.B[i]);
      if (cfg.format == "csv") {
        out << quoted(v) << "," << quoted(exact.orbit[e].str()) << "," << quoted(a) << "," << quoted(b) << "\n";
      } else {
        rows.push_back({{"v", v}, {"eta", to_json(exact.orbit[e])}, {"A", a}, {"B", b}});
      }
    }
  }
  if (cfg.format == "json")
    out << json{{"w", G.render(w)}, {"length", G.length(w)}, {"nu", to_json(nu)}, {"terms", rows}}.dump(2) << "\n";
  return kPass;
}

int cmd_laplacian(const RunConfig& cfg, std::ostream& out) {
  const RootSystem R = make_system(cfg);
  const AffineWeyl G(R, cfg.c);
  const Weight omega = select_omega(R, cfg.omega);
  const LaplacianSymmetric L = laplacian_symmetric_matrix(G, omega, make_tau(cfg));
  const auto nb = static_cast<Eigen::Index>(L.basis.size());
  if (cfg.format == "csv") {
    out << "lambda";
    for (const Weight& b : L.basis) out << "," << quoted(b.str());
    out << "\n";
    for (Eigen::Index i = 0; i < nb; ++i) {
      out << quoted(L.basis[static_cast<std::size_t>(i)].str());
      for (Eigen::Index j = 0; j < nb; ++j) out << "," << csv_double(L.matrix(i, j));
      out << "\n";
    }
    return kPass;
  }
  json basis = json::array(), matrix = json::array();
  for (const Weight& b : L.basis) basis.push_back(to_json(b));
  for (Eigen::Index i = 0; i < nb; ++i) matrix.push_back(to_json(Eigen::VectorXd(L.matrix.row(i).transpose())));
  out << json{{"omega", to_json(omega)}, {"basis", basis}, {"matrix", matrix}}.dump(2) << "\n";
  return kPass;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const RootSystem R = make_system(cfg);
  const std::vector<SpectralPoint> pts = solve_all(R, cfg);
  if (cfg.format == "csv") {
    out << "mu,xi,grad_norm,hessian_det,bae_residual,in_alcove,moment_gap_ok\n";
    for (const SpectralPoint& p : pts)
      out << quoted(p.mu.str()) << "," << quoted(join(p.xi)) << "," << csv_double(p.grad_norm) << ","
          << csv_double(p.hessian_det) << "," << csv_double(p.bae_residual) << "," << p.in_alcove << ","
          << p.moment_gap_ok << "\n";
    return kPass;
  }
  json arr = json::array();
  for (const SpectralPoint& p : pts) arr.push_back(to_json(p));
  out << arr.dump(2) << "\n";
  return kPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const RootSystem R = make_system(cfg);
  const TauParams tau = make_tau(cfg);
  Tolerances tol;
  tol.grad = cfg.tol_grad;
  tol.eigen = cfg.tol_eigen;
  const std::vector<SpectralPoint> pts = cfg.spectrum_in.empty() ? solve_all(R, cfg) : read_spectrum(R, cfg);
  const VerificationReport rep = verify_spectrum(R, cfg.c, tau, pts, tol, cfg.jobs);
  const auto m = rep.gram.rows();

  if (cfg.format == "csv") {
    out << "mu";
    for (const SpectralPoint& p : rep.spectrum) out << "," << quoted(p.mu.str());
    out << "\n";
    for (Eigen::Index i = 0; i < m; ++i) {
      out << quoted(rep.spectrum[static_cast<std::size_t>(i)].mu.str());
      for (Eigen::Index j = 0; j < m; ++j) out << "," << csv_complex(rep.gram(i, j));
      out << "\n";
    }
  } else {
    json suites = json::array(), eig = json::array(), gram = json::array(), ratios = json::array();
    json unseparated = json::array();
    for (const SuiteResult& s : rep.suites)
      suites.push_back({{"name", s.name},
                        {"passed", s.passed()},
                        {"worst", s.worst},
                        {"tolerance", s.tolerance},
                        {"failures", s.failures}});
    for (std::size_t i = 0; i < rep.spectrum.size(); ++i) {
      eig.push_back({{"mu", to_json(rep.spectrum[i].mu)}, {"residual", rep.eigen_residuals[i]}});
      ratios.push_back({{"mu", to_json(rep.spectrum[i].mu)}, {"ratio", rep.gaudin_ratios[i]}});
    }
    for (Eigen::Index i = 0; i < m; ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m; ++j) row.push_back(to_json(rep.gram(i, j)));
      gram.push_back(row);
    }
    for (const auto& [i, j] : rep.unseparated)
      unseparated.push_back({to_json(rep.spectrum[static_cast<std::size_t>(i)].mu),
                             to_json(rep.spectrum[static_cast<std::size_t>(j)].mu)});
    json j{{"system", rep.system},
           {"c", rep.c},
           {"tau2", {rep.tau2_short, rep.tau2_long}},
           {"passed", rep.passed()},
           {"suites", suites},
           {"eigen_residuals", eig},
           {"gram_matrix", gram},
           {"gaudin_ratios", ratios},
           {"degenerate_checks",
            {{"tau0", {{"max_residual", rep.degenerate0.max_residual}}},
             {"tau1", {{"max_residual", rep.degenerate1.max_residual}}}}},
           {"unseparated_pairs", unseparated},
           {"singular_ratio", rep.singular_ratio}};
    out << j.dump(2) << "\n";
  }
  if (!rep.passed()) {
    for (const SuiteResult& s : rep.suites)
      for (const std::string& f : s.failures) std::cerr << "FAIL " << s.name << ": " << f << "\n";
    return kVerifyFailed;
  }
  return kPass;
}

int cmd_norms(const RunConfig& cfg, std::ostream& out) {
  const RootSystem R = make_system(cfg);
  const TauParams tau = make_tau(cfg);
  const AffineWeyl G(R, cfg.c);
  const InnerProductWeights w = delta_weights(G, tau);
  const std::vector<SpectralPoint> pts = solve_all(R, cfg);
  json arr = json::array();
  if (cfg.format == "csv") out << "mu,norm2,gaudin_rhs,ratio,c_plus,c_minus,hessian_det\n";
  for (const SpectralPoint& p : pts) {
    const SphericalFunction f = spherical_function(R, cfg.c, tau, p.xi);
    const double norm2 = inner_product(f.values, f.values, w).real();
    const GaudinValue g = gaudin_rhs(R, cfg.c, tau, p.xi);
    if (cfg.format == "csv") {
      out << quoted(p.mu.str()) << "," << csv_double(norm2) << "," << csv_double(g.value) << ","
          << csv_double(norm2 / g.value) << "," << csv_complex(g.c_plus) << "," << csv_complex(g.c_minus) << ","
          << csv_double(g.hessian_det) << "\n";
    } else {
      arr.push_back({{"mu", to_json(p.mu)},
                     {"norm2", norm2},
                     {"gaudin_rhs", g.value},
                     {"ratio", norm2 / g.value},
                     {"c_plus", to_json(g.c_plus)},
                     {"c_minus", to_json(g.c_minus)},
                     {"hessian_det", g.hessian_det}});
    }
  }
  if (cfg.format == "json") out << arr.dump(2) << "\n";
  return kPass;
}

}  // namespace alcove::cli
