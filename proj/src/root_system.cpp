#include "alcove/root_system.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace alcove {

namespace {

using RatVec = std::vector<Rational>;

RatVec unit(int dim, int i, Rational scale = 1) {
  RatVec v(static_cast<std::size_t>(dim), Rational(0));
  v[static_cast<std::size_t>(i)] = scale;
  return v;
}

RatVec diff(int dim, int i, int j) {  // e_i − e_j, 0-based
  RatVec v = unit(dim, i);
  v[static_cast<std::size_t>(j)] = -1;
  return v;
}

Rational dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Bourbaki's Cartesian realizations of the simple roots (Planches I–IX).
std::vector<RatVec> bourbaki_simple_roots(char type, int n) {
  std::vector<RatVec> s;
  switch (type) {
    case 'A':
      for (int i = 0; i < n; ++i) s.push_back(diff(n + 1, i, i + 1));
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
      s.push_back(unit(n, n - 1));
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
      s.push_back(unit(n, n - 1, 2));
      break;
    case 'D': {
      for (int i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
      RatVec last = unit(n, n - 2);
      last[static_cast<std::size_t>(n - 1)] = 1;
      s.push_back(last);
      break;
    }
    case 'E': {
      RatVec a1(8, Rational(-1, 2));
      a1[0] = Rational(1, 2);
      a1[7] = Rational(1, 2);
      s.push_back(a1);
      RatVec a2 = unit(8, 0);
      a2[1] = 1;
      s.push_back(a2);
      for (int i = 3; i <= n; ++i) s.push_back(diff(8, i - 2, i - 3));
      break;
    }
    case 'F':
      s.push_back(diff(4, 1, 2));
      s.push_back(diff(4, 2, 3));
      s.push_back(unit(4, 3));
      s.push_back({Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)});
      break;
    case 'G':
      s.push_back({1, -1, 0});
      s.push_back({-2, 1, 1});
      break;
    default:
      break;
  }
  return s;
}

void validate_type(char type, int n) {
  bool ok = false;
  switch (type) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 3; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: break;
  }
  if (!ok) {
    throw std::invalid_argument("invalid root system type " + std::string(1, type) + std::to_string(n) +
                                " (valid: A_n n>=1, B_n n>=2, C_n n>=3, D_n n>=4, E6-E8, F4, G2)");
  }
  if (n > kMaxRank) throw std::invalid_argument("rank exceeds supported maximum");
}

std::vector<int> flatten(const IntMat& m) { return {m.data(), m.data() + m.size()}; }

}  // namespace

IntMat integer_inverse(const IntMat& m) {
  Eigen::MatrixXd inv = m.cast<double>().inverse();
  IntMat r = inv.array().round().cast<int>().matrix();
  if ((r * m - IntMat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() != 0) {
    throw std::logic_error("matrix is not unimodular");
  }
  return r;
}

RatMat rational_inverse(const RatMat& m) {
  const Eigen::Index n = m.rows();
  RatMat a = m;
  RatMat inv = RatMat::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("singular rational matrix");
    a.row(col).swap(a.row(piv));
    inv.row(col).swap(inv.row(piv));
    const Rational p = a(col, col);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Rational f = a(i, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rational rational_determinant(RatMat a) {
  const Eigen::Index n = a.rows();
  Rational det = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      a.row(col).swap(a.row(piv));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const Rational f = a(i, col) / a(col, col);
      for (Eigen::Index j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

RootSystem::RootSystem(char type, int rank) : type_(static_cast<char>(std::toupper(type))), rank_(rank) {
  validate_type(type_, rank_);
  build_from_simple(bourbaki_simple_roots(type_, rank_));
}

void RootSystem::build_from_simple(const std::vector<RatVec>& simple) {
  const int n = rank_;
  simple_cartesian_ = simple;
  gram_ = RatMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram_(i, j) = dot(simple[i], simple[j]);
  cartan_ = IntMat(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational a = Rational(2) * gram_(i, j) / gram_(j, j);
      if (!a.is_integer()) throw std::logic_error("non-integral Cartan entry");
      cartan_(i, j) = static_cast<int>(a.num());
    }
  }
  RatMat cartan_rat = cartan_.cast<Rational>();
  cartan_inverse_ = rational_inverse(cartan_rat);
  omega_pair_ = cartan_inverse_;
  gram_inverse_ = rational_inverse(gram_);
  weight_gram_ = cartan_inverse_ * gram_ * cartan_inverse_.transpose();
  coweight_gram_ = gram_inverse_;
  const Rational det = rational_determinant(cartan_rat);
  index_ = static_cast<int>(det.num());

  // Positive roots by saturation under simple reflections, in simple-root coordinates.
  auto pair_simple = [&](const Coords& beta, int j) {  // ⟨β, α_j∨⟩
    int s = 0;
    for (int i = 0; i < n; ++i) s += beta(i) * cartan_(i, j);
    return s;
  };
  std::set<std::vector<int>> seen;
  std::vector<Coords> positive;
  std::deque<Coords> queue;
  for (int j = 0; j < n; ++j) {
    Coords e = Coords::Zero(n);
    e(j) = 1;
    queue.push_back(e);
    seen.insert({e.data(), e.data() + n});
  }
  while (!queue.empty()) {
    Coords beta = queue.front();
    queue.pop_front();
    positive.push_back(beta);
    for (int j = 0; j < n; ++j) {
      Coords img = beta;
      img(j) -= pair_simple(beta, j);
      if ((img.array() < 0).any()) continue;  // only −α_j leaves the positive cone
      std::vector<int> key(img.data(), img.data() + n);
      if (seen.insert(key).second) queue.push_back(img);
    }
  }
  std::sort(positive.begin(), positive.end(), [](const Coords& a, const Coords& b) {
    const int ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(), a.data() + a.size());
  });

  Rational max_norm = 0, min_norm = 0;
  bool first = true;
  for (const auto& beta : positive) {
    Rational nrm = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) nrm += Rational(beta(i) * beta(j)) * gram_(i, j);
    if (first || nrm > max_norm) max_norm = nrm;
    if (first || nrm < min_norm) min_norm = nrm;
    first = false;
  }
  simply_laced_ = (max_norm == min_norm);

  num_positive_ = static_cast<int>(positive.size());
  roots_.clear();
  for (int sgn : {1, -1}) {
    for (const auto& beta0 : positive) {
      Root r;
      r.simple = beta0 * sgn;
      r.positive = sgn > 0;
      r.height = r.simple.sum();
      Rational nrm = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) nrm += Rational(beta0(i) * beta0(j)) * gram_(i, j);
      r.norm2 = nrm;
      r.is_long = !simply_laced_ && nrm == max_norm;
      r.coroot = Coords(n);
      for (int i = 0; i < n; ++i) {
        Rational cc = Rational(r.simple(i)) * gram_(i, i) / nrm;
        if (!cc.is_integer()) throw std::logic_error("non-integral coroot coefficient");
        r.coroot(i) = static_cast<int>(cc.num());
      }
      r.weight = Weight(Coords(cartan_.transpose() * r.simple));
      r.coweight = Coweight(Coords(cartan_ * r.coroot));
      roots_.push_back(r);
    }
  }
  root_lookup_.clear();
  for (int i = 0; i < num_roots(); ++i) {
    roots_[static_cast<std::size_t>(i)].opposite = i < num_positive_ ? i + num_positive_ : i - num_positive_;
    root_lookup_.emplace(roots_[static_cast<std::size_t>(i)].weight.coords, i);
  }
  simple_index_.assign(static_cast<std::size_t>(n + 1), -1);
  for (int i = 0; i < num_positive_; ++i) {
    if (roots_[static_cast<std::size_t>(i)].height == 1) {
      for (int j = 0; j < n; ++j)
        if (roots_[static_cast<std::size_t>(i)].simple(j) == 1) simple_index_[static_cast<std::size_t>(j + 1)] = i;
    }
  }

  phi_ = num_positive_ - 1;
  theta_ = -1;
  for (int i = 0; i < num_positive_; ++i) {
    if (!roots_[static_cast<std::size_t>(i)].is_long) theta_ = i;  // sorted by height, last short wins
  }
  marks_ = root(theta_).coroot;
  comarks_ = root(phi_).simple;
  coxeter_ = marks_.sum() + 1;
  dual_coxeter_ = root(phi_).coroot.sum() + 1;
  dual_coxeter_dual_ = root(theta_).simple.sum() + 1;

  reflections_.clear();
  for (int j = 1; j <= n; ++j) {
    IntMat s = IntMat::Identity(n, n);
    // s_j λ = λ − λ_j α_j, α_j has weight coordinates given by row j−1 of the Cartan matrix.
    for (int k = 0; k < n; ++k) s(k, j - 1) -= cartan_(j - 1, k);
    reflections_.push_back(s);
  }
}

int RootSystem::find_root(const Weight& w) const {
  auto it = root_lookup_.find(w.coords);
  return it == root_lookup_.end() ? -1 : it->second;
}

Weight RootSystem::fundamental_weight(int j) const {
  Coords e = Coords::Zero(rank_);
  e(j - 1) = 1;
  return Weight(e);
}

Coweight RootSystem::fundamental_coweight(int j) const {
  Coords e = Coords::Zero(rank_);
  e(j - 1) = 1;
  return Coweight(e);
}

std::vector<int> RootSystem::minuscule_indices() const {
  std::vector<int> out;
  for (int j = 0; j < rank_; ++j)
    if (marks_(j) == 1) out.push_back(j + 1);
  return out;
}

Rational RootSystem::pair(const Weight& lambda, const Coweight& mu) const {
  Rational s = 0;
  for (int j = 0; j < rank_; ++j)
    for (int k = 0; k < rank_; ++k)
      if (lambda[j] != 0 && mu[k] != 0) s += Rational(lambda[j] * mu[k]) * omega_pair_(j, k);
  return s;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
  Rational s = 0;
  for (int j = 0; j < rank_; ++j)
    for (int k = 0; k < rank_; ++k)
      if (a[j] != 0 && b[k] != 0) s += Rational(a[j] * b[k]) * weight_gram_(j, k);
  return s;
}

Rational RootSystem::inner(const Coweight& a, const Coweight& b) const {
  Rational s = 0;
  for (int j = 0; j < rank_; ++j)
    for (int k = 0; k < rank_; ++k)
      if (a[j] != 0 && b[k] != 0) s += Rational(a[j] * b[k]) * coweight_gram_(j, k);
  return s;
}

std::vector<Rational> RootSystem::cartesian(const Weight& lambda) const {
  const std::size_t dim = simple_cartesian_.front().size();
  std::vector<Rational> out(dim, Rational(0));
  for (int j = 0; j < rank_; ++j) {
    if (lambda[j] == 0) continue;
    for (int i = 0; i < rank_; ++i) {
      const Rational f = Rational(lambda[j]) * cartan_inverse_(j, i);
      if (f.is_zero()) continue;
      for (std::size_t d = 0; d < dim; ++d) out[d] += f * simple_cartesian_[static_cast<std::size_t>(i)][d];
    }
  }
  return out;
}

bool RootSystem::in_root_lattice(const Weight& lambda) const {
  for (int i = 0; i < rank_; ++i) {
    Rational b = 0;
    for (int j = 0; j < rank_; ++j) b += Rational(lambda[j]) * cartan_inverse_(j, i);
    if (!b.is_integer()) return false;
  }
  return true;
}

bool RootSystem::in_coroot_lattice(const Coweight& mu) const {
  for (int i = 0; i < rank_; ++i) {
    Rational b = 0;
    for (int k = 0; k < rank_; ++k) b += cartan_inverse_(i, k) * Rational(mu[k]);
    if (!b.is_integer()) return false;
  }
  return true;
}

Weight RootSystem::reflect(const Weight& lambda, int j) const {
  const int p = lambda[j - 1];
  if (p == 0) return lambda;
  return Weight(Coords(lambda.coords - p * cartan_.row(j - 1).transpose()));
}

Weight RootSystem::reflect_by_root(const Weight& lambda, int root_idx) const {
  const int p = pair(lambda, root_idx);
  return p == 0 ? lambda : lambda - root(root_idx).weight * p;
}

IntMat RootSystem::reflection_matrix(int root_idx) const {
  const Root& r = root(root_idx);
  return IntMat(IntMat::Identity(rank_, rank_) - r.weight.coords * r.coroot.transpose());
}

Weight RootSystem::dominant(const Weight& lambda, std::vector<int>* word) const {
  Weight x = lambda;
  for (;;) {
    int j = 0;
    while (j < rank_ && x[j] >= 0) ++j;
    if (j == rank_) return x;
    x = reflect(x, j + 1);
    if (word) word->push_back(j + 1);
  }
}

int RootSystem::act_on_root(const IntMat& v, int root_idx) const {
  return find_root(Weight(Coords(v * root(root_idx).weight.coords)));
}

Coweight RootSystem::act_on_coweight(const IntMat& v, const Coweight& mu) const {
  const IntMat vinv = integer_inverse(v);
  Coords out(rank_);
  for (int k = 1; k <= rank_; ++k) {
    const int idx = act_on_root(vinv, simple_root_index(k));
    out(k - 1) = pair(mu, idx);
  }
  return Coweight(out);
}

IntMat RootSystem::longest_element() const {
  std::vector<int> word;
  dominant(-rho(), &word);
  IntMat v = IntMat::Identity(rank_, rank_);
  for (int j : word) v = simple_reflection_matrix(j) * v;
  return v;
}

std::vector<FiniteWeylElement> RootSystem::weyl_group(std::size_t max_size) const {
  std::vector<FiniteWeylElement> out;
  std::map<std::vector<int>, std::size_t> seen;
  FiniteWeylElement id{IntMat::Identity(rank_, rank_), 0};
  out.push_back(id);
  seen.emplace(flatten(id.matrix), 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int j = 1; j <= rank_; ++j) {
      IntMat m = simple_reflection_matrix(j) * out[head].matrix;
      auto key = flatten(m);
      if (seen.count(key)) continue;
      if (out.size() >= max_size) throw std::length_error("finite Weyl group too large to enumerate");
      seen.emplace(std::move(key), out.size());
      out.push_back({m, out[head].length + 1});
    }
  }
  return out;
}

RootSystem build_root_system(char type, int rank) { return RootSystem(type, rank); }

RootSystem build_root_system(const std::string& label) {
  if (label.size() < 2) throw std::invalid_argument("root system label must look like A2");
  std::size_t pos = 0;
  int rank = 0;
  try {
    rank = std::stoi(label.substr(1), &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad root system label: " + label);
  }
  if (pos + 1 != label.size()) throw std::invalid_argument("bad root system label: " + label);
  return RootSystem(label[0], rank);
}

namespace {

template <class Point>
std::vector<Point> bounded_cone(int n, const Coords& weights, int c) {
  std::vector<Point> out;
  Coords k = Coords::Zero(n);
  std::function<void(int, int)> rec = [&](int j, int budget) {
    if (j == n) {
      out.push_back(Point(k));
      return;
    }
    for (int v = 0; v * weights(j) <= budget; ++v) {
      k(j) = v;
      rec(j + 1, budget - v * weights(j));
    }
    k(j) = 0;
  };
  rec(0, c);
  return out;
}

}  // namespace

std::vector<Weight> enumerate_alcove_weights(const RootSystem& R, int c) {
  if (c < 2) throw std::invalid_argument("scale parameter c must satisfy c > 1");
  return bounded_cone<Weight>(R.rank(), R.marks(), c);
}

std::vector<Coweight> enumerate_alcove_coweights(const RootSystem& R, int c) {
  if (c < 2) throw std::invalid_argument("scale parameter c must satisfy c > 1");
  return bounded_cone<Coweight>(R.rank(), R.comarks(), c);
}

std::vector<Weight> weyl_orbit(const RootSystem& R, const Weight& lambda) {
  std::set<Weight> seen{lambda};
  std::vector<Weight> stack{lambda};
  while (!stack.empty()) {
    Weight x = stack.back();
    stack.pop_back();
    for (int j = 1; j <= R.rank(); ++j) {
      Weight y = R.reflect(x, j);
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Weight> quasi_minuscule_set(const RootSystem& R) {
  std::set<Weight> all{Weight::zero(R.rank())};
  for (int j : R.minuscule_indices()) {
    for (const auto& w : weyl_orbit(R, R.fundamental_weight(j))) all.insert(w);
  }
  for (const auto& w : weyl_orbit(R, R.theta())) all.insert(w);
  return {all.begin(), all.end()};
}

}  // namespace alcove
