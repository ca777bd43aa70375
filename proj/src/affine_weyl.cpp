#include "alcove/affine_weyl.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace alcove {

AffineWeyl::AffineWeyl(const RootSystem& R, int c) : R_(&R), c_(c) {
  if (c < 2) throw std::invalid_argument("scale parameter c must satisfy c > 1");
  const int n = R.rank();
  // a₀ = −ϑ∨ + c, i.e. α₀ = −ϑ.
  simple_.push_back({R.root(R.theta_index()).opposite, 1});
  for (int j = 1; j <= n; ++j) simple_.push_back({R.simple_root_index(j), 0});

  const IntMat s_theta = R.reflection_matrix(R.theta_index());
  generators_.push_back({s_theta, s_theta, -R.theta()});
  for (int j = 1; j <= n; ++j) {
    const IntMat& s = R.simple_reflection_matrix(j);
    generators_.push_back({s, s, Weight::zero(n)});
  }

  omega_.push_back(identity());
  for (int k : R.minuscule_indices()) {
    ReducedWord rw = reduced_word(translation(R.fundamental_weight(k)));
    if (std::find(omega_.begin(), omega_.end(), rw.omega) == omega_.end()) omega_.push_back(rw.omega);
  }
}

AffineRoot AffineWeyl::simple_root(int j) const { return simple_[static_cast<std::size_t>(j)]; }

double AffineWeyl::evaluate(const AffineRoot& a, const Eigen::VectorXd& x) const {
  return R_->root(a.root).coroot.cast<double>().dot(x) + static_cast<double>(a.level * c_);
}

int AffineWeyl::simple_value(int j, const Weight& x) const {
  if (j == 0) return c_ - R_->marks().dot(x.coords);
  return x[j - 1];
}

Weight AffineWeyl::reflect(const AffineRoot& a, const Weight& x) const {
  const int v = evaluate(a, x);
  return v == 0 ? x : x - R_->root(a.root).weight * v;
}

AffineWeylElement AffineWeyl::identity() const {
  const int n = rank();
  return {IntMat::Identity(n, n), IntMat::Identity(n, n), Weight::zero(n)};
}

AffineWeylElement AffineWeyl::simple_reflection(int j) const { return generators_[static_cast<std::size_t>(j)]; }

AffineWeylElement AffineWeyl::translation(const Weight& lambda) const {
  AffineWeylElement e = identity();
  e.translation = lambda;
  return e;
}

AffineWeylElement AffineWeyl::finite_element(const IntMat& v) const {
  return {v, integer_inverse(v), Weight::zero(rank())};
}

// v t_{cλ} · ṽ t_{cλ̃} = vṽ t_{c(ṽ⁻¹λ + λ̃)}
AffineWeylElement AffineWeyl::multiply(const AffineWeylElement& a, const AffineWeylElement& b) const {
  return {IntMat(a.finite * b.finite), IntMat(b.finite_inv * a.finite_inv),
          Weight(Coords(b.finite_inv * a.translation.coords + b.translation.coords))};
}

// (v t_{cλ})⁻¹ = v⁻¹ t_{−c vλ}
AffineWeylElement AffineWeyl::inverse(const AffineWeylElement& w) const {
  return {w.finite_inv, w.finite, Weight(Coords(-(w.finite * w.translation.coords)))};
}

AffineWeylElement AffineWeyl::from_word(const AffineWeylElement& omega, const std::vector<int>& letters) const {
  AffineWeylElement w = omega;
  for (int j : letters) w = right_mul(w, j);
  return w;
}

Weight AffineWeyl::act(const AffineWeylElement& w, const Weight& x) const {
  return Weight(Coords(w.finite * (x.coords + c_ * w.translation.coords)));
}

Eigen::VectorXd AffineWeyl::act(const AffineWeylElement& w, const Eigen::VectorXd& x) const {
  Eigen::VectorXd shifted = x + static_cast<double>(c_) * w.translation.coords.cast<double>();
  return w.finite.cast<double>() * shifted;
}

// (wa)(x) = a(w⁻¹x) = ⟨x, vα∨⟩ + (r − ⟨λ,α∨⟩)c
AffineRoot AffineWeyl::act(const AffineWeylElement& w, const AffineRoot& a) const {
  return {R_->act_on_root(w.finite, a.root), a.level - R_->pair(w.translation, a.root)};
}

namespace {

// Levels r with (α, r) ∈ R⁺ and w(α, r) ∈ R⁻ form the range [lo, hi].
inline std::pair<int, int> inversion_range(const RootSystem& R, const AffineWeylElement& w, int root) {
  const bool image_positive = R.root(R.act_on_root(w.finite, root)).positive;
  const int lo = R.root(root).positive ? 0 : 1;
  const int hi = R.pair(w.translation, root) - (image_positive ? 1 : 0);
  return {lo, hi};
}

}  // namespace

int AffineWeyl::length(const AffineWeylElement& w) const {
  auto [s, l] = inversion_counts(w);
  return s + l;
}

std::pair<int, int> AffineWeyl::inversion_counts(const AffineWeylElement& w) const {
  int ns = 0, nl = 0;
  for (int i = 0; i < R_->num_roots(); ++i) {
    auto [lo, hi] = inversion_range(*R_, w, i);
    if (hi < lo) continue;
    (R_->root(i).is_long ? nl : ns) += hi - lo + 1;
  }
  return {ns, nl};
}

std::vector<AffineRoot> AffineWeyl::inversions(const AffineWeylElement& w) const {
  std::vector<AffineRoot> out;
  for (int i = 0; i < R_->num_roots(); ++i) {
    auto [lo, hi] = inversion_range(*R_, w, i);
    for (int r = lo; r <= hi; ++r) out.push_back({i, r});
  }
  return out;
}

ReducedWord AffineWeyl::reduced_word(const AffineWeylElement& w) const {
  AffineWeylElement x = w;
  std::vector<int> rev;
  for (;;) {
    int found = -1;
    for (int j = 0; j <= rank(); ++j) {
      if (!is_positive(act(x, simple_root(j)))) {
        found = j;
        break;
      }
    }
    if (found < 0) break;
    x = right_mul(x, found);
    rev.push_back(found);
  }
  std::reverse(rev.begin(), rev.end());
  return {x, rev};
}

std::string AffineWeyl::render(const AffineWeylElement& w) const {
  ReducedWord rw = reduced_word(w);
  std::string s;
  auto it = std::find(omega_.begin(), omega_.end(), rw.omega);
  s = "u" + std::to_string(it - omega_.begin());
  for (int j : rw.letters) s += "·s" + std::to_string(j);
  return s;
}

std::vector<int> AffineWeyl::omega_permutation(const AffineWeylElement& u) const {
  std::vector<int> perm(static_cast<std::size_t>(rank() + 1), -1);
  for (int j = 0; j <= rank(); ++j) {
    const AffineRoot img = act(u, simple_root(j));
    for (int k = 0; k <= rank(); ++k)
      if (img == simple_root(k)) perm[static_cast<std::size_t>(j)] = k;
    if (perm[static_cast<std::size_t>(j)] < 0) throw std::logic_error("element does not permute simple affine roots");
  }
  return perm;
}

MinimalRep AffineWeyl::minimal_rep(const Weight& x) const {
  MinimalRep out{identity(), x, {}};
  for (;;) {
    int found = -1;
    for (int j = 0; j <= rank(); ++j) {
      if (simple_value(j, out.dominant) < 0) {
        found = j;
        break;
      }
    }
    if (found < 0) break;
    out.dominant = reflect(found, out.dominant);
    out.element = left_mul(found, out.element);
    out.word.push_back(found);
  }
  std::reverse(out.word.begin(), out.word.end());
  return out;
}

std::pair<AffineWeylElement, Eigen::VectorXd> AffineWeyl::minimal_rep(const Eigen::VectorXd& x) const {
  AffineWeylElement w = identity();
  Eigen::VectorXd y = x;
  for (;;) {
    int found = -1;
    for (int j = 0; j <= rank(); ++j) {
      if (evaluate(simple_root(j), y) < 0) {
        found = j;
        break;
      }
    }
    if (found < 0) break;
    const AffineRoot a = simple_root(found);
    y -= evaluate(a, y) * R_->root(a.root).weight.coords.cast<double>();
    w = left_mul(found, w);
  }
  return {w, y};
}

bool AffineWeyl::in_alcove(const Weight& x) const {
  for (int j = 0; j <= rank(); ++j)
    if (simple_value(j, x) < 0) return false;
  return true;
}

std::vector<AffineWeylElement> AffineWeyl::stabilizer(const Weight& lambda) const {
  if (!in_alcove(lambda)) throw std::invalid_argument("stabilizer: weight " + lambda.str() + " is not in the alcove");
  std::vector<int> gens;
  for (int j = 0; j <= rank(); ++j)
    if (simple_value(j, lambda) == 0) gens.push_back(j);
  std::vector<AffineWeylElement> out{identity()};
  std::unordered_set<AffineWeylElement, AffineWeylElementHash> seen{identity()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int j : gens) {
      AffineWeylElement y = right_mul(out[head], j);
      if (seen.insert(y).second) out.push_back(y);
    }
  }
  return out;
}

bool AffineWeyl::leq_same_coset(const AffineWeylElement& v, const AffineWeylElement& w) const {
  const int lw = length(w);
  const int lv = length(v);
  if (lv > lw) return false;
  if (lw == 0) return v == w;
  if (lv == lw) return v == w;
  // Right descent j of w; lifting property decides.
  int j = 0;
  while (is_positive(act(w, simple_root(j)))) ++j;
  const AffineWeylElement ws = right_mul(w, j);
  if (!is_positive(act(v, simple_root(j)))) return leq_same_coset(right_mul(v, j), ws);
  return leq_same_coset(v, ws);
}

bool AffineWeyl::bruhat_leq(const AffineWeylElement& v, const AffineWeylElement& w) const {
  const ReducedWord rv = reduced_word(v);
  const ReducedWord rw = reduced_word(w);
  if (rv.omega != rw.omega) return false;
  const AffineWeylElement uinv = inverse(rw.omega);
  return leq_same_coset(multiply(uinv, v), multiply(uinv, w));
}

std::vector<AffineWeylElement> AffineWeyl::lower_interval(const AffineWeylElement& w) const {
  const ReducedWord rw = reduced_word(w);
  std::vector<AffineWeylElement> current{rw.omega};
  std::unordered_set<AffineWeylElement, AffineWeylElementHash> seen{rw.omega};
  for (int j : rw.letters) {
    const std::size_t n = current.size();
    for (std::size_t i = 0; i < n; ++i) {
      AffineWeylElement y = right_mul(current[i], j);
      if (seen.insert(y).second) current.push_back(y);
    }
  }
  return current;
}

int AffineWeyl::theta(const Weight& lambda) const {
  int count = 0;
  for (int i = 0; i < R_->num_roots(); ++i) {
    const int num = -2 - R_->pair(lambda, i);
    if (num % c_ != 0) continue;
    const AffineRoot a{i, num / c_};
    if (is_positive(a)) ++count;
  }
  return count;
}

}  // namespace alcove
