#pragma once

#include <Eigen/Core>

#include <string>
#include <utility>
#include <vector>

#include "alcove/root_system.hpp"

namespace alcove {

// a = α∨ + level·c with α = R.root(root); a(x) = ⟨x, α∨⟩ + level·c.
struct AffineRoot {
  int root = 0;
  int level = 0;
  friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
    return a.root == b.root && a.level == b.level;
  }
  friend bool operator<(const AffineRoot& a, const AffineRoot& b) {
    return a.root != b.root ? a.root < b.root : a.level < b.level;
  }
};

// w = v∘t_{cλ}: x ↦ v(x + cλ). The inverse of v is carried along.
struct AffineWeylElement {
  IntMat finite;
  IntMat finite_inv;
  Weight translation;

  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.translation == b.translation && a.finite == b.finite;
  }
  friend bool operator!=(const AffineWeylElement& a, const AffineWeylElement& b) { return !(a == b); }
};

struct AffineWeylElementHash {
  std::size_t operator()(const AffineWeylElement& w) const {
    std::size_t h = CoordsHash{}(w.translation.coords);
    for (Eigen::Index i = 0; i < w.finite.size(); ++i) {
      h ^= static_cast<std::size_t>(w.finite.data()[i] + 17) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// w = u·s_{j₁}···s_{jℓ} with u ∈ Ω.
struct ReducedWord {
  AffineWeylElement omega;
  std::vector<int> letters;
};

struct MinimalRep {
  AffineWeylElement element;  // w_x
  Weight dominant;            // x₊ = w_x x ∈ A_c
  std::vector<int> word;      // reduced word of w_x, leftmost letter first
};

class AffineWeyl {
public:
  AffineWeyl(const RootSystem& R, int c);

  const RootSystem& root_system() const { return *R_; }
  int c() const { return c_; }
  int rank() const { return R_->rank(); }

  AffineRoot simple_root(int j) const;
  int evaluate(const AffineRoot& a, const Weight& x) const { return R_->pair(x, a.root) + a.level * c_; }
  double evaluate(const AffineRoot& a, const Eigen::VectorXd& x) const;
  bool is_positive(const AffineRoot& a) const { return a.level > 0 || (a.level == 0 && R_->root(a.root).positive); }
  bool is_long(const AffineRoot& a) const { return R_->root(a.root).is_long; }
  AffineRoot negate(const AffineRoot& a) const { return {R_->root(a.root).opposite, -a.level}; }
  // a_j(x) for the simple affine roots, j = 0..n.
  int simple_value(int j, const Weight& x) const;

  // s_a x = x − a(x) α.
  Weight reflect(const AffineRoot& a, const Weight& x) const;
  Weight reflect(int j, const Weight& x) const { return reflect(simple_root(j), x); }

  AffineWeylElement identity() const;
  AffineWeylElement simple_reflection(int j) const;
  AffineWeylElement translation(const Weight& lambda) const;  // t_{cλ}
  AffineWeylElement finite_element(const IntMat& v) const;
  AffineWeylElement multiply(const AffineWeylElement& a, const AffineWeylElement& b) const;
  AffineWeylElement inverse(const AffineWeylElement& w) const;
  AffineWeylElement left_mul(int j, const AffineWeylElement& w) const { return multiply(simple_reflection(j), w); }
  AffineWeylElement right_mul(const AffineWeylElement& w, int j) const { return multiply(w, simple_reflection(j)); }
  AffineWeylElement from_word(const AffineWeylElement& omega, const std::vector<int>& letters) const;

  Weight act(const AffineWeylElement& w, const Weight& x) const;
  Eigen::VectorXd act(const AffineWeylElement& w, const Eigen::VectorXd& x) const;
  AffineRoot act(const AffineWeylElement& w, const AffineRoot& a) const;

  int length(const AffineWeylElement& w) const;
  // (#short, #long) affine roots in R(w).
  std::pair<int, int> inversion_counts(const AffineWeylElement& w) const;
  std::vector<AffineRoot> inversions(const AffineWeylElement& w) const;
  std::pair<int, std::vector<AffineRoot>> length_and_inversions(const AffineWeylElement& w) const {
    auto inv = inversions(w);
    return {static_cast<int>(inv.size()), std::move(inv)};
  }
  bool in_affine_weyl_group(const AffineWeylElement& w) const { return R_->in_root_lattice(w.translation); }
  ReducedWord reduced_word(const AffineWeylElement& w) const;
  std::string render(const AffineWeylElement& w) const;

  // Ω: length-zero elements, identity first.
  const std::vector<AffineWeylElement>& omega_group() const { return omega_; }
  // u_j with u a_j = a_{u_j}.
  std::vector<int> omega_permutation(const AffineWeylElement& u) const;

  MinimalRep minimal_rep(const Weight& x) const;
  std::pair<AffineWeylElement, Eigen::VectorXd> minimal_rep(const Eigen::VectorXd& x) const;
  bool in_alcove(const Weight& x) const;
  std::vector<AffineWeylElement> stabilizer(const Weight& lambda) const;

  bool bruhat_leq(const AffineWeylElement& v, const AffineWeylElement& w) const;
  std::vector<AffineWeylElement> lower_interval(const AffineWeylElement& w) const;

  int theta(const Weight& lambda) const;

private:
  bool leq_same_coset(const AffineWeylElement& v, const AffineWeylElement& w) const;

  const RootSystem* R_;
  int c_;
  std::vector<AffineRoot> simple_;
  std::vector<AffineWeylElement> generators_;
  std::vector<AffineWeylElement> omega_;
};

}  // namespace alcove
