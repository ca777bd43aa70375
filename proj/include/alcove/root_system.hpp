#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "alcove/rational.hpp"

namespace Eigen {
template <>
struct NumTraits<alcove::Rational> : GenericNumTraits<alcove::Rational> {
  using Real = alcove::Rational;
  using NonInteger = alcove::Rational;
  using Nested = alcove::Rational;
  using Literal = alcove::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};
}  // namespace Eigen

namespace alcove {

inline constexpr int kMaxRank = 8;

using Coords = Eigen::Matrix<int, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxRank, 1>;
using IntMat = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxRank, kMaxRank>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

struct WeightTag {};
struct CoweightTag {};

// Integer point of a lattice in fundamental (co)weight coordinates.
template <class Tag>
struct LatticePoint {
  Coords coords;

  LatticePoint() = default;
  explicit LatticePoint(Coords c) : coords(std::move(c)) {}
  LatticePoint(std::initializer_list<int> values) : coords(static_cast<Eigen::Index>(values.size())) {
    Eigen::Index i = 0;
    for (int v : values) coords(i++) = v;
  }
  static LatticePoint zero(int n) { return LatticePoint(Coords::Zero(n)); }

  int rank() const { return static_cast<int>(coords.size()); }
  int operator[](int j) const { return coords(j); }
  bool is_zero() const { return coords.isZero(); }
  bool is_dominant() const { return (coords.array() >= 0).all(); }

  LatticePoint operator-() const { return LatticePoint(Coords(-coords)); }
  LatticePoint operator+(const LatticePoint& o) const { return LatticePoint(Coords(coords + o.coords)); }
  LatticePoint operator-(const LatticePoint& o) const { return LatticePoint(Coords(coords - o.coords)); }
  LatticePoint operator*(int k) const { return LatticePoint(Coords(coords * k)); }
  friend LatticePoint operator*(int k, const LatticePoint& p) { return p * k; }

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.coords == b.coords; }
  friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    for (Eigen::Index i = 0; i < a.coords.size(); ++i) {
      if (a.coords(i) != b.coords(i)) return a.coords(i) < b.coords(i);
    }
    return false;
  }

  std::string str() const {
    std::string s = "(";
    for (Eigen::Index i = 0; i < coords.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords(i));
    }
    return s + ")";
  }
};

using Weight = LatticePoint<WeightTag>;
using Coweight = LatticePoint<CoweightTag>;

struct CoordsHash {
  std::size_t operator()(const Coords& c) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      h ^= static_cast<std::size_t>(c(i) + 0x7fff) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

template <class Tag>
struct LatticePointHash {
  std::size_t operator()(const LatticePoint<Tag>& p) const { return CoordsHash{}(p.coords); }
};

using WeightHash = LatticePointHash<WeightTag>;

struct Root {
  Coords simple;      // coefficients on α_1..α_n
  Coords coroot;      // coefficients of α∨ on α_1∨..α_n∨
  Weight weight;      // ⟨α, α_k∨⟩
  Coweight coweight;  // ⟨α∨, α_k⟩
  Rational norm2;
  bool positive = true;
  bool is_long = false;
  int height = 0;
  int opposite = -1;  // index of −α
};

// Element of W₀ as its integer matrix on fundamental-weight coordinates.
struct FiniteWeylElement {
  IntMat matrix;
  int length = 0;
  int sign() const { return length % 2 == 0 ? 1 : -1; }
};

class RootSystem {
public:
  RootSystem(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

  const std::vector<std::vector<Rational>>& simple_roots_cartesian() const { return simple_cartesian_; }
  const RatMat& gram() const { return gram_; }
  const IntMat& cartan() const { return cartan_; }  // A_ij = ⟨α_i, α_j∨⟩

  // Roots: indices [0, num_positive) are positive, the rest their negatives in the same order.
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int i) const { return roots_[static_cast<std::size_t>(i)]; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }
  int find_root(const Weight& w) const;  // −1 when w is not a root
  int simple_root_index(int j) const { return simple_index_[static_cast<std::size_t>(j)]; }

  int theta_index() const { return theta_; }  // highest short root ϑ
  int phi_index() const { return phi_; }      // highest root φ
  const Weight& theta() const { return root(theta_).weight; }
  const Coords& marks() const { return marks_; }      // ϑ∨ = Σ m_j α_j∨
  const Coords& comarks() const { return comarks_; }  // φ = Σ m'_j α_j
  bool simply_laced() const { return simply_laced_; }

  int coxeter_number() const { return coxeter_; }
  int dual_coxeter_number() const { return dual_coxeter_; }          // ⟨ρ, φ∨⟩ + 1
  int dual_coxeter_number_of_dual() const { return dual_coxeter_dual_; }  // ⟨ρ∨, ϑ⟩ + 1
  int index() const { return index_; }  // |P/Q| = det Cartan

  Weight fundamental_weight(int j) const;
  Coweight fundamental_coweight(int j) const;
  Weight rho() const { return Weight(Coords::Ones(rank_)); }
  Coweight rho_check() const { return Coweight(Coords::Ones(rank_)); }
  std::vector<int> minuscule_indices() const;

  // Pairings, all integral.
  int pair(const Weight& lambda, int root_idx) const { return root(root_idx).coroot.dot(lambda.coords); }
  int pair(const Coweight& mu, int root_idx) const { return root(root_idx).simple.dot(mu.coords); }
  int pair_coroot_root(int coroot_idx, int root_idx) const {
    return root(coroot_idx).coweight.coords.dot(root(root_idx).simple);
  }
  // Exact pairings between the lattices and the invariant form.
  Rational pair(const Weight& lambda, const Coweight& mu) const;
  Rational inner(const Weight& a, const Weight& b) const;
  Rational inner(const Coweight& a, const Coweight& b) const;
  const RatMat& weight_coweight_pairing() const { return omega_pair_; }  // ⟨ω_j, ω_k∨⟩
  const RatMat& weight_gram() const { return weight_gram_; }             // ⟨ω_j, ω_k⟩
  const RatMat& coweight_gram() const { return coweight_gram_; }         // ⟨ω_j∨, ω_k∨⟩
  std::vector<Rational> cartesian(const Weight& lambda) const;

  bool in_root_lattice(const Weight& lambda) const;
  bool in_coroot_lattice(const Coweight& mu) const;

  Weight reflect(const Weight& lambda, int j) const;  // simple reflection s_j, j ≥ 1 (1-based)
  Weight reflect_by_root(const Weight& lambda, int root_idx) const;
  const IntMat& simple_reflection_matrix(int j) const { return reflections_[static_cast<std::size_t>(j - 1)]; }
  IntMat reflection_matrix(int root_idx) const;
  // Dominant representative and the simple reflections applied (in order).
  Weight dominant(const Weight& lambda, std::vector<int>* word = nullptr) const;
  // Image of root index under a W₀ matrix.
  int act_on_root(const IntMat& v, int root_idx) const;
  // vμ for a coweight, via ⟨vμ, α_k⟩ = ⟨μ, v⁻¹α_k⟩.
  Coweight act_on_coweight(const IntMat& v, const Coweight& mu) const;
  IntMat longest_element() const;

  // Full W₀, breadth-first in length; refuses groups larger than max_size.
  std::vector<FiniteWeylElement> weyl_group(std::size_t max_size = 100000) const;

private:
  void build_from_simple(const std::vector<std::vector<Rational>>& simple);

  char type_;
  int rank_;
  std::vector<std::vector<Rational>> simple_cartesian_;
  RatMat gram_;
  IntMat cartan_;
  RatMat cartan_inverse_;
  RatMat omega_pair_;
  RatMat weight_gram_;
  RatMat coweight_gram_;
  RatMat gram_inverse_;
  std::vector<Root> roots_;
  int num_positive_ = 0;
  std::unordered_map<Coords, int, CoordsHash> root_lookup_;
  std::vector<int> simple_index_;
  std::vector<IntMat> reflections_;
  int theta_ = -1;
  int phi_ = -1;
  Coords marks_;
  Coords comarks_;
  bool simply_laced_ = true;
  int coxeter_ = 0;
  int dual_coxeter_ = 0;
  int dual_coxeter_dual_ = 0;
  int index_ = 1;
};

RootSystem build_root_system(char type, int rank);
RootSystem build_root_system(const std::string& label);  // "A2", "g2", ...

// P_c^+ = {Σ k_j ω_j : k_j ≥ 0, Σ k_j m_j ≤ c}, lexicographic order.
std::vector<Weight> enumerate_alcove_weights(const RootSystem& R, int c);
// P_c^{∨,+} = {μ ∈ P∨ : 0 ≤ ⟨μ,α⟩ ≤ c ∀α > 0}.
std::vector<Coweight> enumerate_alcove_coweights(const RootSystem& R, int c);
std::vector<Weight> weyl_orbit(const RootSystem& R, const Weight& lambda);
// P_ϑ = {0} ∪ minuscule orbits ∪ W₀ϑ, sorted.
std::vector<Weight> quasi_minuscule_set(const RootSystem& R);

// Rational matrix helpers shared with other modules.
RatMat rational_inverse(const RatMat& m);
Rational rational_determinant(RatMat m);
// Inverse of a unimodular integer matrix; throws otherwise.
IntMat integer_inverse(const IntMat& m);

}  // namespace alcove
