#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace alcove {

// Integer polynomial in q_s, q_l (exact coefficient mode).
class QPoly {
public:
  QPoly() = default;
  QPoly(std::int64_t c);  // NOLINT: constants convert implicitly

  static QPoly q_short() { return monomial(1, 0); }
  static QPoly q_long() { return monomial(0, 1); }
  static QPoly monomial(int ds, int dl, std::int64_t coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, std::int64_t>& terms() const { return terms_; }
  std::int64_t coeff(int ds, int dl) const;
  double evaluate(double qs, double ql) const;
  std::string str() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

private:
  std::map<std::pair<int, int>, std::int64_t> terms_;  // (deg q_s, deg q_l) -> coefficient, no zeros
};

// Integer Laurent polynomial in one variable τ.
class Laurent {
public:
  Laurent() = default;
  Laurent(std::int64_t c);  // NOLINT
  static Laurent monomial(int deg, std::int64_t coeff = 1);
  static Laurent tau() { return monomial(1); }
  // q = τ − τ⁻¹
  static Laurent q() { return monomial(1) - monomial(-1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::string str() const;
  // Exact division; throws std::domain_error when the remainder is nonzero.
  Laurent divide_exact(const Laurent& d) const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

private:
  std::map<int, std::int64_t> terms_;
};

// Substitutes q_s = q_l = τ − τ⁻¹ (equal labels).
Laurent to_laurent_equal_labels(const QPoly& p);

}  // namespace alcove
