#include "alcove/qpoly.hpp"

#include <cmath>
#include <stdexcept>

namespace alcove {

namespace {

template <class Map>
void add_term(Map& m, const typename Map::key_type& k, std::int64_t v) {
  if (v == 0) return;
  auto [it, inserted] = m.emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) m.erase(it);
  }
}

}  // namespace

QPoly::QPoly(std::int64_t c) { add_term(terms_, {0, 0}, c); }

QPoly QPoly::monomial(int ds, int dl, std::int64_t coeff) {
  QPoly p;
  add_term(p.terms_, {ds, dl}, coeff);
  return p;
}

std::int64_t QPoly::coeff(int ds, int dl) const {
  auto it = terms_.find({ds, dl});
  return it == terms_.end() ? 0 : it->second;
}

double QPoly::evaluate(double qs, double ql) const {
  double s = 0;
  for (const auto& [k, v] : terms_) s += static_cast<double>(v) * std::pow(qs, k.first) * std::pow(ql, k.second);
  return s;
}

std::string QPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [ds, dl] = it->first;
    std::int64_t v = it->second;
    if (!s.empty()) s += v < 0 ? " - " : " + ";
    else if (v < 0) s += "-";
    v = v < 0 ? -v : v;
    std::string mono;
    if (ds) mono += ds == 1 ? "qs" : "qs^" + std::to_string(ds);
    if (dl) mono += (mono.empty() ? "" : "*") + (dl == 1 ? std::string("ql") : "ql^" + std::to_string(dl));
    if (mono.empty()) s += std::to_string(v);
    else s += (v == 1 ? "" : std::to_string(v) + "*") + mono;
  }
  return s;
}

QPoly QPoly::operator-() const {
  QPoly p = *this;
  for (auto& [k, v] : p.terms_) v = -v;
  return p;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [k, v] : o.terms_) add_term(terms_, k, v);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [k, v] : o.terms_) add_term(terms_, k, -v);
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  std::map<std::pair<int, int>, std::int64_t> out;
  for (const auto& [ka, va] : terms_)
    for (const auto& [kb, vb] : o.terms_) add_term(out, {ka.first + kb.first, ka.second + kb.second}, va * vb);
  terms_ = std::move(out);
  return *this;
}

Laurent::Laurent(std::int64_t c) { add_term(terms_, 0, c); }

Laurent Laurent::monomial(int deg, std::int64_t coeff) {
  Laurent p;
  add_term(p.terms_, deg, coeff);
  return p;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += std::to_string(it->second) + "*t^" + std::to_string(it->first);
  }
  return s;
}

Laurent Laurent::operator-() const {
  Laurent p = *this;
  for (auto& [k, v] : p.terms_) v = -v;
  return p;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [k, v] : o.terms_) add_term(terms_, k, v);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [k, v] : o.terms_) add_term(terms_, k, -v);
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  std::map<int, std::int64_t> out;
  for (const auto& [ka, va] : terms_)
    for (const auto& [kb, vb] : o.terms_) add_term(out, ka + kb, va * vb);
  terms_ = std::move(out);
  return *this;
}

Laurent Laurent::divide_exact(const Laurent& d) const {
  if (d.is_zero()) throw std::domain_error("Laurent: division by zero");
  const auto [dtop, dlead] = *d.terms_.rbegin();
  const int dlow = d.terms_.begin()->first;
  Laurent rem = *this;
  Laurent quot;
  while (!rem.is_zero()) {
    const auto [rtop, rlead] = *rem.terms_.rbegin();
    const int rlow = rem.terms_.begin()->first;
    if (rtop - dtop < rlow - dlow || rlead % dlead != 0) throw std::domain_error("Laurent: inexact division");
    Laurent t = monomial(rtop - dtop, rlead / dlead);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

Laurent to_laurent_equal_labels(const QPoly& p) {
  Laurent out;
  for (const auto& [k, v] : p.terms()) {
    Laurent term(v);
    for (int i = 0; i < k.first + k.second; ++i) term *= Laurent::q();
    out += term;
  }
  return out;
}

}  // namespace alcove
