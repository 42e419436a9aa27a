#pragma once

// Sparse polynomials in the three statistic-marking variables q, t, u with
// exact rational coefficients. Terms live in a std::map keyed by exponent
// triples, which fixes a deterministic (lexicographic) term order for
// iteration and printing.

#include <array>
#include <map>
#include <stdexcept>

#include "qstirling/poly.hpp"
#include "qstirling/rational.hpp"

namespace qstirling {

enum class Var { q = 0, t = 1, u = 2 };

class MPoly {
 public:
  using Exponents = std::array<unsigned, 3>;  // powers of q, t, u

  MPoly() = default;

  static MPoly constant(const Rat& c) {
    MPoly p;
    if (c != 0) p.terms_[{0, 0, 0}] = c;
    return p;
  }
  static MPoly constant(long c) { return constant(Rat(c)); }

  static MPoly variable(Var v) {
    MPoly p;
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(v)] = 1;
    p.terms_[e] = Rat(1);
    return p;
  }

  static MPoly term(const Rat& c, unsigned eq, unsigned et, unsigned eu) {
    MPoly p;
    if (c != 0) p.terms_[{eq, et, eu}] = c;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  const std::map<Exponents, Rat>& terms() const { return terms_; }

  Rat coeff(unsigned eq, unsigned et, unsigned eu) const {
    auto it = terms_.find({eq, et, eu});
    return it == terms_.end() ? Rat(0) : it->second;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }

  MPoly operator-() const {
    MPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
  }

  friend MPoly operator*(const MPoly& a, const Rat& s) {
    MPoly r;
    if (s == 0) return r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = c * s;
    return r;
  }
  friend MPoly operator*(const Rat& s, const MPoly& a) { return a * s; }

  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned long e) const {
    MPoly result = constant(1);
    MPoly base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  // Substitute a rational value for one variable.
  MPoly substitute(Var v, const Rat& value) const {
    std::size_t idx = static_cast<std::size_t>(v);
    MPoly r;
    for (const auto& [e, c] : terms_) {
      Rat scaled = c;
      for (unsigned j = 0; j < e[idx]; ++j) scaled *= value;
      Exponents e2 = e;
      e2[idx] = 0;
      r.add_term(e2, scaled);
    }
    return r;
  }

  // Rename variables by a permutation: variable i becomes perm[i].
  MPoly permute_variables(const std::array<Var, 3>& perm) const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
      Exponents e2{0, 0, 0};
      for (std::size_t i = 0; i < 3; ++i) e2[static_cast<std::size_t>(perm[i])] = e[i];
      r.add_term(e2, c);
    }
    return r;
  }

  Rat evaluate_at(const Rat& vq, const Rat& vt, const Rat& vu) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
      Rat term = c;
      for (unsigned j = 0; j < e[0]; ++j) term *= vq;
      for (unsigned j = 0; j < e[1]; ++j) term *= vt;
      for (unsigned j = 0; j < e[2]; ++j) term *= vu;
      acc += term;
    }
    return acc;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
  }

  bool is_homogeneous(unsigned degree) const {
    for (const auto& [e, c] : terms_)
      if (e[0] + e[1] + e[2] != degree) return false;
    return true;
  }

  // Extract a univariate polynomial; the other two variables must be absent
  // (substitute them away first).
  Poly to_univariate(Var v) const {
    std::size_t idx = static_cast<std::size_t>(v);
    std::vector<Rat> coeffs;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < 3; ++i)
        if (i != idx && e[i] != 0)
          throw std::domain_error("MPoly::to_univariate: other variables present");
      if (coeffs.size() <= e[idx]) coeffs.resize(e[idx] + 1, Rat(0));
      coeffs[e[idx]] = c;
    }
    return Poly::from_coeffs(std::move(coeffs));
  }

  static MPoly from_univariate(const Poly& p, Var v) {
    MPoly r;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      if (p.coeffs()[i] == 0) continue;
      Exponents e{0, 0, 0};
      e[static_cast<std::size_t>(v)] = static_cast<unsigned>(i);
      r.terms_[e] = p.coeffs()[i];
    }
    return r;
  }

 private:
  void add_term(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Exponents, Rat> terms_;
};

}  // namespace qstirling
