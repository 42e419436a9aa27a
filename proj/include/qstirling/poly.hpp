#pragma once

// Dense univariate polynomials over exact rationals. The coefficient vector
// is kept canonical: no trailing zero entries, so the zero polynomial is the
// empty vector and degree() is size()-1 otherwise.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qstirling/numbers.hpp"
#include "qstirling/rational.hpp"

namespace qstirling {

class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& constant) {
    if (constant != 0) c_.push_back(constant);
  }
  explicit Poly(long constant) : Poly(Rat(constant)) {}

  static Poly from_coeffs(std::vector<Rat> coeffs) {
    Poly p;
    p.c_ = std::move(coeffs);
    p.normalize();
    return p;
  }

  static Poly monomial(const Rat& coeff, std::size_t degree) {
    Poly p;
    if (coeff != 0) {
      p.c_.assign(degree + 1, Rat(0));
      p.c_[degree] = coeff;
    }
    return p;
  }

  static Poly variable() { return monomial(Rat(1), 1); }

  bool is_zero() const { return c_.empty(); }

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

  const std::vector<Rat>& coeffs() const { return c_; }

  Rat leading() const {
    if (is_zero()) throw std::domain_error("Poly::leading: zero polynomial");
    return c_.back();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return from_coeffs(std::move(r));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return from_coeffs(std::move(r));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return from_coeffs(std::move(r));
  }

  friend Poly operator*(const Poly& a, const Rat& s) {
    if (s == 0) return Poly();
    Poly r = a;
    for (auto& c : r.c_) c *= s;
    return r;
  }
  friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned long e) const {
    Poly result(Rat(1));
    Poly base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return from_coeffs(std::move(r));
  }

  Rat evaluate_at(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // p(a + b*t), the affine substitution.
  Poly compose_linear(const Rat& a, const Rat& b) const {
    Poly acc;
    Poly lin = Poly(a) + Poly::monomial(b, 1);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + Poly(c_[i]);
    return acc;
  }

  // t^m * p(1/t) for m >= degree: the coefficient vector reversed into length m+1.
  Poly reversed(std::size_t m) const {
    if (degree() > static_cast<long>(m))
      throw std::invalid_argument("Poly::reversed: m below degree");
    std::vector<Rat> r(m + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[m - i] = c_[i];
    return from_coeffs(std::move(r));
  }

  // Multiply by t^s.
  Poly shifted_up(std::size_t s) const {
    if (is_zero() || s == 0) return *this;
    std::vector<Rat> r(c_.size() + s, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + s] = c_[i];
    return from_coeffs(std::move(r));
  }

  // Divide by t^s; the s lowest coefficients must vanish.
  Poly shifted_down(std::size_t s) const {
    if (s == 0) return *this;
    if (is_zero()) return Poly();
    if (c_.size() < s)
      throw std::domain_error("Poly::shifted_down: degree too small");
    for (std::size_t i = 0; i < s; ++i)
      if (c_[i] != 0) throw std::domain_error("Poly::shifted_down: not divisible by t^s");
    return from_coeffs(std::vector<Rat>(c_.begin() + static_cast<long>(s), c_.end()));
  }

  // Number of leading zero coefficients, i.e. multiplicity of the root 0.
  std::size_t trailing_zero_count() const {
    std::size_t v = 0;
    while (v < c_.size() && c_[v] == 0) ++v;
    return v;
  }

  // Euclidean division: returns (quotient, remainder).
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly divmod: division by zero polynomial");
    Poly rem = a;
    Poly quot;
    long db = b.degree();
    Rat lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
      std::size_t shift = static_cast<std::size_t>(rem.degree() - db);
      Rat factor = rem.leading() / lead;
      Poly term = Poly::monomial(factor, shift);
      quot += term;
      rem -= term * b;
    }
    return {quot, rem};
  }

  friend Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("Poly exact_div: nonzero remainder");
    return q;
  }

  friend Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
      Poly r = divmod(x, y).second;
      x = y;
      y = r;
    }
    if (!x.is_zero()) x = x * (Rat(1) / x.leading());  // monic for determinism
    return x;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rat> c_;
};

}  // namespace qstirling
