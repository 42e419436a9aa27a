#pragma once

// Truncated power series in one formal variable z over an exact coefficient
// ring (Rat, Poly or MPoly). The generating-function convention is part of
// the type: Series<C, Conv::egf> stores c_n with the series reading
// sum c_n z^n / n!, Series<C, Conv::ogf> reads sum c_n z^n. Mixing the two
// conventions in arithmetic therefore fails to compile.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qstirling/mpoly.hpp"
#include "qstirling/numbers.hpp"
#include "qstirling/poly.hpp"
#include "qstirling/rational.hpp"

namespace qstirling {

enum class Conv { egf, ogf };

namespace series_detail {

template <class C>
struct ring;

template <>
struct ring<Rat> {
  static Rat one() { return Rat(1); }
  static bool is_zero(const Rat& a) { return a == 0; }
};

template <>
struct ring<Poly> {
  static Poly one() { return Poly(Rat(1)); }
  static bool is_zero(const Poly& a) { return a.is_zero(); }
};

template <>
struct ring<MPoly> {
  static MPoly one() { return MPoly::constant(1); }
  static bool is_zero(const MPoly& a) { return a.is_zero(); }
};

inline Rat coeff_exact_div(const Rat& a, const Rat& b) {
  if (b == 0) throw std::domain_error("series division by zero constant term");
  return a / b;
}

inline Poly coeff_exact_div(const Poly& a, const Poly& b) { return exact_div(a, b); }

}  // namespace series_detail

template <class C, Conv V>
class Series {
 public:
  explicit Series(std::size_t order) : c_(order + 1) {}

  static Series constant(const C& value, std::size_t order) {
    Series s(order);
    s.c_[0] = value;
    return s;
  }

  static Series from_coeffs(std::vector<C> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("Series: empty coefficient list");
    Series s(coeffs.size() - 1);
    s.c_ = std::move(coeffs);
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }

  const C& coeff(std::size_t n) const {
    if (n >= c_.size()) throw std::out_of_range("Series::coeff: beyond truncation order");
    return c_[n];
  }

  void set_coeff(std::size_t n, const C& value) {
    if (n >= c_.size()) throw std::out_of_range("Series::set_coeff: beyond truncation order");
    c_[n] = value;
  }

  Series truncated(std::size_t new_order) const {
    if (new_order > order()) throw std::invalid_argument("Series::truncated: cannot extend");
    Series s(new_order);
    for (std::size_t i = 0; i <= new_order; ++i) s.c_[i] = c_[i];
    return s;
  }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!series_detail::ring<C>::is_zero(c)) return false;
    return true;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series r(check_same_order(a, b));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }

  friend Series operator-(const Series& a, const Series& b) {
    Series r(check_same_order(a, b));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }

  friend Series operator*(const Series& a, const Series& b) {
    std::size_t n = check_same_order(a, b);
    Series r(n);
    for (std::size_t m = 0; m <= n; ++m) {
      C acc{};
      for (std::size_t j = 0; j <= m; ++j) {
        C term = a.c_[j] * b.c_[m - j];
        if constexpr (V == Conv::egf) term = term * rat_binomial(m, j);
        acc = acc + term;
      }
      r.c_[m] = acc;
    }
    return r;
  }

  friend Series operator*(const Series& a, const Rat& s) {
    Series r = a;
    for (auto& c : r.c_) c = c * s;
    return r;
  }

  Series pow(unsigned long e) const {
    Series result = constant(series_detail::ring<C>::one(), order());
    Series base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  static std::size_t check_same_order(const Series& a, const Series& b) {
    if (a.order() != b.order())
      throw std::invalid_argument("Series arithmetic: truncation orders differ");
    return a.order();
  }

  std::vector<C> c_;
};

template <class C>
Series<C, Conv::ogf> to_ogf(const Series<C, Conv::egf>& s) {
  Series<C, Conv::ogf> r(s.order());
  Rat f(1);
  for (std::size_t n = 0; n <= s.order(); ++n) {
    if (n > 0) f *= Rat(static_cast<long>(n));
    r.set_coeff(n, s.coeff(n) * (Rat(1) / f));
  }
  return r;
}

template <class C>
Series<C, Conv::egf> to_egf(const Series<C, Conv::ogf>& s) {
  Series<C, Conv::egf> r(s.order());
  Rat f(1);
  for (std::size_t n = 0; n <= s.order(); ++n) {
    if (n > 0) f *= Rat(static_cast<long>(n));
    r.set_coeff(n, s.coeff(n) * f);
  }
  return r;
}

namespace series_detail {

// Plain (ogf-style) truncated product of coefficient vectors.
template <class C>
std::vector<C> plain_mul(const std::vector<C>& a, const std::vector<C>& b) {
  std::size_t n = a.size() - 1;
  std::vector<C> r(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (ring<C>::is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

template <class C, Conv V>
std::vector<C> plain_coeffs(const Series<C, V>& s) {
  std::vector<C> r(s.order() + 1);
  Rat f(1);
  for (std::size_t n = 0; n <= s.order(); ++n) {
    if (n > 0) f *= Rat(static_cast<long>(n));
    if constexpr (V == Conv::egf)
      r[n] = s.coeff(n) * (Rat(1) / f);
    else
      r[n] = s.coeff(n);
  }
  return r;
}

template <class C, Conv V>
Series<C, V> from_plain(std::vector<C> plain) {
  if constexpr (V == Conv::egf) {
    Rat f(1);
    for (std::size_t n = 0; n < plain.size(); ++n) {
      if (n > 0) f *= Rat(static_cast<long>(n));
      plain[n] = plain[n] * f;
    }
  }
  return Series<C, V>::from_coeffs(std::move(plain));
}

}  // namespace series_detail

template <class C, Conv V>
Series<C, V> series_pow(const Series<C, V>& s, unsigned long e) {
  return s.pow(e);
}

// Functional composition outer(inner(z)); inner must have zero constant term.
template <class C, Conv V>
Series<C, V> series_compose(const Series<C, V>& outer, const Series<C, V>& inner) {
  if (outer.order() != inner.order())
    throw std::invalid_argument("series_compose: truncation orders differ");
  if (!series_detail::ring<C>::is_zero(inner.coeff(0)))
    throw std::invalid_argument("series_compose: inner constant term must vanish");
  auto o = series_detail::plain_coeffs(outer);
  auto in = series_detail::plain_coeffs(inner);
  std::vector<C> acc(o.size());
  for (std::size_t j = o.size(); j-- > 0;) {
    acc = series_detail::plain_mul(acc, in);
    acc[0] = acc[0] + o[j];
  }
  return series_detail::from_plain<C, V>(std::move(acc));
}

// exp of a series with zero constant term.
template <class C, Conv V>
Series<C, V> series_exp(const Series<C, V>& f) {
  if (!series_detail::ring<C>::is_zero(f.coeff(0)))
    throw std::invalid_argument("series_exp: constant term must vanish");
  auto fp = series_detail::plain_coeffs(f);
  std::size_t n = fp.size() - 1;
  std::vector<C> g(n + 1);
  g[0] = series_detail::ring<C>::one();
  for (std::size_t m = 1; m <= n; ++m) {
    C acc{};
    for (std::size_t i = 1; i <= m; ++i)
      acc = acc + fp[i] * Rat(static_cast<long>(i)) * g[m - i];
    g[m] = acc * make_rat(1, static_cast<long>(m));
  }
  return series_detail::from_plain<C, V>(std::move(g));
}

// log of a series with constant term one.
template <class C, Conv V>
Series<C, V> series_log(const Series<C, V>& g) {
  auto gp = series_detail::plain_coeffs(g);
  if (!(gp[0] == series_detail::ring<C>::one()))
    throw std::invalid_argument("series_log: constant term must be one");
  std::size_t n = gp.size() - 1;
  std::vector<C> h(n + 1);
  for (std::size_t m = 1; m <= n; ++m) {
    C acc = gp[m] * Rat(static_cast<long>(m));
    for (std::size_t i = 1; i < m; ++i)
      acc = acc - h[i] * Rat(static_cast<long>(i)) * gp[m - i];
    h[m] = acc * make_rat(1, static_cast<long>(m));
  }
  return series_detail::from_plain<C, V>(std::move(h));
}

// Quotient num/den when every stepwise coefficient division is exact in the
// coefficient ring (used with polynomial coefficients whose constant term is
// not a unit, e.g. 1-t).
template <class C, Conv V>
Series<C, V> series_div_exact(const Series<C, V>& num, const Series<C, V>& den) {
  if (num.order() != den.order())
    throw std::invalid_argument("series_div_exact: truncation orders differ");
  std::size_t n = num.order();
  Series<C, V> q(n);
  for (std::size_t m = 0; m <= n; ++m) {
    C acc = num.coeff(m);
    for (std::size_t j = 0; j < m; ++j) {
      C term = q.coeff(j) * den.coeff(m - j);
      if constexpr (V == Conv::egf) term = term * rat_binomial(m, j);
      acc = acc - term;
    }
    q.set_coeff(m, series_detail::coeff_exact_div(acc, den.coeff(0)));
  }
  return q;
}

using PolySeries = Series<Poly, Conv::egf>;
using MPolySeries = Series<MPoly, Conv::egf>;

}  // namespace qstirling
