#pragma once

// Generating polynomials of the word families.
//
// Three independent computation routes feed the cross-checks downstream:
//   - a first-order polynomial recurrence for p_{n,r}(t), whose r = 1 slice
//     is the Eulerian polynomial A_n(t) (final position counted as a
//     descent, so A_n = t times the classical polynomial);
//   - Lagrange-style coefficient extraction from powers of the Eulerian
//     series, yielding the descent polynomial Qbar_n(t) of quasi-Stirling
//     words and its trivariate k-generalization Pbar^(k)_n(q,t,u);
//   - a term-by-term EGF solution of the product ODE
//     P' = (P-1+q)(P-1+t)(P-1+u)^{k-1}, yielding the joint statistic
//     polynomials P_n(q,t,u) of k-Stirling words.
//
// Counting polynomials must come out with integer coefficients; a
// non-integer coefficient after the exact rational arithmetic is a hard
// error, never rounded away.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qstirling/mpoly.hpp"
#include "qstirling/numbers.hpp"
#include "qstirling/poly.hpp"
#include "qstirling/rational.hpp"
#include "qstirling/series.hpp"

namespace qstirling {

// ------------------------------------------------ Eulerian and p_{n,r} ----

// p_{r,r} = t and p_{m,r} = m t p_{m-1,r} + t(1-t) p'_{m-1,r}.
inline Poly p_recurrence(long n, long r) {
  if (r < 1 || r > n) throw std::invalid_argument("p_recurrence: need 1 <= r <= n");
  Poly t = Poly::variable();
  Poly one_minus_t = Poly(Rat(1)) - t;
  Poly p = t;
  for (long m = r + 1; m <= n; ++m)
    p = Rat(m) * t * p + t * one_minus_t * p.derivative();
  return p;
}

// Descent polynomial of S_n. Sum of coefficients is n!.
inline Poly eulerian(long n) {
  if (n < 1) throw std::invalid_argument("eulerian: need n >= 1");
  return p_recurrence(n, 1);
}

// r-excedance polynomial of injections [n-r] -> [n]; equals p_{n,r}/t.
inline Poly j_poly(long n, long r) { return p_recurrence(n, r).shifted_down(1); }

// A_{n,r}(t) = r! t^{n-r} J_{n,r}(1/t), the reversal of j_poly.
inline Poly a_excedance_poly(long n, long r) {
  Poly j = j_poly(n, r);
  return j.reversed(static_cast<std::size_t>(n - r)) * Rat(factorial(static_cast<unsigned long>(r)));
}

// EGF of the Eulerian polynomials, coefficient n = eulerian(n), constant 1.
inline PolySeries eulerian_series(std::size_t order) {
  PolySeries s(order);
  s.set_coeff(0, Poly(Rat(1)));
  for (std::size_t n = 1; n <= order; ++n) s.set_coeff(n, eulerian(static_cast<long>(n)));
  return s;
}

// The same series from the closed form (1-t) / (1 - t e^{(1-t)z}); every
// stepwise coefficient division by 1-t is exact.
inline PolySeries eulerian_series_closed_form(std::size_t order) {
  Poly t = Poly::variable();
  Poly one(Rat(1));
  PolySeries lin(order);
  if (order >= 1) lin.set_coeff(1, one - t);
  PolySeries expo = series_exp(lin);
  PolySeries num = PolySeries::constant(one - t, order);
  PolySeries den = PolySeries::constant(one, order) - PolySeries::constant(t, order) * expo;
  return series_div_exact(num, den);
}

// Bivariate (asc, des) polynomial of S_n: the coefficient of t^d in A_n
// becomes the coefficient of q^{n+1-d} t^d, homogeneous of degree n+1.
inline MPoly homogenized_eulerian(long n) {
  if (n < 0) throw std::invalid_argument("homogenized_eulerian: need n >= 0");
  if (n == 0) return MPoly::constant(1);
  Poly a = eulerian(n);
  MPoly r;
  for (std::size_t d = 0; d < a.coeffs().size(); ++d) {
    const Rat& c = a.coeffs()[d];
    if (c == 0) continue;
    r += MPoly::term(c, static_cast<unsigned>(n + 1) - static_cast<unsigned>(d),
                     static_cast<unsigned>(d), 0);
  }
  return r;
}

inline MPolySeries hat_a_series(std::size_t order) {
  MPolySeries s(order);
  s.set_coeff(0, MPoly::constant(1));
  for (std::size_t n = 1; n <= order; ++n)
    s.set_coeff(n, homogenized_eulerian(static_cast<long>(n)));
  return s;
}

// ------------------------------------------- Lagrange coefficient route ----

namespace genfunc_detail {

inline void require_integer_coeffs(const Poly& p, const char* who) {
  for (const Rat& c : p.coeffs())
    if (!is_integer(c)) throw std::logic_error(std::string(who) + ": non-integer coefficient");
}

inline void require_integer_coeffs(const MPoly& p, const char* who) {
  for (const auto& [e, c] : p.terms())
    if (!is_integer(c)) throw std::logic_error(std::string(who) + ": non-integer coefficient");
}

}  // namespace genfunc_detail

// Descent polynomial Qbar_n(t) of quasi-Stirling words: the z^n EGF
// coefficient of A(t,z)^{n+1}, divided by n+1.
inline Poly quasi_stirling_poly(long n) {
  if (n < 0) throw std::invalid_argument("quasi_stirling_poly: need n >= 0");
  PolySeries a = eulerian_series(static_cast<std::size_t>(n));
  Poly top = a.pow(static_cast<unsigned long>(n) + 1).coeff(static_cast<std::size_t>(n));
  Poly q = top * make_rat(1, n + 1);
  genfunc_detail::require_integer_coeffs(q, "quasi_stirling_poly");
  return q;
}

inline PolySeries quasi_stirling_series(std::size_t order) {
  PolySeries s(order);
  for (std::size_t n = 0; n <= order; ++n)
    s.set_coeff(n, quasi_stirling_poly(static_cast<long>(n)));
  return s;
}

// Joint (asc, des, plat) polynomial Pbar^(k)_n(q,t,u) of k-quasi-Stirling
// words: the z^n EGF coefficient of (hat A - 1 + u)^{(k-1)n+1}, divided by
// (k-1)n+1. Every monomial has total degree kn+1.
inline MPoly k_quasi_poly(long n, long k) {
  if (n < 1 || k < 1) throw std::invalid_argument("k_quasi_poly: need n >= 1 and k >= 1");
  unsigned long e = static_cast<unsigned long>((k - 1) * n + 1);
  MPolySeries base = hat_a_series(static_cast<std::size_t>(n));
  base.set_coeff(0, MPoly::variable(Var::u));
  MPoly top = base.pow(e).coeff(static_cast<std::size_t>(n));
  MPoly p = top * make_rat(1, (k - 1) * n + 1);
  genfunc_detail::require_integer_coeffs(p, "k_quasi_poly");
  return p;
}

inline MPolySeries k_quasi_series(long k, std::size_t order) {
  MPolySeries s(order);
  s.set_coeff(0, MPoly::constant(1));
  for (std::size_t n = 1; n <= order; ++n)
    s.set_coeff(n, k_quasi_poly(static_cast<long>(n), k));
  return s;
}

// Plateau marginal Pbar^(k)_n(1,1,u) without carrying the other two
// variables: the base series collapses to u + sum_{m>=1} m! z^m/m!. The
// result equals the u-marginal of k_quasi_poly (cross-checked in tests) and
// for k = 2 its coefficients are n! times the Narayana numbers.
inline Poly plateau_marginal_poly(long n, long k = 2) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("plateau_marginal_poly: need n >= 1 and k >= 1");
  unsigned long e = static_cast<unsigned long>((k - 1) * n + 1);
  PolySeries base(static_cast<std::size_t>(n));
  base.set_coeff(0, Poly::variable());
  for (std::size_t m = 1; m <= static_cast<std::size_t>(n); ++m)
    base.set_coeff(m, Poly(Rat(factorial(m))));
  Poly p = base.pow(e).coeff(static_cast<std::size_t>(n)) * make_rat(1, (k - 1) * n + 1);
  genfunc_detail::require_integer_coeffs(p, "plateau_marginal_poly");
  return p;
}

// ---------------------------------------------------------- ODE route ----

// EGF solution of P' = (P-1+q)(P-1+t)(P-1+u)^{k-1} with P(0) = 1; the z^n
// coefficient is the joint statistic polynomial P_n(q,t,u) over k-Stirling
// words. The coefficient of z^{n+1} only needs P through order n, so the
// series builds up one term at a time.
inline MPolySeries stirling_ode_series(long k, std::size_t order) {
  if (k < 1) throw std::invalid_argument("stirling_ode_series: need k >= 1");
  MPoly one = MPoly::constant(1);
  MPoly q = MPoly::variable(Var::q);
  MPoly t = MPoly::variable(Var::t);
  MPoly u = MPoly::variable(Var::u);

  MPolySeries p(order);
  p.set_coeff(0, one);
  for (std::size_t n = 0; n < order; ++n) {
    MPolySeries trunc = p.truncated(n);
    MPolySeries shifted = trunc - MPolySeries::constant(one, n);
    MPolySeries fq = shifted + MPolySeries::constant(q, n);
    MPolySeries ft = shifted + MPolySeries::constant(t, n);
    MPolySeries fu = shifted + MPolySeries::constant(u, n);
    MPolySeries rhs = fq * ft * fu.pow(static_cast<unsigned long>(k - 1));
    p.set_coeff(n + 1, rhs.coeff(n));
  }
  for (std::size_t n = 0; n <= order; ++n)
    genfunc_detail::require_integer_coeffs(p.coeff(n), "stirling_ode_series");
  return p;
}

// Descent polynomial Q_n(t) of k-Stirling words, read off the ODE solution
// at q = u = 1.
inline Poly stirling_poly(long n, long k = 2) {
  if (n < 0) throw std::invalid_argument("stirling_poly: need n >= 0");
  MPoly p = stirling_ode_series(k, static_cast<std::size_t>(n)).coeff(static_cast<std::size_t>(n));
  return p.substitute(Var::q, Rat(1)).substitute(Var::u, Rat(1)).to_univariate(Var::t);
}

// -------------------------------------------------- named coefficients ----

// Leaf-count polynomial of plane trees with n edges.
inline Poly narayana_poly(long n) {
  if (n < 0) throw std::invalid_argument("narayana_poly: need n >= 0");
  if (n == 0) return Poly(Rat(1));
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
  for (long m = 1; m <= n; ++m)
    c[static_cast<std::size_t>(m)] =
        Rat(narayana(static_cast<unsigned long>(n), static_cast<unsigned long>(m)));
  return Poly::from_coeffs(std::move(c));
}

// ------------------------------------------- functional-equation residuals ----

namespace genfunc_detail {

// Multiply an EGF by z: coefficient m picks up m times coefficient m-1.
template <class C>
Series<C, Conv::egf> times_z(const Series<C, Conv::egf>& f) {
  Series<C, Conv::egf> r(f.order());
  for (std::size_t m = 1; m <= f.order(); ++m)
    r.set_coeff(m, f.coeff(m - 1) * Rat(static_cast<long>(m)));
  return r;
}

}  // namespace genfunc_detail

// A(t, z Qbar(t,z)) - Qbar(t,z), identically zero to truncation order.
inline PolySeries quasi_functional_residual(std::size_t order) {
  PolySeries a = eulerian_series(order);
  PolySeries qbar = quasi_stirling_series(order);
  return series_compose(a, genfunc_detail::times_z(qbar)) - qbar;
}

// hat A(q, t, z (Pbar - 1 + u)^{k-1}) - Pbar(q,t,u;z), identically zero.
inline MPolySeries k_quasi_functional_residual(long k, std::size_t order) {
  if (k < 1) throw std::invalid_argument("k_quasi_functional_residual: need k >= 1");
  MPolySeries ahat = hat_a_series(order);
  MPolySeries pbar = k_quasi_series(k, order);
  MPolySeries shifted =
      pbar - MPolySeries::constant(MPoly::constant(1), order) +
      MPolySeries::constant(MPoly::variable(Var::u), order);
  MPolySeries inner = genfunc_detail::times_z(shifted.pow(static_cast<unsigned long>(k - 1)));
  return series_compose(ahat, inner) - pbar;
}

}  // namespace qstirling
