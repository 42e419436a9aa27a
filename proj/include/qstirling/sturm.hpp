#pragma once

// Exact real-root location via Sturm chains. The chain is the signed
// remainder sequence of (p, p'); each element is rescaled to a primitive
// integer polynomial by a positive rational factor, which keeps every sign
// evaluation exact and the coefficient growth moderate. The standard chain of
// a non-squarefree polynomial still counts *distinct* real roots, which is
// what the counting helpers below return.

#include <vector>

#include "qstirling/poly.hpp"
#include "qstirling/rational.hpp"

namespace qstirling {

namespace sturm_detail {

// Scale by a positive rational so that coefficients become coprime integers.
inline Poly make_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  BigInt den_lcm = 1;
  for (const Rat& c : p.coeffs())
    if (c != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  BigInt num_gcd = 0;
  for (const Rat& c : p.coeffs()) {
    if (c == 0) continue;
    BigInt scaled = c.get_num() * exact_div(den_lcm, BigInt(c.get_den()));
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  return p * make_rat(den_lcm, num_gcd);
}

inline std::vector<Poly> chain(const Poly& p) {
  std::vector<Poly> seq;
  seq.push_back(make_primitive(p));
  Poly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(make_primitive(d));
  while (true) {
    const Poly& a = seq[seq.size() - 2];
    const Poly& b = seq[seq.size() - 1];
    Poly r = divmod(a, b).second;
    if (r.is_zero()) break;
    seq.push_back(make_primitive(-r));
  }
  return seq;
}

inline int sign_at_zero(const Poly& p) { return sign_of(p.coeff(0)); }

inline int sign_at_plus_inf(const Poly& p) { return sign_of(p.leading()); }

inline int sign_at_minus_inf(const Poly& p) {
  int s = sign_of(p.leading());
  return (p.degree() % 2 == 0) ? s : -s;
}

inline long variations(const std::vector<int>& signs) {
  long v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

template <class SignFn>
long variations_at(const std::vector<Poly>& seq, SignFn sign_fn) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const Poly& f : seq) signs.push_back(sign_fn(f));
  return variations(signs);
}

}  // namespace sturm_detail

// Number of distinct real roots of a nonzero polynomial.
inline long count_real_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
  if (p.degree() == 0) return 0;
  auto seq = sturm_detail::chain(p);
  return sturm_detail::variations_at(seq, sturm_detail::sign_at_minus_inf) -
         sturm_detail::variations_at(seq, sturm_detail::sign_at_plus_inf);
}

// Number of distinct roots in the open interval (0, +inf).
inline long count_positive_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("count_positive_roots: zero polynomial");
  Poly g = p.shifted_down(p.trailing_zero_count());
  if (g.degree() == 0) return 0;
  auto seq = sturm_detail::chain(g);
  return sturm_detail::variations_at(seq, sturm_detail::sign_at_zero) -
         sturm_detail::variations_at(seq, sturm_detail::sign_at_plus_inf);
}

// True when gcd(p, p') is constant, i.e. no repeated complex root.
inline bool is_squarefree(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("is_squarefree: zero polynomial");
  if (p.degree() <= 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace qstirling
