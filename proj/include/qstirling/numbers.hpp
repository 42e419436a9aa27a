#pragma once

// Exact integer combinatorics: factorials, binomials, Catalan and Narayana
// families, Stirling numbers of the second kind. Everything returns BigInt
// and every implied division is checked to be exact.

#include <stdexcept>

#include "qstirling/rational.hpp"

namespace qstirling {

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(const BigInt& n, unsigned long k) {
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// (2n-1)!! = 1*3*5*...*(2n-1); value 1 for n = 0.
inline BigInt odd_double_factorial(unsigned long n) {
  BigInt r = 1;
  for (unsigned long j = 1; j <= n; ++j) r *= BigInt(2 * j - 1);
  return r;
}

inline BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Quotient a/b, required to be exact.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("exact_div: division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw std::domain_error("exact_div: " + a.get_str() + " not divisible by " + b.get_str());
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt catalan(unsigned long n) {
  return exact_div(binomial(2 * n, n), BigInt(n + 1));
}

// k-Catalan number C(kn, n) / ((k-1)n + 1), the number of k-ary trees with n
// internal vertices.
inline BigInt k_catalan(unsigned long n, unsigned long k) {
  if (k < 1) throw std::invalid_argument("k_catalan: k must be >= 1");
  return exact_div(binomial(k * n, n), BigInt((k - 1) * n + 1));
}

// Narayana number: plane rooted trees with n edges and m leaves.
inline BigInt narayana(unsigned long n, unsigned long m) {
  if (n == 0) return m == 0 ? BigInt(1) : BigInt(0);
  if (m == 0 || m > n) return 0;
  return exact_div(binomial(n, m) * binomial(n, m - 1), BigInt(n));
}

// Stirling number of the second kind via the alternating closed form
// S(n,m) = (1/m!) * sum_j (-1)^j C(m,j) (m-j)^n.
inline BigInt stirling2(unsigned long n, unsigned long m) {
  if (m > n) return 0;
  if (m == 0) return n == 0 ? BigInt(1) : BigInt(0);
  BigInt acc = 0;
  for (unsigned long j = 0; j <= m; ++j) {
    BigInt term = binomial(m, j) * int_pow(BigInt(m - j), n);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return exact_div(acc, factorial(m));
}

inline Rat rat_binomial(unsigned long n, unsigned long k) {
  return Rat(binomial(n, k));
}

}  // namespace qstirling
