#pragma once

// Exact arithmetic scalars. BigInt and Rat are thin aliases over GMP's C++
// classes; the helpers below add the few operations the rest of the library
// needs (canonical construction, integrality checks, exact division).

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qstirling {

using BigInt = mpz_class;
using Rat = mpq_class;

// num/den with the canonical form enforced (gcd reduced, positive denominator).
inline Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den) {
  return make_rat(BigInt(num), BigInt(den));
}

inline bool is_integer(const Rat& a) { return a.get_den() == 1; }

// The numerator of an integer-valued rational; throws otherwise.
inline BigInt to_integer(const Rat& a) {
  if (!is_integer(a))
    throw std::domain_error("to_integer: " + a.get_str() + " is not an integer");
  return a.get_num();
}

inline int sign_of(const Rat& a) { return sgn(a); }
inline int sign_of(const BigInt& a) { return sgn(a); }

// Accepts "123", "-4/7" and the other forms mpq_class understands.
inline Rat parse_rat(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("parse_rat: cannot parse '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& a) { return a.get_str(); }
inline std::string to_string(const BigInt& a) { return a.get_str(); }

}  // namespace qstirling
