#pragma once

// Verification layer: exact root certificates, moment and mode reports,
// coefficient identities between the descent polynomials and classical
// counting sequences, and brute-force oracles that recompute the
// formula-derived polynomials from raw enumerations.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qstirling/bijections.hpp"
#include "qstirling/config.hpp"
#include "qstirling/genfunc.hpp"
#include "qstirling/numbers.hpp"
#include "qstirling/poly.hpp"
#include "qstirling/rational.hpp"
#include "qstirling/sturm.hpp"
#include "qstirling/words.hpp"

namespace qstirling {

// ------------------------------------------------------- root structure ----

// real_root_count counts distinct real roots (Sturm), so all_real holding
// requires squarefreeness as well; all_nonpositive means no root in
// (0, +inf).
struct RootReport {
  bool all_real = false;
  bool all_distinct = false;
  bool all_nonpositive = false;
  long real_root_count = 0;
  long degree = 0;
};

inline RootReport root_report(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("root_report: zero polynomial");
  RootReport r;
  r.degree = p.degree();
  r.real_root_count = count_real_roots(p);
  r.all_real = (r.real_root_count == r.degree);
  r.all_distinct = is_squarefree(p);
  r.all_nonpositive = (count_positive_roots(p) == 0);
  return r;
}

// ------------------------------------------------------ moments and modes ----

inline std::set<long> mode_indices(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("mode_indices: zero polynomial");
  Rat best = p.coeffs()[0];
  for (const Rat& c : p.coeffs()) best = std::max(best, c);
  std::set<long> modes;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i] == best) modes.insert(static_cast<long>(i));
  return modes;
}

struct MomentReport {
  Rat mean;
  Rat variance;
  std::set<long> mode_indices;
  BigInt population;
};

inline MomentReport moment_report(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("moment_report: zero polynomial");
  Rat total = p.evaluate_at(Rat(1));
  if (total == 0) throw std::domain_error("moment_report: polynomial vanishes at 1");
  Poly d1 = p.derivative();
  Poly d2 = d1.derivative();
  MomentReport r;
  r.mean = d1.evaluate_at(Rat(1)) / total;
  r.variance = (d1.evaluate_at(Rat(1)) + d2.evaluate_at(Rat(1))) / total - r.mean * r.mean;
  r.mode_indices = mode_indices(p);
  r.population = to_integer(total);
  return r;
}

// Every coefficient maximizer of a real-rooted nonnegative polynomial lies
// within distance one of the mean; this checks that consequence directly.
inline bool check_darroch(const Poly& p, const Rat& target_mean) {
  for (long m : mode_indices(p)) {
    Rat gap = Rat(m) - target_mean;
    if (gap < 0) gap = -gap;
    if (!(gap < 1)) return false;
  }
  return true;
}

// --------------------------------------------------- coefficient identities ----

struct IdentityCheck {
  bool ok = true;
  long first_failing_index = -1;  // -1 when ok
  Rat expansion_side;             // series expansion value at the failure
  Rat closed_side;                // closed-form value at the failure
};

namespace analysis_detail {

// Coefficient of t^m in p(t) / (1-t)^power.
inline Rat quotient_coeff(const Poly& p, long power, long m) {
  Rat acc(0);
  long dmax = std::min<long>(p.degree(), m);
  for (long d = 0; d <= dmax; ++d)
    acc += p.coeff(static_cast<std::size_t>(d)) *
           Rat(binomial(BigInt(m - d + power - 1), static_cast<unsigned long>(power - 1)));
  return acc;
}

inline IdentityCheck compare_coeffs(const Poly& numerator, long power, long M,
                                    const std::function<Rat(long)>& closed_form) {
  IdentityCheck r;
  for (long m = 0; m <= M; ++m) {
    Rat lhs = quotient_coeff(numerator, power, m);
    Rat rhs = closed_form(m);
    if (lhs != rhs) {
      r.ok = false;
      r.first_failing_index = m;
      r.expansion_side = lhs;
      r.closed_side = rhs;
      return r;
    }
  }
  return r;
}

}  // namespace analysis_detail

// Coefficient m of Qbar_n(t)/(1-t)^{2n+1} equals m^n (m+n choose m)/(n+1),
// checked exactly for 0 <= m <= M. Accepts the numerator explicitly so that
// perturbed polynomials can serve as negative controls.
inline IdentityCheck verify_thm_qqn(long n, long M, const Poly& qbar) {
  if (n < 1 || M < 1) throw std::invalid_argument("verify_thm_qqn: need n >= 1 and M >= 1");
  return analysis_detail::compare_coeffs(qbar, 2 * n + 1, M, [n](long m) -> Rat {
    BigInt num = int_pow(BigInt(m), static_cast<unsigned long>(n)) *
                 binomial(BigInt(m + n), static_cast<unsigned long>(m));
    return make_rat(num, BigInt(n + 1));
  });
}

inline IdentityCheck verify_thm_qqn(long n, long M) {
  return verify_thm_qqn(n, M, quasi_stirling_poly(n));
}

// Coefficient m of Q_n(t)/(1-t)^{2n+1} equals the partition count S(m+n, m).
inline IdentityCheck verify_thm_gs(long n, long M) {
  if (n < 0 || M < 1) throw std::invalid_argument("verify_thm_gs: need n >= 0 and M >= 1");
  Poly qn = stirling_poly(n, 2);
  return analysis_detail::compare_coeffs(qn, 2 * n + 1, M, [n](long m) -> Rat {
    return Rat(stirling2(static_cast<unsigned long>(m + n), static_cast<unsigned long>(m)));
  });
}

// (Qbar_n'(1) + Qbar_n''(1)) / n! against its closed form
// (27n^3+10n^2-9n-4) / (12n(n+1)) * (2n-2 choose n-1).
inline bool second_moment_identity(long n) {
  if (n < 1) throw std::invalid_argument("second_moment_identity: need n >= 1");
  Poly q = quasi_stirling_poly(n);
  Poly d1 = q.derivative();
  Poly d2 = d1.derivative();
  Rat lhs = (d1.evaluate_at(Rat(1)) + d2.evaluate_at(Rat(1))) /
            Rat(factorial(static_cast<unsigned long>(n)));
  BigInt nn(n);
  BigInt num = 27 * nn * nn * nn + 10 * nn * nn - 9 * nn - 4;
  Rat rhs = make_rat(num * binomial(static_cast<unsigned long>(2 * n - 2),
                                    static_cast<unsigned long>(n - 1)),
                     BigInt(12) * nn * (nn + 1));
  return lhs == rhs;
}

// ------------------------------------------------------------- oracles ----

namespace analysis_detail {

inline void injection_scan(long n, long r, long i, long exc, std::vector<bool>& used,
                           std::vector<long>& counts) {
  long s = n - r;
  if (i > s) {
    ++counts[static_cast<std::size_t>(exc)];
    return;
  }
  for (long v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    used[static_cast<std::size_t>(v)] = true;
    injection_scan(n, r, i + 1, exc + (v > i ? 1 : 0), used, counts);
    used[static_cast<std::size_t>(v)] = false;
  }
}

}  // namespace analysis_detail

// Excedance distribution over all injections [n-r] -> [n] by direct
// enumeration; must coincide with j_poly(n, r).
inline Poly excedance_oracle(long n, long r) {
  if (r < 1 || r > n) throw std::invalid_argument("excedance_oracle: need 1 <= r <= n");
  long s = n - r;
  BigInt total = 1;
  for (long i = 0; i < s; ++i) total *= (n - i);
  if (total > 50'000'000)
    throw enumeration_limit_error("excedance_oracle: too many injections to enumerate");
  std::vector<long> counts(static_cast<std::size_t>(s) + 1, 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  analysis_detail::injection_scan(n, r, 1, 0, used, counts);
  std::vector<Rat> coeffs(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) coeffs[i] = Rat(counts[i]);
  return Poly::from_coeffs(std::move(coeffs));
}

// ----------------------------------------------- empirical distributions ----

enum class Stat { asc, des, plat };
enum class WordFamily { quasi, stirling };

template <class Fn>
void for_each_family_word(WordFamily family, int n, int k, const Config& cfg, Fn&& fn) {
  if (family == WordFamily::quasi)
    for_each_k_quasi_stirling(n, k, cfg, fn);
  else
    for_each_k_stirling(n, k, cfg, fn);
}

// Exact distribution of one statistic over the chosen word family.
inline Poly empirical_distribution(Stat stat, int n, int k,
                                   WordFamily family = WordFamily::quasi,
                                   const Config& cfg = Config{}) {
  std::vector<long> counts(static_cast<std::size_t>(k) * static_cast<std::size_t>(n) + 2, 0);
  for_each_family_word(family, n, k, cfg, [&](const MultisetWord& w) {
    StatTriple s = statistics(w);
    long v = stat == Stat::asc ? s.asc : stat == Stat::des ? s.des : s.plat;
    ++counts[static_cast<std::size_t>(v)];
  });
  std::vector<Rat> coeffs(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) coeffs[i] = Rat(counts[i]);
  return Poly::from_coeffs(std::move(coeffs));
}

// Joint q^asc t^des u^plat distribution.
inline MPoly empirical_joint(int n, int k, WordFamily family = WordFamily::quasi,
                             const Config& cfg = Config{}) {
  MPoly acc;
  for_each_family_word(family, n, k, cfg, [&](const MultisetWord& w) {
    StatTriple s = statistics(w);
    acc += MPoly::term(Rat(1), static_cast<unsigned>(s.asc), static_cast<unsigned>(s.des),
                       static_cast<unsigned>(s.plat));
  });
  return acc;
}

// --------------------------------------------- distribution shape report ----

// Desk-scale comparison of the standardized descent distribution with the
// standard normal CDF, evaluated at half-integer cut points. Informational
// only: no tolerance is attached to the gap.
struct NormalComparisonRow {
  long value = 0;
  double empirical_cdf = 0.0;
  double normal_cdf = 0.0;
};

struct NormalComparison {
  long n = 0;
  double mean = 0.0;
  double stddev = 0.0;
  double max_abs_gap = 0.0;
  std::vector<NormalComparisonRow> rows;
};

inline NormalComparison normal_sanity_report(long n) {
  Poly p = quasi_stirling_poly(n);
  MomentReport m = moment_report(p);
  NormalComparison r;
  r.n = n;
  r.mean = m.mean.get_d();
  r.stddev = std::sqrt(m.variance.get_d());
  double total = Rat(m.population).get_d();
  double cumulative = 0.0;
  for (long d = 0; d <= p.degree(); ++d) {
    cumulative += p.coeff(static_cast<std::size_t>(d)).get_d();
    double x = (static_cast<double>(d) + 0.5 - r.mean) / r.stddev;
    double phi = 0.5 * std::erfc(-x / std::sqrt(2.0));
    NormalComparisonRow row{d, cumulative / total, phi};
    r.max_abs_gap = std::max(r.max_abs_gap, std::abs(row.empirical_cdf - row.normal_cdf));
    r.rows.push_back(row);
  }
  return r;
}

}  // namespace qstirling
