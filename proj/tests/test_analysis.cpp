#include <catch2/catch_amalgamated.hpp>
#include <set>
#include <vector>

#include "oracle.hpp"
#include "qstirling/qstirling.hpp"

using namespace qstirling;

namespace {

Poly poly_from(std::vector<long> coeffs) {
  std::vector<Rat> r(coeffs.begin(), coeffs.end());
  return Poly::from_coeffs(std::move(r));
}

}  // namespace

TEST_CASE("root reports certify the easy cases", "[analysis]") {
  RootReport linear = root_report(poly_from({1, 1}));  // t + 1
  CHECK(linear.all_real);
  CHECK(linear.all_distinct);
  CHECK(linear.all_nonpositive);
  CHECK(linear.real_root_count == 1);
  CHECK(linear.degree == 1);

  RootReport complex_pair = root_report(poly_from({1, 0, 1}));  // t^2 + 1
  CHECK_FALSE(complex_pair.all_real);
  CHECK(complex_pair.real_root_count == 0);
  CHECK(complex_pair.all_nonpositive);  // vacuously: nothing in (0, inf)

  RootReport doubled = root_report(poly_from({1, 2, 1}));  // (t+1)^2
  CHECK_FALSE(doubled.all_real);  // the count is of distinct roots
  CHECK_FALSE(doubled.all_distinct);
  CHECK(doubled.real_root_count == 1);
  CHECK(doubled.all_nonpositive);

  RootReport positive = root_report(poly_from({2, -3, 1}));  // (t-1)(t-2)
  CHECK(positive.all_real);
  CHECK(positive.all_distinct);
  CHECK_FALSE(positive.all_nonpositive);

  RootReport at_zero = root_report(poly_from({0, 1, 1}));  // t(t+1)
  CHECK(at_zero.all_real);
  CHECK(at_zero.all_nonpositive);
  CHECK(at_zero.real_root_count == 2);

  CHECK_THROWS_AS(root_report(Poly()), std::domain_error);
}

TEST_CASE("descent polynomials have simple nonpositive real roots", "[analysis]") {
  for (long n = 1; n <= 9; ++n) {
    RootReport r = root_report(quasi_stirling_poly(n));
    CHECK(r.all_real);
    CHECK(r.all_distinct);
    CHECK(r.all_nonpositive);
  }
  for (long n = 1; n <= 7; ++n)
    for (long r = 1; r <= n; ++r) {
      RootReport report = root_report(p_recurrence(n, r));
      CHECK(report.all_real);
      CHECK(report.all_distinct);
      CHECK(report.all_nonpositive);
      RootReport mirrored = root_report(a_excedance_poly(n, r));
      CHECK(mirrored.all_real);
      CHECK(mirrored.all_distinct);
      CHECK(mirrored.all_nonpositive);
    }
}

TEST_CASE("modes and moments of small descent polynomials", "[analysis]") {
  CHECK(mode_indices(poly_from({0, 1, 3})) == std::set<long>{2});
  CHECK(mode_indices(poly_from({0, 1, 11, 11, 1})) == std::set<long>{2, 3});
  CHECK_THROWS_AS(mode_indices(Poly()), std::domain_error);

  MomentReport m = moment_report(poly_from({0, 1, 3}));  // distribution of des at n = 2
  CHECK(m.population == 4);
  CHECK(m.mean == make_rat(7, 4));
  CHECK(m.variance == make_rat(11 * 4 - 12 - 5, 48 * 3));
  CHECK(m.mode_indices == std::set<long>{2});

  CHECK_THROWS_AS(moment_report(poly_from({-1, 1})), std::domain_error);  // vanishes at 1
  CHECK_THROWS_AS(moment_report(Poly()), std::domain_error);
}

TEST_CASE("descent moments match the closed forms", "[analysis]") {
  for (long n = 2; n <= 10; ++n) {
    MomentReport m = moment_report(quasi_stirling_poly(n));
    CHECK(m.mean == make_rat(3 * n + 1, 4));
    CHECK(m.variance == make_rat(11 * n * n - 6 * n - 5, 48 * (2 * n - 1)));
    CHECK(check_darroch(quasi_stirling_poly(n), m.mean));
  }
  for (long n = 1; n <= 10; ++n) {
    MomentReport p = moment_report(plateau_marginal_poly(n));
    CHECK(p.mean == make_rat(n + 1, 2));
    CHECK(check_darroch(plateau_marginal_poly(n), p.mean));
  }
  // empirical distributions agree at enumerable sizes
  for (int n = 1; n <= 5; ++n) {
    CHECK(empirical_distribution(Stat::des, n, 2) == quasi_stirling_poly(n));
    CHECK(empirical_distribution(Stat::plat, n, 2) == plateau_marginal_poly(n));
  }
}

TEST_CASE("ascents and descents are equidistributed over the quasi family", "[analysis]") {
  for (int n = 1; n <= 5; ++n)
    CHECK(empirical_distribution(Stat::asc, n, 2) == empirical_distribution(Stat::des, n, 2));
}

TEST_CASE("darroch check flags means far from every mode", "[analysis]") {
  Poly p = poly_from({1, 1});
  CHECK(check_darroch(p, make_rat(1, 2)));
  CHECK_FALSE(check_darroch(p, Rat(3)));
}

TEST_CASE("second moment identity holds for small sizes", "[analysis]") {
  for (long n = 1; n <= 10; ++n) CHECK(second_moment_identity(n));
}

TEST_CASE("coefficient identity for the quasi descent polynomial", "[analysis]") {
  for (long n = 1; n <= 5; ++n) {
    IdentityCheck c = verify_thm_qqn(n, 2 * n + 4);
    CHECK(c.ok);
    CHECK(c.first_failing_index == -1);
  }

  // a perturbed polynomial is rejected at the first wrong coefficient
  Poly wrong = quasi_stirling_poly(4) + Poly::monomial(Rat(1), 2);
  IdentityCheck c = verify_thm_qqn(4, 12, wrong);
  CHECK_FALSE(c.ok);
  CHECK(c.first_failing_index == 2);
  CHECK(c.expansion_side != c.closed_side);
}

TEST_CASE("coefficient identity for the Stirling descent polynomial", "[analysis]") {
  for (long n = 1; n <= 5; ++n) {
    IdentityCheck c = verify_thm_gs(n, 2 * n + 4);
    CHECK(c.ok);
  }
}

TEST_CASE("excedance counting matches the refined descent polynomial", "[analysis]") {
  CHECK(excedance_oracle(4, 3) == j_poly(4, 3));
  CHECK(excedance_oracle(5, 5) == Poly(Rat(1)));
  for (long n = 1; n <= 7; ++n)
    for (long r = std::max(1L, n - 3); r <= n; ++r)
      CHECK(excedance_oracle(n, r) == j_poly(n, r));
}

TEST_CASE("joint statistics agree between enumeration routes", "[analysis]") {
  for (int n = 1; n <= 4; ++n) {
    MPoly quasi = empirical_joint(n, 2, WordFamily::quasi);
    MPoly stirling = empirical_joint(n, 2, WordFamily::stirling);
    // the Stirling family is a subset, so coefficients are dominated
    for (const auto& [e, c] : stirling.terms()) CHECK(c <= quasi.coeff(e[0], e[1], e[2]));
  }
}

TEST_CASE("the standardized descent distribution is near normal at n = 7", "[analysis]") {
  NormalComparison r = normal_sanity_report(7);
  CHECK(r.n == 7);
  CHECK(r.mean == Catch::Approx(5.5));
  CHECK(r.stddev == Catch::Approx(0.88790).margin(0.0001));
  CHECK(r.rows.size() == 8);
  // informational closeness: the gap is small but visibly nonzero at this size
  CHECK(r.max_abs_gap < 0.02);
  CHECK(r.max_abs_gap > 0.001);
  for (const auto& row : r.rows) {
    CHECK(row.empirical_cdf >= 0.0);
    CHECK(row.empirical_cdf <= 1.0);
  }
  CHECK(r.rows.back().empirical_cdf == Catch::Approx(1.0));
}
