#include <catch2/catch_amalgamated.hpp>
#include <string>
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

TEST_CASE("Eulerian polynomials from the recurrence", "[genfunc]") {
  CHECK(format_poly(eulerian(1)) == "1*t");
  CHECK(format_poly(eulerian(2)) == "1*t + 1*t^2");
  CHECK(format_poly(eulerian(3)) == "1*t + 4*t^2 + 1*t^3");
  CHECK(eulerian(4) == poly_from({0, 1, 11, 11, 1}));
  CHECK(eulerian(5) == poly_from({0, 1, 26, 66, 26, 1}));
  for (long n = 1; n <= 8; ++n) {
    CHECK(eulerian(n).evaluate_at(Rat(1)) == Rat(factorial(static_cast<unsigned long>(n))));
    // palindromic coefficients
    CHECK(eulerian(n).reversed(static_cast<std::size_t>(n) + 1) == eulerian(n));
  }
}

TEST_CASE("descent refinement by last-value position", "[genfunc]") {
  CHECK_THROWS_AS(p_recurrence(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(p_recurrence(3, 4), std::invalid_argument);
  CHECK(p_recurrence(2, 2) == poly_from({0, 1}));

  // the recurrence multiplies the population by m at each step
  for (long n = 1; n <= 7; ++n)
    for (long r = 1; r <= n; ++r) {
      BigInt expected = exact_div(factorial(static_cast<unsigned long>(n)),
                                  factorial(static_cast<unsigned long>(r)));
      CHECK(to_integer(p_recurrence(n, r).evaluate_at(Rat(1))) == expected);
    }

  CHECK(format_poly(j_poly(4, 3)) == "1 + 3*t");
  CHECK(j_poly(5, 5) == Poly(Rat(1)));
  CHECK(a_excedance_poly(4, 3) == poly_from({18, 6}));
  CHECK(a_excedance_poly(5, 2) == poly_from({16, 66, 36, 2}));
  CHECK(a_excedance_poly(6, 3) == poly_from({162, 402, 150, 6}));
  CHECK(a_excedance_poly(5, 1) == poly_from({1, 26, 66, 26, 1}));

  // the reversal carries roots through 1/t, so degrees line up
  for (long n = 2; n <= 6; ++n)
    for (long r = 1; r <= n; ++r) {
      CHECK(j_poly(n, r).degree() <= n - r);
      CHECK(a_excedance_poly(n, r).degree() <= n - r);
    }
}

TEST_CASE("the Eulerian series equals its closed form", "[genfunc]") {
  PolySeries lhs = eulerian_series(8);
  CHECK(lhs == eulerian_series_closed_form(8));
  CHECK(lhs.coeff(0) == Poly(Rat(1)));
  for (std::size_t n = 1; n <= 8; ++n) CHECK(lhs.coeff(n) == eulerian(static_cast<long>(n)));
}

TEST_CASE("quasi-Stirling polynomials by coefficient extraction", "[genfunc]") {
  const std::string expected[] = {
      "1*t",
      "1*t + 3*t^2",
      "1*t + 13*t^2 + 16*t^3",
      "1*t + 39*t^2 + 171*t^3 + 125*t^4",
      "1*t + 101*t^2 + 1091*t^3 + 2551*t^4 + 1296*t^5",
      "1*t + 243*t^2 + 5498*t^3 + 28838*t^4 + 43653*t^5 + 16807*t^6",
      "1*t + 561*t^2 + 24270*t^3 + 243790*t^4 + 780585*t^5 + 850809*t^6 + 262144*t^7",
  };
  for (long n = 1; n <= 7; ++n) CHECK(format_poly(quasi_stirling_poly(n)) == expected[n - 1]);

  PolySeries s = quasi_stirling_series(6);
  CHECK(s.coeff(0) == Poly(Rat(1)));
  for (std::size_t n = 1; n <= 6; ++n) CHECK(s.coeff(n) == quasi_stirling_poly(static_cast<long>(n)));

  // population: n! Catalan(n), top coefficient: (n+1)^(n-1)
  for (long n = 1; n <= 7; ++n) {
    Poly q = quasi_stirling_poly(n);
    BigInt pop = factorial(static_cast<unsigned long>(n)) * catalan(static_cast<unsigned long>(n));
    CHECK(to_integer(q.evaluate_at(Rat(1))) == pop);
    CHECK(to_integer(q.leading()) ==
          int_pow(BigInt(n + 1), static_cast<unsigned long>(n - 1)));
  }
}

TEST_CASE("homogenized Eulerian polynomials track both statistics", "[genfunc]") {
  CHECK(format_mpoly(homogenized_eulerian(1)) == "1*q*t");
  CHECK(format_mpoly(homogenized_eulerian(2)) == "1*q*t^2 + 1*q^2*t");
  for (long n = 1; n <= 6; ++n) {
    MPoly h = homogenized_eulerian(n);
    CHECK(h.is_homogeneous(static_cast<unsigned>(n) + 1));
    CHECK(h.substitute(Var::q, Rat(1)).to_univariate(Var::t) == eulerian(n));
    // asc/des exchange is transposition of q and t
    CHECK(h.permute_variables({Var::t, Var::q, Var::u}) == h);
  }
  MPolySeries s = hat_a_series(6);
  for (std::size_t n = 1; n <= 6; ++n)
    CHECK(s.coeff(n) == homogenized_eulerian(static_cast<long>(n)));
}

TEST_CASE("trivariate quasi-Stirling polynomials and their marginals", "[genfunc]") {
  CHECK(format_mpoly(k_quasi_poly(2, 2)) == "1*q*t^2*u^2 + 1*q^2*t*u^2 + 2*q^2*t^2*u");
  CHECK(format_mpoly(k_quasi_poly(2, 3)) == "1*q*t^2*u^4 + 1*q^2*t*u^4 + 4*q^2*t^2*u^3");

  // joint distribution against direct enumeration
  for (int n = 1; n <= 4; ++n)
    CHECK(k_quasi_poly(n, 2) == empirical_joint(n, 2, WordFamily::quasi));
  for (int n = 1; n <= 3; ++n)
    CHECK(k_quasi_poly(n, 3) == empirical_joint(n, 3, WordFamily::quasi));
  CHECK(k_quasi_poly(3, 4) == empirical_joint(3, 4, WordFamily::quasi));

  // setting q = u = 1 leaves the descent polynomial
  for (long n = 1; n <= 5; ++n)
    CHECK(k_quasi_poly(n, 2).substitute(Var::q, Rat(1)).substitute(Var::u, Rat(1)).to_univariate(
              Var::t) == quasi_stirling_poly(n));

  // k = 1 collapses to plain permutations
  for (long n = 1; n <= 5; ++n) CHECK(k_quasi_poly(n, 1) == homogenized_eulerian(n));

  // total population specializes to n! times the k-Catalan number
  for (long k = 2; k <= 4; ++k)
    for (long n = 1; n <= 4; ++n) {
      Rat total = k_quasi_poly(n, k).evaluate_at(Rat(1), Rat(1), Rat(1));
      BigInt expected = factorial(static_cast<unsigned long>(n)) *
                        k_catalan(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
      CHECK(to_integer(total) == expected);
    }

  MPolySeries s = k_quasi_series(3, 4);
  CHECK(s.coeff(0) == MPoly::constant(1));
  for (std::size_t n = 1; n <= 4; ++n) CHECK(s.coeff(n) == k_quasi_poly(static_cast<long>(n), 3));
}

TEST_CASE("the plateau marginal carries Narayana numbers", "[genfunc]") {
  for (long n = 1; n <= 8; ++n) {
    Poly p = plateau_marginal_poly(n);
    for (long m = 0; m <= p.degree(); ++m) {
      BigInt expected = m >= 1 ? BigInt(factorial(static_cast<unsigned long>(n)) *
                                        narayana(static_cast<unsigned long>(n),
                                                 static_cast<unsigned long>(m)))
                               : BigInt(0);
      CHECK(to_integer(p.coeff(static_cast<std::size_t>(m))) == expected);
    }
  }
  // the fast route agrees with the full trivariate computation
  for (long n = 1; n <= 5; ++n) {
    CHECK(plateau_marginal_poly(n) ==
          k_quasi_poly(n, 2).substitute(Var::q, Rat(1)).substitute(Var::t, Rat(1)).to_univariate(
              Var::u));
  }
  // and for k = 3
  for (long n = 1; n <= 4; ++n) {
    CHECK(plateau_marginal_poly(n, 3) ==
          k_quasi_poly(n, 3).substitute(Var::q, Rat(1)).substitute(Var::t, Rat(1)).to_univariate(
              Var::u));
  }
}

TEST_CASE("Narayana polynomials sum to Catalan numbers", "[genfunc]") {
  CHECK(narayana_poly(3) == poly_from({0, 1, 3, 1}));
  for (long n = 1; n <= 8; ++n) {
    CHECK(to_integer(narayana_poly(n).evaluate_at(Rat(1))) ==
          catalan(static_cast<unsigned long>(n)));
    for (long m = 1; m <= n; ++m)
      CHECK(to_integer(narayana_poly(n).coeff(static_cast<std::size_t>(m))) ==
            narayana(static_cast<unsigned long>(n), static_cast<unsigned long>(m)));
  }
}

TEST_CASE("the differential recurrence reproduces the Stirling polynomials", "[genfunc]") {
  CHECK(format_mpoly(stirling_ode_series(2, 2).coeff(2)) ==
        "1*q*t^2*u^2 + 1*q^2*t*u^2 + 1*q^2*t^2*u");

  // joint distribution against direct enumeration
  for (int n = 1; n <= 4; ++n)
    CHECK(stirling_ode_series(2, 4).coeff(static_cast<std::size_t>(n)) ==
          empirical_joint(n, 2, WordFamily::stirling));
  for (int n = 1; n <= 3; ++n)
    CHECK(stirling_ode_series(3, 3).coeff(static_cast<std::size_t>(n)) ==
          empirical_joint(n, 3, WordFamily::stirling));

  // k = 1 is the plain Eulerian case
  for (std::size_t n = 1; n <= 6; ++n)
    CHECK(stirling_ode_series(1, 6).coeff(n) == homogenized_eulerian(static_cast<long>(n)));

  // descent marginal evaluated at 1 counts the words
  for (long n = 1; n <= 6; ++n) {
    CHECK(to_integer(stirling_poly(n, 2).evaluate_at(Rat(1))) ==
          odd_double_factorial(static_cast<unsigned long>(n)));
  }
  CHECK(stirling_poly(2, 2) == poly_from({0, 1, 2}));
}

TEST_CASE("functional-equation residuals vanish identically", "[genfunc]") {
  CHECK(quasi_functional_residual(6).is_zero());
  CHECK(k_quasi_functional_residual(2, 6).is_zero());
  CHECK(k_quasi_functional_residual(3, 6).is_zero());
}

TEST_CASE("the refined descent polynomial glues back to the quasi family", "[genfunc]") {
  // t J_{2n, n+1}(t) recovers the n-th quasi-Stirling polynomial
  for (long n = 1; n <= 5; ++n) {
    CHECK(Poly::variable() * j_poly(2 * n, n + 1) == quasi_stirling_poly(n));
  }
}

TEST_CASE("series utilities behave like formal power series", "[genfunc]") {
  // exp and log are mutually inverse
  PolySeries f(6);
  f.set_coeff(1, Poly::variable());
  f.set_coeff(2, Poly(Rat(3)));
  f.set_coeff(5, Poly::variable() * Poly::variable());
  CHECK(series_log(series_exp(f)) == f);

  // division is exact multiplication in reverse
  PolySeries g = series_exp(f);
  CHECK(series_div_exact(f * g, g) == f);

  // pow agrees with repeated products
  CHECK(g.pow(3) == g * g * g);

  // composition guards
  PolySeries h(5);
  h.set_coeff(0, Poly(Rat(1)));
  CHECK_THROWS_AS(series_compose(f.truncated(5), h), std::invalid_argument);
  CHECK_THROWS_AS(series_exp(h), std::invalid_argument);
  CHECK_THROWS_AS(series_log(f), std::invalid_argument);
}
