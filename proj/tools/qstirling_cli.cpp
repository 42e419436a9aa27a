// Command line surface over the library: polynomial families, word
// enumeration, bijection application and the verification batteries.
//
// Exit codes: 0 all good, 1 a verification check failed, 2 usage or input
// error. Verification reports are printed as JSON, one object per claim per
// parameter instance.

#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qstirling/qstirling.hpp"

using nlohmann::json;
using namespace qstirling;

namespace {

// ------------------------------------------------------------- shared ----

std::string coefficient_string(const Rat& c) { return to_string(c); }

json poly_to_json(const Poly& p) {
  json coeffs = json::array();
  for (long d = 0; d <= p.degree(); ++d)
    coeffs.push_back(coefficient_string(p.coeff(static_cast<std::size_t>(d))));
  if (p.is_zero()) coeffs.push_back("0");
  return coeffs;
}

json mpoly_to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"q", e[0]}, {"t", e[1]}, {"u", e[2]}, {"coefficient", coefficient_string(c)}});
  return terms;
}

// --------------------------------------------------------------- poly ----

int run_poly(const std::string& family, long n, long k, long r, OutputFormat fmt) {
  json meta{{"family", family}, {"n", n}};
  if (family == "kquasi" || family == "stirling") meta["k"] = k;
  if (family == "jnr") meta["r"] = r;

  if (family == "kquasi") {
    MPoly p = k_quasi_poly(n, k);
    switch (fmt) {
      case OutputFormat::text:
        std::cout << format_mpoly(p) << "\n";
        break;
      case OutputFormat::json:
        meta["polynomial"] = format_mpoly(p);
        meta["terms"] = mpoly_to_json(p);
        std::cout << meta.dump() << "\n";
        break;
      case OutputFormat::csv:
        std::cout << "q,t,u,coefficient\n";
        for (const auto& [e, c] : p.terms())
          std::cout << e[0] << "," << e[1] << "," << e[2] << "," << coefficient_string(c) << "\n";
        break;
    }
    return 0;
  }

  Poly p;
  if (family == "eulerian") {
    p = eulerian(n);
  } else if (family == "quasi") {
    p = quasi_stirling_poly(n);
  } else if (family == "stirling") {
    p = stirling_poly(n, k);
  } else if (family == "jnr") {
    if (r < 1) throw std::invalid_argument("poly jnr requires --r with 1 <= r <= n");
    p = j_poly(n, r);
  } else {
    throw std::invalid_argument("unknown polynomial family '" + family + "'");
  }

  switch (fmt) {
    case OutputFormat::text:
      std::cout << format_poly(p) << "\n";
      break;
    case OutputFormat::json:
      meta["polynomial"] = format_poly(p);
      meta["coefficients"] = poly_to_json(p);
      std::cout << meta.dump() << "\n";
      break;
    case OutputFormat::csv:
      std::cout << "degree,coefficient\n";
      for (long d = 0; d <= std::max<long>(p.degree(), 0); ++d)
        std::cout << d << "," << coefficient_string(p.coeff(static_cast<std::size_t>(d))) << "\n";
      break;
  }
  return 0;
}

// ---------------------------------------------------------- enumerate ----

int run_enumerate(const std::string& family, int n, int k, bool with_stats, OutputFormat fmt,
                  const Config& cfg) {
  if (fmt == OutputFormat::csv) {
    std::cout << (with_stats ? "word,asc,des,plat" : "word") << "\n";
  }
  auto emit = [&](const MultisetWord& w) {
    StatTriple s = with_stats ? statistics(w) : StatTriple{};
    switch (fmt) {
      case OutputFormat::text:
        std::cout << format_word(w);
        if (with_stats) std::cout << "\t" << s.asc << "\t" << s.des << "\t" << s.plat;
        std::cout << "\n";
        break;
      case OutputFormat::json: {
        json row{{"word", w.entries()}};
        if (with_stats) {
          row["asc"] = s.asc;
          row["des"] = s.des;
          row["plat"] = s.plat;
        }
        std::cout << row.dump() << "\n";
        break;
      }
      case OutputFormat::csv: {
        std::string cell;
        for (std::size_t i = 0; i < w.entries().size(); ++i) {
          if (i) cell += ' ';
          cell += std::to_string(w.entries()[i]);
        }
        std::cout << cell;
        if (with_stats) std::cout << "," << s.asc << "," << s.des << "," << s.plat;
        std::cout << "\n";
        break;
      }
    }
  };
  if (family == "quasi") {
    for_each_k_quasi_stirling(n, k, cfg, emit);
  } else if (family == "stirling") {
    for_each_k_stirling(n, k, cfg, emit);
  } else {
    throw std::invalid_argument("unknown enumeration family '" + family + "'");
  }
  return 0;
}

// --------------------------------------------------------------- verify ----

struct Reporter {
  bool all_pass = true;

  void report(const std::string& claim, json parameters, bool pass,
              json counterexample = json()) {
    json j{{"claim", claim}, {"parameters", std::move(parameters)},
           {"status", pass ? "pass" : "fail"}};
    if (!pass && !counterexample.is_null()) j["first_counterexample"] = std::move(counterexample);
    std::cout << j.dump() << "\n";
    if (!pass) all_pass = false;
  }

  void info(const std::string& claim, json parameters, json payload) {
    json j{{"claim", claim}, {"parameters", std::move(parameters)}, {"status", "info"},
           {"detail", std::move(payload)}};
    std::cout << j.dump() << "\n";
  }
};

// Coefficient identity between Qbar_n / (1-t)^{2n+1} and the power-sum
// closed form.
void verify_qqn(Reporter& rep, long nmax, long order_override) {
  for (long n = 1; n <= nmax; ++n) {
    long M = order_override > 0 ? order_override : 2 * n + 4;
    IdentityCheck c = verify_thm_qqn(n, M);
    json cx;
    if (!c.ok)
      cx = json{{"m", c.first_failing_index},
                {"expansion", to_string(c.expansion_side)},
                {"closed_form", to_string(c.closed_side)}};
    rep.report("qqn", json{{"n", n}, {"order", M}}, c.ok, cx);
  }
}

void verify_gs(Reporter& rep, long nmax, long order_override) {
  for (long n = 0; n <= nmax; ++n) {
    long M = order_override > 0 ? order_override : 2 * n + 4;
    IdentityCheck c = verify_thm_gs(n, M);
    json cx;
    if (!c.ok)
      cx = json{{"m", c.first_failing_index},
                {"expansion", to_string(c.expansion_side)},
                {"closed_form", to_string(c.closed_side)}};
    rep.report("gs", json{{"n", n}, {"order", M}}, c.ok, cx);
  }
}

bool root_flags_ok(const RootReport& r) {
  return r.all_real && r.all_distinct && r.all_nonpositive;
}

json root_json(const RootReport& r) {
  return json{{"all_real", r.all_real},     {"all_distinct", r.all_distinct},
              {"all_nonpositive", r.all_nonpositive}, {"real_root_count", r.real_root_count},
              {"degree", r.degree}};
}

void verify_roots(Reporter& rep, long nmax_quasi, long nmax_pnr) {
  for (long n = 1; n <= nmax_quasi; ++n) {
    RootReport r = root_report(quasi_stirling_poly(n));
    rep.report("roots", json{{"polynomial", "quasi"}, {"n", n}}, root_flags_ok(r), root_json(r));
  }
  for (long n = 1; n <= nmax_pnr; ++n)
    for (long r = 1; r <= n; ++r) {
      RootReport pr = root_report(p_recurrence(n, r));
      RootReport ar = root_report(a_excedance_poly(n, r));
      bool ok = root_flags_ok(pr) && root_flags_ok(ar);
      rep.report("roots", json{{"polynomial", "pnr"}, {"n", n}, {"r", r}}, ok,
                 ok ? json() : json{{"p", root_json(pr)}, {"a", root_json(ar)}});
    }
}

void verify_moments(Reporter& rep, long nmax) {
  long formula_max = nmax > 0 ? nmax : 10;
  long empirical_max = std::min<long>(formula_max, 6);
  Config cfg;
  for (long n = 1; n <= formula_max; ++n) {
    Poly q = quasi_stirling_poly(n);
    MomentReport m = moment_report(q);
    Rat mean_target = make_rat(3 * n + 1, 4);
    BigInt nn(n);
    Rat var_target = make_rat(11 * nn * nn - 6 * nn - 5, BigInt(48) * (2 * nn - 1));
    bool ok = (m.mean == mean_target) && (m.variance == var_target);
    rep.report("moments", json{{"side", "formula"}, {"statistic", "des"}, {"n", n}}, ok,
               ok ? json()
                  : json{{"mean", to_string(m.mean)}, {"variance", to_string(m.variance)}});

    Poly plat = plateau_marginal_poly(n, 2);
    MomentReport pm = moment_report(plat);
    bool plat_ok = pm.mean == make_rat(n + 1, 2);
    rep.report("moments", json{{"side", "formula"}, {"statistic", "plat"}, {"n", n}}, plat_ok,
               plat_ok ? json() : json{{"mean", to_string(pm.mean)}});

    bool darroch_ok = check_darroch(q, mean_target) && check_darroch(plat, make_rat(n + 1, 2));
    rep.report("moments", json{{"side", "mode"}, {"n", n}}, darroch_ok);

    bool smi = second_moment_identity(n);
    rep.report("moments", json{{"side", "second-moment"}, {"n", n}}, smi);
  }
  for (long n = 1; n <= empirical_max; ++n) {
    Poly emp_des = empirical_distribution(Stat::des, static_cast<int>(n), 2, WordFamily::quasi, cfg);
    Poly emp_plat =
        empirical_distribution(Stat::plat, static_cast<int>(n), 2, WordFamily::quasi, cfg);
    bool ok = emp_des == quasi_stirling_poly(n) && emp_plat == plateau_marginal_poly(n, 2);
    rep.report("moments", json{{"side", "empirical"}, {"n", n}}, ok);
  }
  NormalComparison shape = normal_sanity_report(7);
  rep.info("moments", json{{"side", "shape"}, {"n", shape.n}},
           json{{"mean", shape.mean},
                {"stddev", shape.stddev},
                {"max_abs_cdf_gap", shape.max_abs_gap},
                {"note", "informational only, no threshold"}});
}

void verify_symmetry(Reporter& rep, long nmax) {
  long top = nmax > 0 ? nmax : 7;
  MPolySeries p = stirling_ode_series(2, static_cast<std::size_t>(top));
  const std::array<std::array<Var, 3>, 6> perms{{{Var::q, Var::t, Var::u},
                                                 {Var::q, Var::u, Var::t},
                                                 {Var::t, Var::q, Var::u},
                                                 {Var::t, Var::u, Var::q},
                                                 {Var::u, Var::q, Var::t},
                                                 {Var::u, Var::t, Var::q}}};
  for (long n = 1; n <= top; ++n) {
    const MPoly& pn = p.coeff(static_cast<std::size_t>(n));
    bool ok = true;
    for (const auto& perm : perms) ok = ok && (pn.permute_variables(perm) == pn);
    rep.report("symmetry", json{{"k", 2}, {"n", n}}, ok);
  }
}

void verify_transport(Reporter& rep, long size_budget) {
  Config cfg;
  cfg.max_enumeration_size = std::max(cfg.max_enumeration_size, size_budget);
  for (int k = 2; k <= 3; ++k) {
    for (int n = 0; static_cast<long>(k) * n <= size_budget; ++n) {
      long checked = 0;
      long failures = 0;
      for_each_compartmented_tree(n, k, cfg, [&](const CompartmentedTree& t) {
        ++checked;
        StatTriple word_side = statistics(phi(t));
        StatTriple tree_side{casc_tree(t), cdes_tree(t), empty_compartments(t)};
        if (!(word_side == tree_side)) ++failures;
      });
      rep.report("transport", json{{"k", k}, {"n", n}, {"trees", checked}}, failures == 0,
                 failures == 0 ? json() : json{{"failures", failures}});
    }
  }
}

void verify_counts(Reporter& rep) {
  Config cfg;
  const std::vector<std::pair<int, int>> quasi_ranges{{2, 6}, {3, 4}, {4, 3}};
  for (auto [k, nmax] : quasi_ranges) {
    for (int n = 0; n <= nmax; ++n) {
      long count = 0;
      for_each_k_quasi_stirling(n, k, cfg, [&](const MultisetWord&) { ++count; });
      BigInt expected = factorial(static_cast<unsigned long>(n)) *
                        k_catalan(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
      bool ok = BigInt(count) == expected;
      rep.report("counts", json{{"family", "quasi"}, {"k", k}, {"n", n}}, ok,
                 ok ? json() : json{{"count", count}, {"expected", expected.get_str()}});
    }
  }
  for (int n = 0; n <= 6; ++n) {
    long count = 0;
    for_each_k_stirling(n, 2, cfg, [&](const MultisetWord&) { ++count; });
    BigInt expected = odd_double_factorial(static_cast<unsigned long>(n));
    bool ok = BigInt(count) == expected;
    rep.report("counts", json{{"family", "stirling"}, {"k", 2}, {"n", n}}, ok,
               ok ? json() : json{{"count", count}, {"expected", expected.get_str()}});
  }
}

void verify_maxdes(Reporter& rep, long nmax) {
  long top = nmax > 0 ? nmax : 6;
  Config cfg;
  for (long n = 1; n <= top; ++n) {
    BigInt expected = int_pow(BigInt(n + 1), static_cast<unsigned long>(n - 1));
    Poly q = quasi_stirling_poly(n);
    Rat top_coeff = q.coeff(static_cast<std::size_t>(n));
    bool coeff_ok = top_coeff == Rat(expected);

    std::set<std::vector<int>> image;
    bool des_ok = true;
    for_each_max_descent_word(static_cast<int>(n), cfg, [&](const MultisetWord& w) {
      if (statistics(w).des != n) des_ok = false;
      image.insert(w.entries());
    });
    bool image_ok = des_ok && BigInt(static_cast<long>(image.size())) == expected;
    rep.report("maxdes", json{{"n", n}, {"expected", expected.get_str()}},
               coeff_ok && image_ok,
               (coeff_ok && image_ok)
                   ? json()
                   : json{{"top_coefficient", to_string(top_coeff)},
                          {"image_size", image.size()},
                          {"all_descents_maximal", des_ok}});
  }
}

void verify_ode_vs_lagrange(Reporter& rep, long nmax) {
  long top = nmax > 0 ? nmax : 6;
  MPolySeries ode1 = stirling_ode_series(1, static_cast<std::size_t>(top));
  for (long n = 1; n <= top; ++n) {
    MPoly from_ode = ode1.coeff(static_cast<std::size_t>(n));
    MPoly from_lagrange = k_quasi_poly(n, 1);
    MPoly reference = homogenized_eulerian(n);
    bool ok = from_ode == reference && from_lagrange == reference;
    rep.report("ode-vs-lagrange", json{{"k", 1}, {"n", n}}, ok);
  }
  for (long n = 0; n <= 8; ++n) {
    Poly qn = stirling_poly(n, 2);
    bool ok = qn.evaluate_at(Rat(1)) == Rat(odd_double_factorial(static_cast<unsigned long>(n)));
    rep.report("ode-vs-lagrange", json{{"k", 2}, {"n", n}, {"value", "Q_n(1)"}}, ok);
  }
}

void verify_residuals(Reporter& rep, long order) {
  long N = order > 0 ? order : 6;
  bool quasi_ok = quasi_functional_residual(static_cast<std::size_t>(N)).is_zero();
  rep.report("residual", json{{"equation", "quasi"}, {"order", N}}, quasi_ok);
  for (long k = 1; k <= 3; ++k) {
    bool ok = k_quasi_functional_residual(k, static_cast<std::size_t>(N)).is_zero();
    rep.report("residual", json{{"equation", "k-quasi"}, {"k", k}, {"order", N}}, ok);
  }
}

// Golden values quoted throughout the documentation: the descent-polynomial
// table, the named example polynomials and the worked bijection examples.
void verify_tables(Reporter& rep) {
  const std::vector<std::string> qbar_table{
      "1*t",
      "1*t + 3*t^2",
      "1*t + 13*t^2 + 16*t^3",
      "1*t + 39*t^2 + 171*t^3 + 125*t^4",
      "1*t + 101*t^2 + 1091*t^3 + 2551*t^4 + 1296*t^5",
      "1*t + 243*t^2 + 5498*t^3 + 28838*t^4 + 43653*t^5 + 16807*t^6",
      "1*t + 561*t^2 + 24270*t^3 + 243790*t^4 + 780585*t^5 + 850809*t^6 + 262144*t^7"};
  for (std::size_t i = 0; i < qbar_table.size(); ++i) {
    long n = static_cast<long>(i) + 1;
    bool ok = format_poly(quasi_stirling_poly(n)) == qbar_table[i];
    rep.report("tables", json{{"value", "quasi-polynomial"}, {"n", n}}, ok,
               ok ? json() : json{{"got", format_poly(quasi_stirling_poly(n))}});
  }

  struct NamedPoly {
    const char* name;
    Poly value;
    const char* expected;
  };
  const std::vector<NamedPoly> named{
      {"stirling-3", stirling_poly(3, 2), "1*t + 8*t^2 + 6*t^3"},
      {"j-4-3", j_poly(4, 3), "1 + 3*t"},
      {"a-4-3", a_excedance_poly(4, 3), "18 + 6*t"},
      {"a-5-2", a_excedance_poly(5, 2), "16 + 66*t + 36*t^2 + 2*t^3"},
      {"a-6-3", a_excedance_poly(6, 3), "162 + 402*t + 150*t^2 + 6*t^3"},
      {"a-5-1", a_excedance_poly(5, 1), "1 + 26*t + 66*t^2 + 26*t^3 + 1*t^4"},
      {"eulerian-2", eulerian(2), "1*t + 1*t^2"},
  };
  for (const auto& item : named) {
    bool ok = format_poly(item.value) == item.expected;
    rep.report("tables", json{{"value", item.name}}, ok,
               ok ? json() : json{{"got", format_poly(item.value)}});
  }

  bool hat_ok = format_mpoly(homogenized_eulerian(2)) == "1*q*t^2 + 1*q^2*t";
  rep.report("tables", json{{"value", "homogenized-eulerian-2"}}, hat_ok);

  // worked bijection example: the 16-letter word and its tree
  MultisetWord w({4, 1, 1, 4, 6, 6, 3, 7, 7, 5, 8, 8, 5, 2, 2, 3});
  CompartmentedTree t = phi_inv(w);
  bool tree_ok = format_compartmented(t) == "(4(1),6,3(7,5(8),2))" && phi(t) == w &&
                 casc_tree(t) == 6 && cdes_tree(t) == 6 && empty_compartments(t) == 5;
  rep.report("tables", json{{"value", "bijection-example"}, {"k", 2}}, tree_ok);

  MultisetWord w3({6, 2, 2, 2, 6, 6, 3, 5, 5, 5, 3, 7, 7, 4, 4, 4, 7, 1, 1, 1, 3});
  CompartmentedTree t3 = phi_inv(w3);
  bool t3_ok = phi(t3) == w3 && cdes_tree(t3) == 6 && empty_compartments(t3) == 10 &&
               statistics(w3).des == 6 && statistics(w3).plat == 10;
  rep.report("tables", json{{"value", "bijection-example"}, {"k", 3}}, t3_ok);

  MultisetWord wk({2, 2, 3, 6, 6, 7, 5, 5, 7, 3, 4, 1, 1, 4});
  KaryTree kt = psi_inv(wk);
  bool kt_ok = psi(kt) == wk;
  rep.report("tables", json{{"value", "kary-example"}, {"k", 2}}, kt_ok);
}

int run_verify(const std::string& claim, long n_override, long order_override, bool paper_tables) {
  Reporter rep;
  bool all = claim == "all";
  if (all || claim == "qqn") verify_qqn(rep, n_override > 0 ? n_override : 6, order_override);
  if (all || claim == "gs") verify_gs(rep, n_override > 0 ? n_override : 5, order_override);
  if (all || claim == "roots")
    verify_roots(rep, n_override > 0 ? n_override : 12, n_override > 0 ? std::min(n_override, 9L) : 9);
  if (all || claim == "moments") verify_moments(rep, n_override);
  if (all || claim == "symmetry") verify_symmetry(rep, n_override);
  if (all || claim == "transport") verify_transport(rep, n_override > 0 ? 2 * n_override : 12);
  if (all || claim == "counts") verify_counts(rep);
  if (all || claim == "maxdes") verify_maxdes(rep, n_override);
  if (all || claim == "ode-vs-lagrange") verify_ode_vs_lagrange(rep, n_override);
  if (all || claim == "residuals") verify_residuals(rep, order_override);
  if (paper_tables) verify_tables(rep);
  return rep.all_pass ? 0 : 1;
}

// ------------------------------------------------------------ bijection ----

int run_bijection(const std::string& map, std::string input, int k, OutputFormat fmt) {
  if (input.empty()) {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    input = buffer.str();
    while (!input.empty() && (input.back() == '\n' || input.back() == '\r')) input.pop_back();
  }

  std::string output;
  if (map == "phi") {
    output = format_word(phi(parse_compartmented(input, k)));
  } else if (map == "phi-inv") {
    output = format_compartmented(phi_inv(parse_word(input), k));
  } else if (map == "psi") {
    output = format_word(psi(parse_kary(input, k)));
  } else if (map == "psi-inv") {
    output = format_kary(psi_inv(parse_word(input), k));
  } else if (map == "canonical") {
    output = format_plane(canonical_plane(parse_unordered(input)));
  } else {
    throw std::invalid_argument("unknown map '" + map + "'");
  }

  if (fmt == OutputFormat::json) {
    std::cout << json{{"map", map}, {"input", input}, {"output", output}}.dump() << "\n";
  } else {
    std::cout << output << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of k-Stirling and k-quasi-Stirling words"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --format etc. after subcommand arguments

  std::string format_name = "text";
  app.add_option("--format", format_name, "output format: text, json or csv")
      ->envname("QSTIRLING_FORMAT")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  long max_size = 14;
  app.add_option("--max-size", max_size, "largest enumeration size in letters (k*n)")
      ->envname("QSTIRLING_MAX_SIZE");

  // poly
  auto* poly_cmd = app.add_subcommand("poly", "print a polynomial of the chosen family");
  std::string poly_family;
  long poly_n = 0, poly_k = 2, poly_r = 0;
  poly_cmd->add_option("family", poly_family, "eulerian, stirling, quasi, kquasi or jnr")
      ->required()
      ->check(CLI::IsMember({"eulerian", "stirling", "quasi", "kquasi", "jnr"}));
  poly_cmd->add_option("n", poly_n, "size parameter")->required()->envname("QSTIRLING_N");
  poly_cmd->add_option("--k", poly_k, "letter multiplicity")->envname("QSTIRLING_K");
  poly_cmd->add_option("--r", poly_r, "second index for the jnr family")->envname("QSTIRLING_R");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "list every word of the family");
  std::string enum_family;
  int enum_n = 0, enum_k = 2;
  bool enum_stats = false;
  enum_cmd->add_option("family", enum_family, "quasi or stirling")
      ->required()
      ->check(CLI::IsMember({"quasi", "stirling"}));
  enum_cmd->add_option("n", enum_n, "number of distinct letters")->required()->envname("QSTIRLING_N");
  enum_cmd->add_option("--k", enum_k, "letter multiplicity")->envname("QSTIRLING_K");
  enum_cmd->add_flag("--stats", enum_stats, "append asc, des and plat columns");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification battery");
  std::string verify_claim;
  long verify_n = 0, verify_order = 0;
  bool paper_tables = false;
  verify_cmd
      ->add_option("claim", verify_claim,
                   "qqn, gs, roots, moments, symmetry, transport, counts, maxdes, "
                   "ode-vs-lagrange, residuals or all")
      ->required()
      ->check(CLI::IsMember({"qqn", "gs", "roots", "moments", "symmetry", "transport", "counts",
                             "maxdes", "ode-vs-lagrange", "residuals", "all"}));
  verify_cmd->add_option("--n", verify_n, "override the size bound")->envname("QSTIRLING_N");
  verify_cmd->add_option("--order", verify_order, "override the expansion/truncation order")
      ->envname("QSTIRLING_ORDER");
  verify_cmd->add_flag("--paper-tables", paper_tables,
                       "also check every quoted table value and worked example");

  // bijection
  auto* bij_cmd = app.add_subcommand("bijection", "apply a tree/word map");
  std::string bij_map, bij_input;
  int bij_k = 2;
  bij_cmd->add_option("map", bij_map, "phi, phi-inv, psi, psi-inv or canonical")
      ->required()
      ->check(CLI::IsMember({"phi", "phi-inv", "psi", "psi-inv", "canonical"}));
  bij_cmd->add_option("input", bij_input, "word or tree text (stdin when omitted)");
  bij_cmd->add_option("--k", bij_k, "letter multiplicity / compartment count + 1")
      ->envname("QSTIRLING_K");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  Config cfg;
  cfg.max_enumeration_size = max_size;
  cfg.output_format = parse_output_format(format_name);

  try {
    if (poly_cmd->parsed()) return run_poly(poly_family, poly_n, poly_k, poly_r, cfg.output_format);
    if (enum_cmd->parsed())
      return run_enumerate(enum_family, enum_n, enum_k, enum_stats, cfg.output_format, cfg);
    if (verify_cmd->parsed()) return run_verify(verify_claim, verify_n, verify_order, paper_tables);
    if (bij_cmd->parsed()) return run_bijection(bij_map, bij_input, bij_k, cfg.output_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
