// Exercises the command-line contract of the installed binary: golden
// outputs, format switches, environment overrides and exit codes. Invoked as
//   cli_contract <path-to-cli>
// and prints one line per check.

#include <iostream>
#include <string>

#include "run_cli.hpp"

namespace {

int failures = 0;

void check(bool ok, const std::string& label, const std::string& detail = "") {
  std::cout << (ok ? "ok   " : "FAIL ") << label << '\n';
  if (!ok) {
    ++failures;
    if (!detail.empty()) std::cout << "     " << detail << '\n';
  }
}

void check_output(const testrun::Result& r, int code, const std::string& expected,
                  const std::string& label) {
  check(r.exit_code == code && r.output == expected, label,
        "exit " + std::to_string(r.exit_code) + ", got: " + r.output);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: cli_contract <path-to-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  using testrun::contains;
  using testrun::count_lines;
  using testrun::run;

  check_output(run(cli + " poly quasi 4"), 0, "1*t + 39*t^2 + 171*t^3 + 125*t^4\n",
               "poly quasi 4 prints the exact polynomial");
  check_output(run(cli + " poly eulerian 1"), 0, "1*t\n", "poly eulerian 1");
  check_output(run(cli + " poly jnr 4 --r 3"), 0, "1 + 3*t\n", "poly jnr 4 --r 3");
  check_output(run(cli + " poly stirling 2"), 0, "1*t + 2*t^2\n", "poly stirling 2");
  check_output(run(cli + " poly kquasi 2 --k 3"), 0,
               "1*q*t^2*u^4 + 1*q^2*t*u^4 + 4*q^2*t^2*u^3\n", "poly kquasi 2 --k 3");

  {
    auto r = run(cli + " poly quasi 4 --format json");
    check(r.exit_code == 0 && contains(r.output, "\"coefficients\":[\"0\",\"1\",\"39\",\"171\",\"125\"]"),
          "poly accepts --format json after positionals", r.output);
  }
  {
    auto r = run(cli + " poly quasi 4 --format csv");
    check(r.exit_code == 0 && contains(r.output, "degree,coefficient") &&
              contains(r.output, "4,125"),
          "poly honours --format csv", r.output);
  }
  {
    auto r = run("QSTIRLING_FORMAT=json " + cli + " poly eulerian 3");
    check(r.exit_code == 0 && contains(r.output, "\"family\":\"eulerian\""),
          "QSTIRLING_FORMAT environment override", r.output);
  }

  {
    auto r = run(cli + " enumerate quasi 2 --k 2");
    check(r.exit_code == 0 && count_lines(r.output) == 4 && contains(r.output, "1,2,2,1"),
          "enumerate quasi 2 lists four words", r.output);
  }
  check_output(run(cli + " enumerate quasi 0"), 0, "\n", "enumerate quasi 0 prints the empty word");
  {
    auto r = run(cli + " enumerate stirling 2 --stats");
    check(r.exit_code == 0 && count_lines(r.output) == 3 && contains(r.output, "\t"),
          "enumerate stirling 2 --stats prints three rows", r.output);
  }
  {
    auto r = run(cli + " enumerate quasi 7 --k 2 --max-size 10");
    check(r.exit_code == 2 && contains(r.output, "error:"),
          "lowered --max-size refuses the enumeration", r.output);
  }

  check_output(run(cli + " bijection phi \"(4(1),6,3(7,5(8),2))\""), 0,
               "4,1,1,4,6,6,3,7,7,5,8,8,5,2,2,3\n", "bijection phi on the worked tree");
  check_output(run(cli + " bijection phi-inv 4,1,1,4,6,6,3,7,7,5,8,8,5,2,2,3"), 0,
               "(4(1),6,3(7,5(8),2))\n", "bijection phi-inv recovers the tree");
  check_output(run("echo '4,1,1,4,6,6,3,7,7,5,8,8,5,2,2,3' | " + cli + " bijection phi-inv"), 0,
               "(4(1),6,3(7,5(8),2))\n", "bijection phi-inv reads stdin");
  {
    auto r = run(cli + " bijection phi-inv 1,2,1,2");
    check(r.exit_code == 2 && contains(r.output, "positions (1, 2, 3, 4)"),
          "crossing words are rejected with their positions", r.output);
  }
  check_output(run(cli + " bijection canonical \"(5(2,9(1,7),4),8(3,6))\""), 0,
               "(8(6,3),5(4,2,9(7,1)))\n", "bijection canonical embeds maximally");

  {
    auto r = run(cli + " verify qqn --n 4");
    check(r.exit_code == 0 && contains(r.output, "\"status\":\"pass\""), "verify qqn --n 4 passes",
          r.output);
  }
  {
    auto r = run(cli + " verify residuals");
    check(r.exit_code == 0 && !contains(r.output, "\"fail\""), "verify residuals passes",
          r.output);
  }

  check(run(cli + " --help").exit_code == 0, "--help exits 0");
  check(run(cli).exit_code == 2, "missing subcommand exits 2");
  check(run(cli + " poly quasi 4 --bogus").exit_code == 2, "unknown option exits 2");
  check(run(cli + " poly nosuch 3").exit_code == 2, "unknown family exits 2");

  if (failures == 0) {
    std::cout << "cli contract: all checks passed\n";
    return 0;
  }
  std::cout << "cli contract: " << failures << " check(s) failed\n";
  return 1;
}
