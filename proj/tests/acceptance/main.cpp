#include <CLI11.hpp>

#include <iostream>
#include <set>

#include "kumfib/catalog/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"kumfib acceptance criteria"};
  bool verbose = false;
  std::vector<int> only, expect_fail;
  app.add_flag("-v,--verbose", verbose, "print every sub-check");
  app.add_option("--only", only, "criterion numbers to run")->delimiter(',');
  app.add_option("--expect-fail", expect_fail, "criteria known to fail; exit status ignores them")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  std::set<int> expected(expect_fail.begin(), expect_fail.end());
  bool ok = true;
  for (auto& r : kumfib::acceptance_suite(only)) {
    std::cout << "criterion " << r.number << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title;
    if (expected.count(r.number)) std::cout << (r.pass ? "  (expected to fail, now passes)" : "  (expected)");
    std::cout << "\n";
    for (auto& c : r.details)
      if (verbose || !c.pass) std::cout << "    " << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
    if (r.pass == static_cast<bool>(expected.count(r.number))) ok = false;
  }
  return ok ? 0 : 1;
}
