// Acceptance suite runner: one pass/fail line per criterion, nonzero exit on
// any failure. The same checks back the `toposcope paperchecks` subcommand.

#include <iostream>

#include "toposcope/commands.hpp"

int main() {
  toposcope::cli::Options opt;
  auto report = toposcope::cli::paperchecks(opt);
  std::cout << report.to_text();
  if (!report.all_pass()) {
    std::cout << report.failures() << " criterion check(s) failed\n";
    return 1;
  }
  std::cout << "all " << report.records.size() << " acceptance criteria pass\n";
  return 0;
}
