#pragma once

#include <string>
#include <vector>

#include "toposcope/kernel.hpp"
#include "toposcope/report.hpp"

namespace toposcope::cli {

struct Options {
  kernel::SystemTag system = kernel::SystemTag::SubFirstOrder;
  int depth = 3;
  std::size_t kripke_bound = 6;
  std::size_t guard = 1'000'000;
  bool full_site = false;  // compare-topologies: keep the bottom object
  std::string export_path;
};

// Dispatches one CLI subcommand over input file paths. Throws ParseError /
// WellFormednessError on bad input (exit code 2 territory); resource guards
// and check failures land in the report instead.
Report run_command(const std::string& name, const std::vector<std::string>& files,
                   const Options& opt);

// The desk-scale verification suite: one record per acceptance criterion.
Report paperchecks(const Options& opt);

// The fixed 12-formula axiom pool over p, q, r behind the theory family
// (every subset of up to 3 axioms is consistent: all pool formulas hold at
// the all-true valuation).
const std::vector<std::string>& acceptance_pool();

// All subsets of the pool with at most `max_axioms` elements, as theories.
std::vector<syntax::Theory> acceptance_theories(std::size_t max_axioms = 3);

}  // namespace toposcope::cli
