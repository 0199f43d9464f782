#pragma once

#include "toposcope/syntax.hpp"

namespace toposcope::transforms {

// Classical elimination of the connectives missing from sub-first-order
// logic: every forall y. psi becomes ~exists y. ~psi and every tagged
// infinitary conjunction becomes ~\/{ ~psi_i }, recursively. Finitary
// conjunction is legal sub-first-order syntax and is preserved verbatim.
// The output is classically equivalent to the input and idempotent.
syntax::FormulaPtr classicalize(const syntax::Formula& f);

syntax::Sequent classicalize(const syntax::Sequent& s);

// Morleyisation: names every subformula of the axioms of a finitary
// first-order theory with a fresh relation symbol plus a complement symbol,
// and emits geometric sequents tying each name to the names of its immediate
// subformulas. The result is a geometric theory whose classical models
// project onto the models of the input.
//
// A theory whose axioms are already geometric is returned unchanged (with a
// geometric fragment tag). Throws WellFormednessError on tagged-infinitary
// input.
struct MorleyResult {
  syntax::Theory theory;
  // (relation name, named formula, complement relation name), in the
  // deterministic order the subformulas were discovered.
  std::vector<std::tuple<std::string, syntax::FormulaPtr, std::string>> names;
};

MorleyResult morleyize(const syntax::Theory& t);

}  // namespace toposcope::transforms
