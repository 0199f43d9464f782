#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toposcope/algebra.hpp"
#include "toposcope/bits.hpp"
#include "toposcope/syntax.hpp"

namespace toposcope::algebra {

// Evaluates a propositional formula under a 2-valued valuation given as a
// bitmask over `atoms` (bit i = atoms[i] true). Tagged-infinitary nodes
// evaluate as their finitary expansions. Throws on non-propositional input.
bool eval_classical(const syntax::Formula& f, const std::vector<std::string>& atoms,
                    std::uint32_t valuation);

// Valuations over the theory's atoms satisfying every axiom.
std::vector<std::uint32_t> classical_models(const syntax::Theory& t);

// Truth-table oracle: true iff the sequent holds under every 2-valued
// valuation satisfying the theory.
bool decide_classical(const syntax::Theory& t, const syntax::Sequent& s);

// Finite rooted Kripke model; world 0 is the root. above[w] = {v : w <= v}.
struct KripkeModel {
  std::size_t worlds = 0;
  std::vector<Bits> above;
  std::map<std::string, Bits> valuation;  // atom -> upward-closed truth set

  void validate() const;  // order laws, rootedness, valuation monotonicity
  bool forces(std::size_t world, const syntax::Formula& f) const;
  std::string to_text() const;
};

enum class IntVerdict { Proved, Refuted, Unknown };

struct IntResult {
  IntVerdict verdict = IntVerdict::Unknown;
  std::optional<KripkeModel> countermodel;  // present iff Refuted
};

// How the decision procedure treats tagged-infinitary nodes: rewritten to
// their finitary expansions up front, or handled by their own (first-order)
// rules inside the search. The two agree on every input.
enum class TaggedMode { Expand, FirstOrderRules };

// Decision procedure for propositional intuitionistic sequents modulo a
// finite propositional theory (folded into the antecedent as implications).
// Proved comes from a terminating contraction-free sequent search; Refuted
// from exhaustive rooted Kripke search up to kripke_bound worlds, returning
// the first countermodel in (size, enumeration-order) order.
class IntuitionisticEngine {
 public:
  explicit IntuitionisticEngine(const syntax::Theory& t,
                                TaggedMode mode = TaggedMode::Expand);
  ~IntuitionisticEngine();
  IntuitionisticEngine(IntuitionisticEngine&&) noexcept;
  IntuitionisticEngine& operator=(IntuitionisticEngine&&) noexcept;

  IntResult decide(const syntax::Sequent& s, std::size_t kripke_bound);
  // Search-only entry points (used by tests and by decide itself).
  bool provable(const syntax::Sequent& s);
  std::optional<KripkeModel> refute(const syntax::Sequent& s, std::size_t kripke_bound);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

IntResult decide_intuitionistic(const syntax::Theory& t, const syntax::Sequent& s,
                                std::size_t kripke_bound = 6,
                                TaggedMode mode = TaggedMode::Expand);

// ---- Lindenbaum constructions ----

// Boolean algebra of classical equivalence classes: the powerset of the
// theory's 2-valued model set. An inconsistent theory yields the 1-element
// degenerate algebra.
struct LindenbaumBoolean {
  FinHeyting algebra;
  std::vector<std::string> atoms;
  std::vector<std::uint32_t> models;  // satisfying valuations, ascending

  // Element of `algebra` interpreting f: the set of models of f, as a mask
  // over `models` indices.
  int label(const syntax::Formula& f) const;
};

LindenbaumBoolean lindenbaum_boolean(const syntax::Theory& t, std::size_t max_models = 12);

// Distributive lattice of geometric equivalence classes: the sublattice of
// Bool^models generated by the atom columns and the bounds. Monotone-function
// semantics; for the empty theory on n atoms this is the free bounded
// distributive lattice (sizes 2, 3, 6, 20 for n = 0..3).
struct LindenbaumGeometric {
  FinHeyting lattice;  // carries a Heyting implication, but only the bounded
                       // lattice part is the geometric shadow
  std::vector<std::string> atoms;
  std::vector<std::uint32_t> models;
  std::vector<std::uint32_t> columns;  // element -> evaluation column

  int label(const syntax::Formula& f) const;  // throws if f is not geometric
};

LindenbaumGeometric lindenbaum_geometric(const syntax::Theory& t);

// Bounded approximation of the Lindenbaum Heyting algebra: closes the seeds
// (plus top and bottom) under /\, \/, -> to the given depth, identifying
// formulas with the intuitionistic decision procedure. Every inequivalence
// holds a Kripke certificate. Throws Error carrying the offending pair when
// a comparison comes back Unknown.
struct HeytingClasses {
  std::vector<syntax::FormulaPtr> reps;  // first-found representative per class
  FinPoset order;                        // provable entailment between reps
  // (i, j) -> countermodel witnessing reps[i] |-/ reps[j]
  std::map<std::pair<int, int>, KripkeModel> refutations;
};

HeytingClasses lindenbaum_heyting_bounded(const syntax::Theory& t,
                                          const std::vector<syntax::FormulaPtr>& seeds,
                                          int depth, std::size_t kripke_bound = 6,
                                          std::size_t max_classes = 64);

}  // namespace toposcope::algebra
