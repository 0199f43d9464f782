#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toposcope/algebra.hpp"
#include "toposcope/fincat.hpp"
#include "toposcope/kernel.hpp"
#include "toposcope/syntax.hpp"

namespace toposcope::semantics {

// ---- propositional structures ----

struct PropStructure {
  const algebra::FinHeyting* target = nullptr;
  std::map<std::string, int> assignment;  // atom -> element
};

// Structural recursion through the algebra's tables; tagged-infinitary nodes
// interpret as iterated finitary meets/joins. Quantifiers and equality are
// rejected in propositional mode.
int interpret(const PropStructure& m, const syntax::Formula& f);
bool sequent_valid(const PropStructure& m, const syntax::Sequent& s);

// A map of propositional structures: a lattice hom F between the targets.
// The inequality checked throughout is F(phi^M) <= phi^N.
struct PropStructureMap {
  const PropStructure* source = nullptr;
  const PropStructure* target = nullptr;
  algebra::LatticeHom hom;
};

struct MorphismReport {
  bool holds = true;
  std::optional<syntax::FormulaPtr> witness;
};

// Atomic formulas only.
bool is_homomorphism(const PropStructureMap& h);
// The displayed inequality over every corpus formula (callers pass a
// sub-first-order corpus for sub-elementary, first-order for elementary).
MorphismReport is_subelementary(const PropStructureMap& h,
                                const std::vector<syntax::FormulaPtr>& corpus);
MorphismReport is_elementary(const PropStructureMap& h,
                             const std::vector<syntax::FormulaPtr>& corpus);

// ---- presheaf structures ----

struct PresheafStructure {
  const fincat::FinCategory* cat = nullptr;
  const syntax::Signature* signature = nullptr;
  std::map<std::string, const fincat::Presheaf*> sorts;
  std::map<std::string, fincat::Subpresheaf> relations;  // over the product of arg sorts
  std::map<std::string, fincat::NatTrans> functions;     // product of args -> result

  void validate() const;
};

// Interpretation of a formula in context as a subpresheaf of the context's
// product presheaf (owned by the result so the parent pointer stays valid).
// Quantifiers use the image/dual-image adjoints along the context projection.
struct Interpretation {
  std::unique_ptr<fincat::ProductPresheaf> context;
  fincat::Subpresheaf subobject;  // parent = &context->presheaf
};

Interpretation interpret(const PresheafStructure& m, const syntax::Formula& f,
                         const syntax::Context& ctx);
bool sequent_valid(const PresheafStructure& m, const syntax::Sequent& s);

struct PresheafStructureMap {
  const PresheafStructure* source = nullptr;
  const PresheafStructure* target = nullptr;
  std::map<std::string, fincat::NatTrans> components;  // per sort
};

bool is_homomorphism(const PresheafStructureMap& h);
MorphismReport is_subelementary(const PresheafStructureMap& h,
                                const std::vector<syntax::FormulaPtr>& corpus,
                                const syntax::Context& ctx);

// ---- soundness harness ----

struct SoundnessTarget {
  std::string name;
  const algebra::FinHeyting* heyting = nullptr;  // propositional target
  const fincat::FinCategory* category = nullptr; // presheaf target
};

struct SoundnessRecord {
  std::string rule;
  std::string target;
  std::string status;  // pass | fail | refused
  std::string detail;
};

// Per-rule semantic checks: propositional rules are instantiated over all
// element tuples of each Heyting target; quantifier, equality and
// substitution rules are exercised over enumerated subpresheaves and natural
// transformations of each presheaf target. Classical rules pair only with
// Boolean targets; other pairings are recorded as refused.
std::vector<SoundnessRecord> soundness_suite(kernel::SystemTag sys,
                                             const std::vector<SoundnessTarget>& targets);

// ---- deterministic corpora ----

// Seeded pseudo-random formulas over the given atoms, structurally deduplicated.
std::vector<syntax::FormulaPtr> formula_corpus(const std::vector<std::string>& atoms,
                                               int depth, std::size_t count, unsigned seed,
                                               syntax::FragmentTag fragment);

std::vector<syntax::Sequent> sequent_corpus(const std::vector<std::string>& atoms, int depth,
                                            std::size_t count, unsigned seed,
                                            syntax::FragmentTag fragment);

}  // namespace toposcope::semantics
