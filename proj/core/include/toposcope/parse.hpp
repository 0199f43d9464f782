#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "toposcope/fincat.hpp"
#include "toposcope/kernel.hpp"
#include "toposcope/semantics.hpp"
#include "toposcope/syntax.hpp"

namespace toposcope::cli {

// Theory grammar (line-oriented, UTF-8, '#' comments):
//   sort A B.
//   rel R(A, B).          rel p.
//   fun f(A) : B.         fun c : B.
//   atoms p q.            (sugar for 0-ary rels)
//   fragment geometric|sfo|fo.
//   axiom <formula> |- <formula>.
//   axiom <formula> |-[x:A, y:B] <formula>.
// Connectives: /\  \/  ->  <->  ~  top  bot  exists x:A. ...  forall x:A. ...
// Infinitary families carry the tag: \/{ f1; f2 }  /\{ f1; f2 }.
syntax::Theory parse_theory(const std::string& text);

syntax::FormulaPtr parse_formula(const std::string& text, const syntax::Signature& sig,
                                 const syntax::Context& ctx = {});

std::string print_theory(const syntax::Theory& t);

// Category files:
//   objects X Y.
//   arrow f : X -> Y.
//   compose g o f = h.
//   presheaf P { on X : a b. act f : a -> c, b -> d. }
// For an arrow f : X -> Y, "act f" maps P(Y)-elements to P(X)-elements.
struct CategoryDocument {
  std::unique_ptr<fincat::FinCategory> category;
  std::vector<std::pair<std::string, fincat::Presheaf>> presheaves;

  const fincat::Presheaf* find_presheaf(const std::string& name) const;
};

CategoryDocument parse_category(const std::string& text);
std::string print_category(const fincat::FinCategory& c);

// Structure files. Propositional targets:
//   algebra chain 3.        algebra boolean 2.
//   assign p = 2.
// Presheaf targets embed a category block, name sorts, and list relation
// tables over the product of the argument sorts (tuple element names):
//   category { ... }
//   sort A = P.
//   rel R { on X : (a). }
//   fun f { on X : (a) -> b. }
struct StructureDocument {
  // propositional mode
  std::unique_ptr<algebra::FinHeyting> heyting;
  std::map<std::string, int> assignment;

  // presheaf mode
  std::unique_ptr<CategoryDocument> catdoc;
  std::vector<std::unique_ptr<fincat::ProductPresheaf>> domains;
  std::unique_ptr<semantics::PresheafStructure> presheaf;

  bool is_presheaf() const { return presheaf != nullptr; }
  semantics::PropStructure prop_structure() const;
};

StructureDocument parse_structure(const std::string& text, const syntax::Signature& sig);

// Proof files:
//   step s1 = axiom @ 0 : top |- p.
//   step s2 = or_inj : p |- p \/ q.
//   step s3 = cut from s1, s2 : top |- p \/ q.
//   root s3.
// Rule arguments after '@' are integers or terms (terms parse over the
// step's conclusion context).
kernel::ProofTree parse_proof(const std::string& text, const syntax::Theory& theory);

}  // namespace toposcope::cli
