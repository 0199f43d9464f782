#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toposcope/errors.hpp"

namespace toposcope::syntax {

// Least formula class containing a formula. Ordered by inclusion.
enum class FragmentTag { Geometric = 0, SubFirstOrder = 1, FirstOrder = 2 };

const char* fragment_name(FragmentTag t);

struct Signature {
  struct FunDecl {
    std::vector<std::string> args;
    std::string result;
    friend bool operator==(const FunDecl&, const FunDecl&) = default;
  };

  std::vector<std::string> sorts;
  std::map<std::string, std::vector<std::string>> relations;
  std::map<std::string, FunDecl> functions;

  void add_sort(const std::string& name);
  void add_relation(const std::string& name, std::vector<std::string> arg_sorts);
  void add_function(const std::string& name, std::vector<std::string> arg_sorts,
                    const std::string& result_sort);
  // 0-ary relation used as a propositional atom
  void add_atom(const std::string& name) { add_relation(name, {}); }

  bool has_sort(const std::string& name) const;
  // Every atom is a 0-ary relation and every relation is 0-ary.
  bool propositional() const;
  std::vector<std::string> atom_names() const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Ordered list of typed variables; names pairwise distinct.
struct Context {
  std::vector<std::pair<std::string, std::string>> vars;  // (name, sort)

  Context() = default;
  Context(std::initializer_list<std::pair<std::string, std::string>> v);

  bool empty() const { return vars.empty(); }
  std::size_t size() const { return vars.size(); }
  std::optional<std::string> sort_of(const std::string& name) const;
  bool contains(const std::string& name) const { return sort_of(name).has_value(); }
  Context extended(const std::vector<std::pair<std::string, std::string>>& more) const;
  void validate() const;

  friend bool operator==(const Context&, const Context&) = default;
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
 public:
  enum class Kind { Var, App };

  Kind kind;
  std::string name;           // variable name, or function symbol
  std::vector<TermPtr> args;  // empty for Var

  static TermPtr var(const std::string& name);
  static TermPtr app(const std::string& fn, std::vector<TermPtr> args = {});

  friend bool operator==(const Term& a, const Term& b);
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula node. And/Or are the finitary connectives; BigAnd/BigOr
// carry the "infinitary" tag and are kept distinct even when the index family
// happens to be finite (it always is here).
class Formula {
 public:
  enum class Kind {
    Rel, Eq, Truth, Falsity,
    And, Or, BigAnd, BigOr,
    Implies, Exists, Forall
  };

  Kind kind;
  std::string rel;                // Rel only
  std::vector<TermPtr> terms;     // Rel arguments; {lhs, rhs} for Eq
  std::vector<FormulaPtr> parts;  // children; {lhs, rhs} for Implies; {body} for quantifiers
  std::vector<std::pair<std::string, std::string>> binders;  // quantified (var, sort)

  friend bool operator==(const Formula& a, const Formula& b);
};

FormulaPtr rel(const std::string& name, std::vector<TermPtr> args = {});
inline FormulaPtr atom(const std::string& name) { return rel(name); }
FormulaPtr eq(TermPtr lhs, TermPtr rhs);
FormulaPtr truth();
FormulaPtr falsity();
FormulaPtr conj(std::vector<FormulaPtr> parts);   // n >= 2
FormulaPtr disj(std::vector<FormulaPtr> parts);   // n >= 2
FormulaPtr big_conj(std::vector<FormulaPtr> parts);  // n >= 1, tagged infinitary
FormulaPtr big_disj(std::vector<FormulaPtr> parts);  // n >= 1, tagged infinitary
FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs);
// Negation is sugar: stored as lhs => bot.
FormulaPtr neg(FormulaPtr f);
bool is_neg(const Formula& f);
FormulaPtr exists(std::vector<std::pair<std::string, std::string>> binders, FormulaPtr body);
FormulaPtr forall(std::vector<std::pair<std::string, std::string>> binders, FormulaPtr body);

struct Sequent {
  Context ctx;
  FormulaPtr lhs;
  FormulaPtr rhs;

  friend bool operator==(const Sequent& a, const Sequent& b);
};

struct Theory {
  Signature signature;
  std::vector<Sequent> axioms;
  FragmentTag fragment = FragmentTag::Geometric;

  // Recomputes the least fragment containing all axioms.
  FragmentTag computed_fragment() const;
  // Throws WellFormednessError if an axiom is ill-formed or exceeds `fragment`.
  void validate() const;
};

// ---- operations ----

FragmentTag classify_fragment(const Formula& f);

// Sort of a term under signature + context; throws on mismatch.
std::string term_sort(const Term& t, const Signature& sig, const Context& ctx);

// Full well-formedness: sorts match, free variables lie in ctx, binders fresh.
void check_well_formed(const Formula& f, const Signature& sig, const Context& ctx);

// Free variables with sorts inferred from atom positions. Throws if a
// variable's sort is not forced (e.g. a bare x = y between variables) or is
// forced inconsistently.
std::map<std::string, std::string> free_variables(const Formula& f, const Signature& sig);

// Free variable names only (no sort inference).
std::set<std::string> free_variable_names(const Formula& f);
std::set<std::string> free_variable_names(const Term& t);

// Simultaneous capture-avoiding substitution of terms for ctx's variables.
// terms[i] replaces ctx.vars[i]; bound variables are renamed (prime suffix)
// when they would capture a variable of an inserted term.
FormulaPtr substitute(const Formula& f, const std::vector<TermPtr>& terms, const Context& ctx);
TermPtr substitute(const Term& t, const std::vector<TermPtr>& terms, const Context& ctx);

// All subformulas in deterministic post-order, structurally deduplicated.
std::vector<FormulaPtr> subformulas(const FormulaPtr& f);

// ---- printing (the concrete grammar lives in parse.cpp) ----

std::string to_text(const Term& t);
std::string to_text(const Formula& f);
std::string to_text(const Sequent& s);
std::string to_text(const Context& c);

}  // namespace toposcope::syntax
