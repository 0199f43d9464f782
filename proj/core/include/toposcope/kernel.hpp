#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toposcope/syntax.hpp"

namespace toposcope::kernel {

// Deduction-systems ordered by strength; rule availability is monotone.
enum class SystemTag { Geometric = 0, SubFirstOrder = 1, FirstOrder = 2, Classical = 3 };

const char* system_name(SystemTag t);
// Largest formula fragment a system's sequents may mention.
syntax::FragmentTag fragment_of(SystemTag t);

enum class Rule {
  Identity, Cut, Subst, Weaken,
  EqRefl, EqSubst,
  TrueIntro, AndProj, AndIntro,
  FalseElim, OrInj, OrElim,
  BigOrInj, BigOrElim,
  ImpIntro, ImpElim,
  ExLeftIntro, ExLeftElim,
  AllRightIntro, AllRightElim,
  BigAndProj, BigAndIntro,
  Dist, Frobenius, Lem,
  Axiom,
};

struct RuleInfo {
  Rule rule;
  std::string name;
  SystemTag min_system;
  int premise_count;  // -1 = variadic
  std::string schema;
};

const std::vector<RuleInfo>& all_rules();
std::optional<Rule> rule_by_name(const std::string& name);
const RuleInfo& rule_info(Rule r);

// Exact rule set available in a system; a weaker system's catalogue is a
// subset of a stronger one's.
std::vector<RuleInfo> rule_catalogue(SystemTag sys);

// Extra instantiation data a rule schema cannot recover from its conclusion:
// the cited axiom index and the terms of a substitution instance.
struct SideData {
  std::optional<std::size_t> index;
  std::vector<syntax::TermPtr> terms;
};

struct ProofTree {
  syntax::Sequent conclusion;
  Rule rule = Rule::Identity;
  std::vector<ProofTree> premises;
  SideData side;
};

struct Verdict {
  enum class Code {
    Accepted, UnavailableRule, SchemaMismatch, UnknownAxiom, FragmentViolation, IllFormed
  };
  Code code = Code::Accepted;
  std::vector<int> path;  // child indices from the root to the offending node
  std::string reason;

  bool accepted() const { return code == Code::Accepted; }
};

std::string to_text(const Verdict& v);

// Accepts iff every node instantiates a rule available in `sys` (or cites an
// axiom of `theory`), all schema side conditions hold, and every sequent in
// the tree is well-formed within the system's fragment. Rejection pinpoints
// the first offending node in premise order.
Verdict check_proof(const ProofTree& p, SystemTag sys, const syntax::Theory& theory);

}  // namespace toposcope::kernel
