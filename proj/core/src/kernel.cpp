#include "toposcope/kernel.hpp"

#include <algorithm>

namespace toposcope::kernel {

using syntax::Formula;
using syntax::FormulaPtr;
using syntax::Sequent;
using syntax::Term;

const char* system_name(SystemTag t) {
  switch (t) {
    case SystemTag::Geometric: return "geometric";
    case SystemTag::SubFirstOrder: return "sub-first-order";
    case SystemTag::FirstOrder: return "first-order";
    case SystemTag::Classical: return "classical";
  }
  return "?";
}

syntax::FragmentTag fragment_of(SystemTag t) {
  switch (t) {
    case SystemTag::Geometric: return syntax::FragmentTag::Geometric;
    case SystemTag::SubFirstOrder: return syntax::FragmentTag::SubFirstOrder;
    case SystemTag::FirstOrder:
    case SystemTag::Classical: return syntax::FragmentTag::FirstOrder;
  }
  return syntax::FragmentTag::FirstOrder;
}

const std::vector<RuleInfo>& all_rules() {
  static const std::vector<RuleInfo> rules = {
      {Rule::Identity, "identity", SystemTag::Geometric, 0, "phi |- phi"},
      {Rule::Cut, "cut", SystemTag::Geometric, 2, "phi |- psi ; psi |- chi  =>  phi |- chi"},
      {Rule::Subst, "subst", SystemTag::Geometric, 1,
       "phi |-[x] psi  =>  phi[t/x] |-[y] psi[t/x]  (terms t over y)"},
      {Rule::Weaken, "weaken", SystemTag::Geometric, 1,
       "phi |-[x] psi  =>  phi |-[x'] psi  (x subset of x')"},
      {Rule::EqRefl, "eq_refl", SystemTag::Geometric, 0, "top |-[x] x = x"},
      {Rule::EqSubst, "eq_subst", SystemTag::Geometric, 0, "(x = y) /\\ phi |- phi[y/x]"},
      {Rule::TrueIntro, "true_intro", SystemTag::Geometric, 0, "phi |- top"},
      {Rule::AndProj, "and_proj", SystemTag::Geometric, 0, "phi_1 /\\ ... /\\ phi_n |- phi_i"},
      {Rule::AndIntro, "and_intro", SystemTag::Geometric, -1,
       "phi |- psi_i (all i)  =>  phi |- psi_1 /\\ ... /\\ psi_n"},
      {Rule::FalseElim, "false_elim", SystemTag::Geometric, 0, "bot |- phi"},
      {Rule::OrInj, "or_inj", SystemTag::Geometric, 0, "phi_i |- phi_1 \\/ ... \\/ phi_n"},
      {Rule::OrElim, "or_elim", SystemTag::Geometric, -1,
       "phi_i |- psi (all i)  =>  phi_1 \\/ ... \\/ phi_n |- psi"},
      {Rule::BigOrInj, "big_or_inj", SystemTag::Geometric, 0, "phi_i |- \\/{ phi_i }"},
      {Rule::BigOrElim, "big_or_elim", SystemTag::Geometric, -1,
       "phi_i |- psi (all i)  =>  \\/{ phi_i } |- psi"},
      {Rule::ImpIntro, "imp_intro", SystemTag::SubFirstOrder, 1,
       "phi /\\ psi |- chi  =>  phi |- psi -> chi"},
      {Rule::ImpElim, "imp_elim", SystemTag::SubFirstOrder, 1,
       "phi |- psi -> chi  =>  phi /\\ psi |- chi"},
      {Rule::ExLeftIntro, "ex_left_intro", SystemTag::Geometric, 1,
       "phi |-[x,y] psi  =>  exists y. phi |-[x] psi  (y not free in psi)"},
      {Rule::ExLeftElim, "ex_left_elim", SystemTag::Geometric, 1,
       "exists y. phi |-[x] psi  =>  phi |-[x,y] psi"},
      {Rule::AllRightIntro, "all_right_intro", SystemTag::FirstOrder, 1,
       "phi |-[x,y] psi  =>  phi |-[x] forall y. psi  (y not free in phi)"},
      {Rule::AllRightElim, "all_right_elim", SystemTag::FirstOrder, 1,
       "phi |-[x] forall y. psi  =>  phi |-[x,y] psi"},
      {Rule::BigAndProj, "big_and_proj", SystemTag::FirstOrder, 0, "/\\{ phi_i } |- phi_i"},
      {Rule::BigAndIntro, "big_and_intro", SystemTag::FirstOrder, -1,
       "phi |- psi_i (all i)  =>  phi |- /\\{ psi_i }"},
      {Rule::Dist, "dist", SystemTag::Geometric, 0,
       "phi /\\ (psi_1 \\/ ... \\/ psi_n) |- (phi /\\ psi_1) \\/ ... \\/ (phi /\\ psi_n)"},
      {Rule::Frobenius, "frobenius", SystemTag::Geometric, 0,
       "phi /\\ exists y. psi |- exists y. (phi /\\ psi)  (y not free in phi)"},
      {Rule::Lem, "lem", SystemTag::Classical, 0, "top |- phi \\/ ~phi"},
      {Rule::Axiom, "axiom", SystemTag::Geometric, 0, "axiom i of the theory, instantiated"},
  };
  return rules;
}

std::optional<Rule> rule_by_name(const std::string& name) {
  for (const auto& r : all_rules())
    if (r.name == name) return r.rule;
  return std::nullopt;
}

const RuleInfo& rule_info(Rule r) {
  for (const auto& info : all_rules())
    if (info.rule == r) return info;
  throw Error("unknown rule");
}

std::vector<RuleInfo> rule_catalogue(SystemTag sys) {
  std::vector<RuleInfo> out;
  for (const auto& r : all_rules())
    if (r.min_system <= sys) out.push_back(r);
  return out;
}

std::string to_text(const Verdict& v) {
  if (v.accepted()) return "accepted";
  std::string out = "rejected at node [";
  for (std::size_t i = 0; i < v.path.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(v.path[i]);
  }
  out += "]: " + v.reason;
  return out;
}

namespace {

struct Checker {
  SystemTag sys;
  const syntax::Theory& theory;
  Verdict verdict;

  bool fail(const std::vector<int>& path, Verdict::Code code, const std::string& reason) {
    verdict.code = code;
    verdict.path = path;
    verdict.reason = reason;
    return false;
  }

  static bool same(const FormulaPtr& a, const FormulaPtr& b) { return *a == *b; }

  bool binders_avoid(const std::vector<std::pair<std::string, std::string>>& binders,
                     const Formula& f) {
    auto names = syntax::free_variable_names(f);
    for (const auto& [n, s] : binders)
      if (names.count(n)) return false;
    return true;
  }

  // The suffix by which `extended` extends `base`, or nullopt.
  static std::optional<std::vector<std::pair<std::string, std::string>>> ctx_suffix(
      const syntax::Context& base, const syntax::Context& extended) {
    if (extended.vars.size() < base.vars.size()) return std::nullopt;
    for (std::size_t i = 0; i < base.vars.size(); ++i)
      if (extended.vars[i] != base.vars[i]) return std::nullopt;
    return std::vector<std::pair<std::string, std::string>>(
        extended.vars.begin() + static_cast<long>(base.vars.size()), extended.vars.end());
  }

  // Quantifier double rules admit alpha-renamed instances: the context
  // suffix stands for the bound variable string. Returns the body with the
  // binders renamed to the suffix variables, or nullptr on a sort mismatch.
  static FormulaPtr rename_binders(const Formula& quantified,
                                   const std::vector<std::pair<std::string, std::string>>& to) {
    if (quantified.binders.size() != to.size()) return nullptr;
    for (std::size_t i = 0; i < to.size(); ++i)
      if (quantified.binders[i].second != to[i].second) return nullptr;
    std::vector<syntax::TermPtr> terms;
    for (const auto& [n, s] : to) terms.push_back(Term::var(n));
    syntax::Context binder_ctx;
    binder_ctx.vars = quantified.binders;
    return syntax::substitute(*quantified.parts[0], terms, binder_ctx);
  }

  bool check_node(const ProofTree& p, std::vector<int>& path) {
    const Sequent& c = p.conclusion;

    try {
      c.ctx.validate();
      syntax::check_well_formed(*c.lhs, theory.signature, c.ctx);
      syntax::check_well_formed(*c.rhs, theory.signature, c.ctx);
    } catch (const WellFormednessError& e) {
      return fail(path, Verdict::Code::IllFormed, e.what());
    }

    auto frag = std::max(syntax::classify_fragment(*c.lhs), syntax::classify_fragment(*c.rhs));
    if (frag > fragment_of(sys))
      return fail(path, Verdict::Code::FragmentViolation,
                  "sequent lies in fragment " + std::string(syntax::fragment_name(frag)) +
                      ", outside the " + system_name(sys) + " system");

    const RuleInfo& info = rule_info(p.rule);
    if (info.min_system > sys)
      return fail(path, Verdict::Code::UnavailableRule,
                  "rule " + info.name + " is not available in the " + system_name(sys) +
                      " system");
    if (info.premise_count >= 0 &&
        static_cast<std::size_t>(info.premise_count) != p.premises.size())
      return fail(path, Verdict::Code::SchemaMismatch,
                  "rule " + info.name + " expects " + std::to_string(info.premise_count) +
                      " premises, got " + std::to_string(p.premises.size()));

    if (!check_schema(p, path)) return false;

    for (std::size_t i = 0; i < p.premises.size(); ++i) {
      path.push_back(static_cast<int>(i));
      if (!check_node(p.premises[i], path)) return false;
      path.pop_back();
    }
    return true;
  }

  bool schema_fail(const std::vector<int>& path, const std::string& detail) {
    return fail(path, Verdict::Code::SchemaMismatch, detail);
  }

  bool check_schema(const ProofTree& p, const std::vector<int>& path) {
    const Sequent& c = p.conclusion;
    const auto& prem = p.premises;
    const std::string& rn = rule_info(p.rule).name;

    auto ctx_matches = [&](const Sequent& s) { return s.ctx == c.ctx; };

    switch (p.rule) {
      case Rule::Identity:
        if (!same(c.lhs, c.rhs)) return schema_fail(path, "identity: sides differ");
        return true;

      case Rule::Cut:
        if (!ctx_matches(prem[0].conclusion) || !ctx_matches(prem[1].conclusion))
          return schema_fail(path, "cut: contexts differ");
        if (!same(prem[0].conclusion.lhs, c.lhs) || !same(prem[1].conclusion.rhs, c.rhs) ||
            !same(prem[0].conclusion.rhs, prem[1].conclusion.lhs))
          return schema_fail(path, "cut: sequents do not compose");
        return true;

      case Rule::Subst: {
        const Sequent& s = prem[0].conclusion;
        if (p.side.terms.size() != s.ctx.size())
          return schema_fail(path, "subst: expected " + std::to_string(s.ctx.size()) + " terms");
        try {
          for (std::size_t i = 0; i < p.side.terms.size(); ++i) {
            auto got = syntax::term_sort(*p.side.terms[i], theory.signature, c.ctx);
            if (got != s.ctx.vars[i].second)
              return schema_fail(path, "subst: term " + std::to_string(i) + " has sort " + got +
                                           ", expected " + s.ctx.vars[i].second);
          }
          if (!same(c.lhs, syntax::substitute(*s.lhs, p.side.terms, s.ctx)) ||
              !same(c.rhs, syntax::substitute(*s.rhs, p.side.terms, s.ctx)))
            return schema_fail(path, "subst: conclusion is not the substituted premise");
        } catch (const WellFormednessError& e) {
          return schema_fail(path, std::string("subst: ") + e.what());
        }
        return true;
      }

      case Rule::Weaken: {
        const Sequent& s = prem[0].conclusion;
        if (!same(s.lhs, c.lhs) || !same(s.rhs, c.rhs))
          return schema_fail(path, "weaken: formulas changed");
        for (const auto& v : s.ctx.vars) {
          auto sort = c.ctx.sort_of(v.first);
          if (!sort || *sort != v.second)
            return schema_fail(path, "weaken: variable " + v.first + " missing from context");
        }
        return true;
      }

      case Rule::EqRefl: {
        if (c.lhs->kind != Formula::Kind::Truth) return schema_fail(path, "eq_refl: lhs not top");
        if (c.rhs->kind != Formula::Kind::Eq) return schema_fail(path, "eq_refl: rhs not equality");
        const auto& l = *c.rhs->terms[0];
        const auto& r = *c.rhs->terms[1];
        if (l.kind != Term::Kind::Var || !(l == r))
          return schema_fail(path, "eq_refl: rhs must be x = x for a context variable");
        if (!c.ctx.contains(l.name))
          return schema_fail(path, "eq_refl: variable not in context");
        return true;
      }

      case Rule::EqSubst: {
        if (c.lhs->kind != Formula::Kind::And || c.lhs->parts.size() != 2)
          return schema_fail(path, "eq_subst: lhs must be (x = y) /\\ phi");
        const auto& eqf = *c.lhs->parts[0];
        if (eqf.kind != Formula::Kind::Eq || eqf.terms[0]->kind != Term::Kind::Var ||
            eqf.terms[1]->kind != Term::Kind::Var)
          return schema_fail(path, "eq_subst: first conjunct must equate two variables");
        const std::string& x = eqf.terms[0]->name;
        const std::string& y = eqf.terms[1]->name;
        auto sx = c.ctx.sort_of(x), sy = c.ctx.sort_of(y);
        if (!sx || !sy || *sx != *sy)
          return schema_fail(path, "eq_subst: variables not in context at a common sort");
        syntax::Context single{{x, *sx}};
        auto expected = syntax::substitute(*c.lhs->parts[1], {Term::var(y)}, single);
        if (!same(c.rhs, expected))
          return schema_fail(path, "eq_subst: rhs is not phi[y/x]");
        return true;
      }

      case Rule::TrueIntro:
        if (c.rhs->kind != Formula::Kind::Truth) return schema_fail(path, "true_intro: rhs not top");
        return true;

      case Rule::FalseElim:
        if (c.lhs->kind != Formula::Kind::Falsity)
          return schema_fail(path, "false_elim: lhs not bot");
        return true;

      case Rule::AndProj:
      case Rule::BigAndProj: {
        auto want = p.rule == Rule::AndProj ? Formula::Kind::And : Formula::Kind::BigAnd;
        if (c.lhs->kind != want) return schema_fail(path, rn + ": lhs is not a conjunction");
        for (const auto& part : c.lhs->parts)
          if (same(part, c.rhs)) return true;
        return schema_fail(path, rn + ": rhs is not a conjunct of lhs");
      }

      case Rule::OrInj:
      case Rule::BigOrInj: {
        auto want = p.rule == Rule::OrInj ? Formula::Kind::Or : Formula::Kind::BigOr;
        if (c.rhs->kind != want) return schema_fail(path, rn + ": rhs is not a disjunction");
        for (const auto& part : c.rhs->parts)
          if (same(part, c.lhs)) return true;
        return schema_fail(path, rn + ": lhs is not a disjunct of rhs");
      }

      case Rule::AndIntro:
      case Rule::BigAndIntro: {
        auto want = p.rule == Rule::AndIntro ? Formula::Kind::And : Formula::Kind::BigAnd;
        if (c.rhs->kind != want) return schema_fail(path, rn + ": rhs is not a conjunction");
        if (prem.size() != c.rhs->parts.size())
          return schema_fail(path, rn + ": premise count differs from conjunct count");
        for (std::size_t i = 0; i < prem.size(); ++i) {
          const Sequent& s = prem[i].conclusion;
          if (!ctx_matches(s) || !same(s.lhs, c.lhs) || !same(s.rhs, c.rhs->parts[i]))
            return schema_fail(path, rn + ": premise " + std::to_string(i) + " mismatched");
        }
        return true;
      }

      case Rule::OrElim:
      case Rule::BigOrElim: {
        auto want = p.rule == Rule::OrElim ? Formula::Kind::Or : Formula::Kind::BigOr;
        if (c.lhs->kind != want) return schema_fail(path, rn + ": lhs is not a disjunction");
        if (prem.size() != c.lhs->parts.size())
          return schema_fail(path, rn + ": premise count differs from disjunct count");
        for (std::size_t i = 0; i < prem.size(); ++i) {
          const Sequent& s = prem[i].conclusion;
          if (!ctx_matches(s) || !same(s.lhs, c.lhs->parts[i]) || !same(s.rhs, c.rhs))
            return schema_fail(path, rn + ": premise " + std::to_string(i) + " mismatched");
        }
        return true;
      }

      case Rule::ImpIntro: {
        if (c.rhs->kind != Formula::Kind::Implies)
          return schema_fail(path, "imp_intro: rhs is not an implication");
        const Sequent& s = prem[0].conclusion;
        if (!ctx_matches(s)) return schema_fail(path, "imp_intro: contexts differ");
        if (s.lhs->kind != Formula::Kind::And || s.lhs->parts.size() != 2 ||
            !same(s.lhs->parts[0], c.lhs) || !same(s.lhs->parts[1], c.rhs->parts[0]) ||
            !same(s.rhs, c.rhs->parts[1]))
          return schema_fail(path, "imp_intro: premise must be phi /\\ psi |- chi");
        return true;
      }

      case Rule::ImpElim: {
        if (c.lhs->kind != Formula::Kind::And || c.lhs->parts.size() != 2)
          return schema_fail(path, "imp_elim: lhs must be phi /\\ psi");
        const Sequent& s = prem[0].conclusion;
        if (!ctx_matches(s)) return schema_fail(path, "imp_elim: contexts differ");
        if (s.rhs->kind != Formula::Kind::Implies || !same(s.lhs, c.lhs->parts[0]) ||
            !same(s.rhs->parts[0], c.lhs->parts[1]) || !same(s.rhs->parts[1], c.rhs))
          return schema_fail(path, "imp_elim: premise must be phi |- psi -> chi");
        return true;
      }

      case Rule::ExLeftIntro: {
        if (c.lhs->kind != Formula::Kind::Exists)
          return schema_fail(path, "ex_left_intro: lhs is not existential");
        const Sequent& s = prem[0].conclusion;
        auto suffix = ctx_suffix(c.ctx, s.ctx);
        if (!suffix)
          return schema_fail(path, "ex_left_intro: premise context must extend the conclusion's");
        FormulaPtr body = rename_binders(*c.lhs, *suffix);
        if (!body)
          return schema_fail(path, "ex_left_intro: context suffix does not match the binders");
        if (!same(s.lhs, body) || !same(s.rhs, c.rhs))
          return schema_fail(path, "ex_left_intro: premise formulas mismatched");
        if (!binders_avoid(*suffix, *c.rhs))
          return schema_fail(path, "ex_left_intro: bound variable free in rhs");
        return true;
      }

      case Rule::ExLeftElim: {
        const Sequent& s = prem[0].conclusion;
        if (s.lhs->kind != Formula::Kind::Exists)
          return schema_fail(path, "ex_left_elim: premise lhs is not existential");
        auto suffix = ctx_suffix(s.ctx, c.ctx);
        if (!suffix)
          return schema_fail(path, "ex_left_elim: context must extend the premise's");
        FormulaPtr body = rename_binders(*s.lhs, *suffix);
        if (!body)
          return schema_fail(path, "ex_left_elim: context suffix does not match the binders");
        if (!same(c.lhs, body) || !same(c.rhs, s.rhs))
          return schema_fail(path, "ex_left_elim: formulas mismatched");
        if (!binders_avoid(*suffix, *s.rhs))
          return schema_fail(path, "ex_left_elim: bound variable free in rhs");
        return true;
      }

      case Rule::AllRightIntro: {
        if (c.rhs->kind != Formula::Kind::Forall)
          return schema_fail(path, "all_right_intro: rhs is not universal");
        const Sequent& s = prem[0].conclusion;
        auto suffix = ctx_suffix(c.ctx, s.ctx);
        if (!suffix)
          return schema_fail(path, "all_right_intro: premise context must extend the conclusion's");
        FormulaPtr body = rename_binders(*c.rhs, *suffix);
        if (!body)
          return schema_fail(path, "all_right_intro: context suffix does not match the binders");
        if (!same(s.lhs, c.lhs) || !same(s.rhs, body))
          return schema_fail(path, "all_right_intro: premise formulas mismatched");
        if (!binders_avoid(*suffix, *c.lhs))
          return schema_fail(path, "all_right_intro: bound variable free in lhs");
        return true;
      }

      case Rule::AllRightElim: {
        const Sequent& s = prem[0].conclusion;
        if (s.rhs->kind != Formula::Kind::Forall)
          return schema_fail(path, "all_right_elim: premise rhs is not universal");
        auto suffix = ctx_suffix(s.ctx, c.ctx);
        if (!suffix)
          return schema_fail(path, "all_right_elim: context must extend the premise's");
        FormulaPtr body = rename_binders(*s.rhs, *suffix);
        if (!body)
          return schema_fail(path, "all_right_elim: context suffix does not match the binders");
        if (!same(c.lhs, s.lhs) || !same(c.rhs, body))
          return schema_fail(path, "all_right_elim: formulas mismatched");
        if (!binders_avoid(*suffix, *s.lhs))
          return schema_fail(path, "all_right_elim: bound variable free in lhs");
        return true;
      }

      case Rule::Dist: {
        if (c.lhs->kind != Formula::Kind::And || c.lhs->parts.size() != 2)
          return schema_fail(path, "dist: lhs must be phi /\\ (disjunction)");
        const auto& phi = c.lhs->parts[0];
        const auto& dis = c.lhs->parts[1];
        if (dis->kind != Formula::Kind::Or && dis->kind != Formula::Kind::BigOr)
          return schema_fail(path, "dist: second conjunct is not a disjunction");
        if (c.rhs->kind != dis->kind || c.rhs->parts.size() != dis->parts.size())
          return schema_fail(path, "dist: rhs disjunction shape mismatched");
        for (std::size_t i = 0; i < dis->parts.size(); ++i) {
          const auto& part = c.rhs->parts[i];
          if (part->kind != Formula::Kind::And || part->parts.size() != 2 ||
              !same(part->parts[0], phi) || !same(part->parts[1], dis->parts[i]))
            return schema_fail(path, "dist: rhs disjunct " + std::to_string(i) + " mismatched");
        }
        return true;
      }

      case Rule::Frobenius: {
        if (c.lhs->kind != Formula::Kind::And || c.lhs->parts.size() != 2 ||
            c.lhs->parts[1]->kind != Formula::Kind::Exists)
          return schema_fail(path, "frobenius: lhs must be phi /\\ exists y. psi");
        const auto& phi = c.lhs->parts[0];
        const auto& ex = c.lhs->parts[1];
        if (!binders_avoid(ex->binders, *phi))
          return schema_fail(path, "frobenius: bound variable free in phi");
        if (c.rhs->kind != Formula::Kind::Exists || c.rhs->binders != ex->binders)
          return schema_fail(path, "frobenius: rhs must bind the same variables");
        const auto& body = c.rhs->parts[0];
        if (body->kind != Formula::Kind::And || body->parts.size() != 2 ||
            !same(body->parts[0], phi) || !same(body->parts[1], ex->parts[0]))
          return schema_fail(path, "frobenius: rhs body must be phi /\\ psi");
        return true;
      }

      case Rule::Lem: {
        if (c.lhs->kind != Formula::Kind::Truth) return schema_fail(path, "lem: lhs not top");
        if (c.rhs->kind != Formula::Kind::Or || c.rhs->parts.size() != 2)
          return schema_fail(path, "lem: rhs must be phi \\/ ~phi");
        const auto& l = c.rhs->parts[0];
        const auto& r = c.rhs->parts[1];
        if (!syntax::is_neg(*r) || !same(r->parts[0], l))
          return schema_fail(path, "lem: rhs must be phi \\/ ~phi");
        return true;
      }

      case Rule::Axiom: {
        if (!p.side.index)
          return fail(path, Verdict::Code::UnknownAxiom, "axiom: no index cited");
        std::size_t i = *p.side.index;
        if (i >= theory.axioms.size())
          return fail(path, Verdict::Code::UnknownAxiom,
                      "axiom: index " + std::to_string(i) + " out of range");
        const Sequent& ax = theory.axioms[i];
        if (p.side.terms.empty()) {
          if (!(c == ax)) return schema_fail(path, "axiom: conclusion differs from the axiom");
          return true;
        }
        if (p.side.terms.size() != ax.ctx.size())
          return schema_fail(path, "axiom: expected " + std::to_string(ax.ctx.size()) + " terms");
        try {
          for (std::size_t k = 0; k < p.side.terms.size(); ++k) {
            auto got = syntax::term_sort(*p.side.terms[k], theory.signature, c.ctx);
            if (got != ax.ctx.vars[k].second)
              return schema_fail(path, "axiom: term " + std::to_string(k) + " has wrong sort");
          }
          if (!same(c.lhs, syntax::substitute(*ax.lhs, p.side.terms, ax.ctx)) ||
              !same(c.rhs, syntax::substitute(*ax.rhs, p.side.terms, ax.ctx)))
            return schema_fail(path, "axiom: conclusion is not the instantiated axiom");
        } catch (const WellFormednessError& e) {
          return schema_fail(path, std::string("axiom: ") + e.what());
        }
        return true;
      }
    }
    return schema_fail(path, "unknown rule");
  }
};

}  // namespace

Verdict check_proof(const ProofTree& p, SystemTag sys, const syntax::Theory& theory) {
  Checker checker{sys, theory, {}};
  std::vector<int> path;
  checker.check_node(p, path);
  return checker.verdict;
}

}  // namespace toposcope::kernel
