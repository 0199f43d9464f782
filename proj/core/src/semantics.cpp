#include "toposcope/semantics.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace toposcope::semantics {

using syntax::Context;
using syntax::Formula;
using syntax::FormulaPtr;
using syntax::Sequent;
using syntax::Term;

// ---- propositional interpretation ----

int interpret(const PropStructure& m, const Formula& f) {
  const auto& h = *m.target;
  switch (f.kind) {
    case Formula::Kind::Rel: {
      if (!f.terms.empty())
        throw WellFormednessError("propositional target cannot interpret " + f.rel);
      auto it = m.assignment.find(f.rel);
      if (it == m.assignment.end())
        throw WellFormednessError("atom " + f.rel + " has no interpretation");
      return it->second;
    }
    case Formula::Kind::Truth: return h.top();
    case Formula::Kind::Falsity: return h.bot();
    case Formula::Kind::And:
    case Formula::Kind::BigAnd: {
      int r = h.top();
      for (const auto& p : f.parts) r = h.meet(r, interpret(m, *p));
      return r;
    }
    case Formula::Kind::Or:
    case Formula::Kind::BigOr: {
      int r = h.bot();
      for (const auto& p : f.parts) r = h.join(r, interpret(m, *p));
      return r;
    }
    case Formula::Kind::Implies:
      return h.imp(interpret(m, *f.parts[0]), interpret(m, *f.parts[1]));
    case Formula::Kind::Eq:
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      throw WellFormednessError("propositional target cannot interpret quantifiers or equality");
  }
  throw WellFormednessError("unreachable formula kind");
}

bool sequent_valid(const PropStructure& m, const Sequent& s) {
  return m.target->le(interpret(m, *s.lhs), interpret(m, *s.rhs));
}

bool is_homomorphism(const PropStructureMap& h) {
  h.hom.validate();
  for (const auto& [atom, value] : h.source->assignment) {
    auto it = h.target->assignment.find(atom);
    if (it == h.target->assignment.end()) return false;
    if (!h.target->target->le(h.hom(value), it->second)) return false;
  }
  return true;
}

MorphismReport is_subelementary(const PropStructureMap& h,
                                const std::vector<FormulaPtr>& corpus) {
  MorphismReport report;
  for (const auto& f : corpus) {
    int source_side = h.hom(interpret(*h.source, *f));
    int target_side = interpret(*h.target, *f);
    if (!h.target->target->le(source_side, target_side)) {
      report.holds = false;
      report.witness = f;
      return report;
    }
  }
  return report;
}

MorphismReport is_elementary(const PropStructureMap& h,
                             const std::vector<FormulaPtr>& corpus) {
  return is_subelementary(h, corpus);  // same inequality, first-order corpus
}

// ---- presheaf interpretation ----

void PresheafStructure::validate() const {
  for (const auto& [name, args] : signature->relations) {
    auto it = relations.find(name);
    if (it == relations.end())
      throw WellFormednessError("relation " + name + " has no interpretation");
    it->second.validate();
  }
  for (const auto& [name, decl] : signature->functions) {
    if (!functions.count(name))
      throw WellFormednessError("function " + name + " has no interpretation");
    functions.at(name).validate();
  }
  for (const auto& s : signature->sorts)
    if (!sorts.count(s)) throw WellFormednessError("sort " + s + " has no interpretation");
}

namespace {

const fincat::Presheaf& sort_presheaf(const PresheafStructure& m, const std::string& sort) {
  auto it = m.sorts.find(sort);
  if (it == m.sorts.end()) throw WellFormednessError("sort " + sort + " has no interpretation");
  return *it->second;
}

fincat::ProductPresheaf context_product(const PresheafStructure& m, const Context& ctx) {
  std::vector<const fincat::Presheaf*> factors;
  for (const auto& [name, sort] : ctx.vars) factors.push_back(&sort_presheaf(m, sort));
  return fincat::product(*m.cat, factors);
}

// Element of t's sort presheaf at `obj`, given context variable values.
int eval_term(const PresheafStructure& m, const Term& t, const Context& ctx, int obj,
              const std::vector<int>& env) {
  if (t.kind == Term::Kind::Var) {
    for (std::size_t i = 0; i < ctx.vars.size(); ++i)
      if (ctx.vars[i].first == t.name) return env[i];
    throw WellFormednessError("unknown variable: " + t.name);
  }
  const auto& decl = m.signature->functions.at(t.name);
  const auto& h = m.functions.at(t.name);
  std::vector<int> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(eval_term(m, *a, ctx, obj, env));
  // h's source is the product of the argument sorts, row-major
  std::size_t idx = 0;
  for (std::size_t k = 0; k < args.size(); ++k)
    idx = idx * sort_presheaf(m, decl.args[k]).carrier(obj) + static_cast<std::size_t>(args[k]);
  return h.component[obj][idx];
}

fincat::Subpresheaf interp_in(const PresheafStructure& m, const Formula& f, const Context& ctx,
                              const fincat::ProductPresheaf& x) {
  const fincat::FinCategory& cat = *m.cat;
  auto pointwise = [&](const std::function<bool(int, const std::vector<int>&)>& pred) {
    fincat::Subpresheaf out = fincat::Subpresheaf::none(x.presheaf);
    for (std::size_t obj = 0; obj < cat.num_objects(); ++obj)
      for (std::size_t e = 0; e < x.presheaf.carrier(static_cast<int>(obj)); ++e)
        if (pred(static_cast<int>(obj), x.decode(static_cast<int>(obj), static_cast<int>(e))))
          out.sets[obj].set(e);
    out.validate();
    return out;
  };

  switch (f.kind) {
    case Formula::Kind::Rel: {
      const auto& argsorts = m.signature->relations.at(f.rel);
      const auto& rel = m.relations.at(f.rel);
      return pointwise([&](int obj, const std::vector<int>& env) {
        std::size_t idx = 0;
        for (std::size_t k = 0; k < f.terms.size(); ++k)
          idx = idx * sort_presheaf(m, argsorts[k]).carrier(obj) +
                static_cast<std::size_t>(eval_term(m, *f.terms[k], ctx, obj, env));
        return rel.sets[obj].test(idx);
      });
    }
    case Formula::Kind::Eq:
      return pointwise([&](int obj, const std::vector<int>& env) {
        return eval_term(m, *f.terms[0], ctx, obj, env) ==
               eval_term(m, *f.terms[1], ctx, obj, env);
      });
    case Formula::Kind::Truth: return fincat::Subpresheaf::full(x.presheaf);
    case Formula::Kind::Falsity: return fincat::Subpresheaf::none(x.presheaf);
    case Formula::Kind::And:
    case Formula::Kind::BigAnd: {
      auto out = fincat::Subpresheaf::full(x.presheaf);
      for (const auto& p : f.parts) out = fincat::intersect(out, interp_in(m, *p, ctx, x));
      return out;
    }
    case Formula::Kind::Or:
    case Formula::Kind::BigOr: {
      auto out = fincat::Subpresheaf::none(x.presheaf);
      for (const auto& p : f.parts) out = fincat::unite(out, interp_in(m, *p, ctx, x));
      return out;
    }
    case Formula::Kind::Implies:
      return fincat::heyting_implication(interp_in(m, *f.parts[0], ctx, x),
                                         interp_in(m, *f.parts[1], ctx, x));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      Context extended = ctx.extended(f.binders);
      fincat::ProductPresheaf xe = context_product(m, extended);
      fincat::Subpresheaf body = interp_in(m, *f.parts[0], extended, xe);
      // projection onto the original context
      fincat::NatTrans proj;
      proj.src = &xe.presheaf;
      proj.dst = &x.presheaf;
      proj.component.resize(cat.num_objects());
      for (std::size_t obj = 0; obj < cat.num_objects(); ++obj) {
        proj.component[obj].resize(xe.presheaf.carrier(static_cast<int>(obj)));
        for (std::size_t e = 0; e < proj.component[obj].size(); ++e) {
          auto tuple = xe.decode(static_cast<int>(obj), static_cast<int>(e));
          tuple.resize(ctx.size());
          proj.component[obj][e] = x.encode(static_cast<int>(obj), tuple);
        }
      }
      proj.validate();
      return f.kind == Formula::Kind::Exists ? fincat::exists_along(proj, body)
                                             : fincat::forall_along(proj, body);
    }
  }
  throw WellFormednessError("unreachable formula kind");
}

}  // namespace

Interpretation interpret(const PresheafStructure& m, const Formula& f, const Context& ctx) {
  Interpretation out;
  out.context = std::make_unique<fincat::ProductPresheaf>(context_product(m, ctx));
  out.subobject = interp_in(m, f, ctx, *out.context);
  return out;
}

bool sequent_valid(const PresheafStructure& m, const Sequent& s) {
  fincat::ProductPresheaf x = context_product(m, s.ctx);
  fincat::Subpresheaf lhs = interp_in(m, *s.lhs, s.ctx, x);
  fincat::Subpresheaf rhs = interp_in(m, *s.rhs, s.ctx, x);
  return lhs.le(rhs);
}

bool is_homomorphism(const PresheafStructureMap& h) {
  const auto& m = *h.source;
  const auto& n = *h.target;
  // function compatibility
  for (const auto& [name, decl] : m.signature->functions) {
    const auto& fm = m.functions.at(name);
    const auto& fn = n.functions.at(name);
    const auto& result_comp = h.components.at(decl.result);
    for (std::size_t obj = 0; obj < m.cat->num_objects(); ++obj) {
      // iterate the source product elementwise
      std::vector<std::size_t> sizes;
      for (const auto& s : decl.args)
        sizes.push_back(m.sorts.at(s)->carrier(static_cast<int>(obj)));
      std::size_t total = 1;
      for (auto k : sizes) total *= k;
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx, mapped = 0;
        std::vector<std::size_t> parts(sizes.size());
        for (std::size_t k = sizes.size(); k-- > 0;) {
          parts[k] = rest % sizes[k];
          rest /= sizes[k];
        }
        for (std::size_t k = 0; k < sizes.size(); ++k) {
          const auto& comp = h.components.at(decl.args[k]);
          mapped = mapped * n.sorts.at(decl.args[k])->carrier(static_cast<int>(obj)) +
                   static_cast<std::size_t>(comp.component[obj][parts[k]]);
        }
        if (result_comp.component[obj][fm.component[obj][idx]] !=
            fn.component[obj][mapped])
          return false;
      }
    }
  }
  // atomic inequality over each relation's canonical context
  for (const auto& [name, argsorts] : m.signature->relations) {
    Context ctx;
    std::vector<syntax::TermPtr> vars;
    for (std::size_t k = 0; k < argsorts.size(); ++k) {
      ctx.vars.emplace_back("x" + std::to_string(k), argsorts[k]);
      vars.push_back(Term::var("x" + std::to_string(k)));
    }
    auto atom_formula = syntax::rel(name, vars);
    fincat::ProductPresheaf xm = context_product(m, ctx);
    fincat::ProductPresheaf xn = context_product(n, ctx);
    auto im = interp_in(m, *atom_formula, ctx, xm);
    auto in_ = interp_in(n, *atom_formula, ctx, xn);
    for (std::size_t obj = 0; obj < m.cat->num_objects(); ++obj) {
      for (std::size_t e = 0; e < xm.presheaf.carrier(static_cast<int>(obj)); ++e) {
        if (!im.sets[obj].test(e)) continue;
        auto tuple = xm.decode(static_cast<int>(obj), static_cast<int>(e));
        std::vector<int> mapped(tuple.size());
        for (std::size_t k = 0; k < tuple.size(); ++k)
          mapped[k] = h.components.at(argsorts[k]).component[obj][tuple[k]];
        if (!in_.sets[obj].test(xn.encode(static_cast<int>(obj), mapped))) return false;
      }
    }
  }
  return true;
}

MorphismReport is_subelementary(const PresheafStructureMap& h,
                                const std::vector<FormulaPtr>& corpus, const Context& ctx) {
  MorphismReport report;
  const auto& m = *h.source;
  const auto& n = *h.target;
  fincat::ProductPresheaf xm = context_product(m, ctx);
  fincat::ProductPresheaf xn = context_product(n, ctx);
  for (const auto& f : corpus) {
    auto im = interp_in(m, *f, ctx, xm);
    auto in_ = interp_in(n, *f, ctx, xn);
    for (std::size_t obj = 0; obj < m.cat->num_objects(); ++obj) {
      for (std::size_t e = 0; e < xm.presheaf.carrier(static_cast<int>(obj)); ++e) {
        if (!im.sets[obj].test(e)) continue;
        auto tuple = xm.decode(static_cast<int>(obj), static_cast<int>(e));
        std::vector<int> mapped(tuple.size());
        for (std::size_t k = 0; k < tuple.size(); ++k)
          mapped[k] = h.components.at(ctx.vars[k].second).component[obj][tuple[k]];
        if (!in_.sets[obj].test(xn.encode(static_cast<int>(obj), mapped))) {
          report.holds = false;
          report.witness = f;
          return report;
        }
      }
    }
  }
  return report;
}

// ---- soundness harness ----

namespace {

using kernel::Rule;
using kernel::SystemTag;

struct PresheafKit {
  const fincat::FinCategory* cat;
  fincat::Presheaf terminal;
  fincat::Presheaf rep;
  fincat::SubobjectLattice sub_terminal;
  fincat::SubobjectLattice sub_rep;
  bool boolean;

  explicit PresheafKit(const fincat::FinCategory& c)
      : cat(&c),
        terminal(fincat::Presheaf::terminal(c)),
        rep(fincat::Presheaf::representable(c, 0)),
        sub_terminal(fincat::subobject_lattice(terminal)),
        sub_rep(fincat::subobject_lattice(rep)) {
    boolean = sub_terminal.algebra.is_boolean() && sub_rep.algebra.is_boolean();
  }
};

// Propositional rule soundness as the corresponding algebraic law, checked
// over all element tuples.
bool prop_rule_sound(Rule r, const algebra::FinHeyting& h, std::string& detail) {
  const int n = static_cast<int>(h.size());
  auto fail = [&](int a, int b, int c, const char* what) {
    detail = std::string(what) + " fails at (" + h.label(a) + "," + h.label(b) + "," +
             h.label(c) + ")";
    return false;
  };
  switch (r) {
    case Rule::Identity:
    case Rule::TrueIntro:
    case Rule::FalseElim:
      for (int a = 0; a < n; ++a) {
        if (!h.le(a, a)) return fail(a, a, a, "reflexivity");
        if (!h.le(a, h.top())) return fail(a, a, a, "top");
        if (!h.le(h.bot(), a)) return fail(a, a, a, "bottom");
      }
      return true;
    case Rule::Cut:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (h.le(a, b) && h.le(b, c) && !h.le(a, c)) return fail(a, b, c, "cut");
      return true;
    case Rule::AndProj:
    case Rule::BigAndProj:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (!h.le(h.meet(a, b), a) || !h.le(h.meet(a, b), b))
            return fail(a, b, 0, "meet projection");
      return true;
    case Rule::AndIntro:
    case Rule::BigAndIntro:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (h.le(c, a) && h.le(c, b) && !h.le(c, h.meet(a, b)))
              return fail(a, b, c, "meet introduction");
      return true;
    case Rule::OrInj:
    case Rule::BigOrInj:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (!h.le(a, h.join(a, b)) || !h.le(b, h.join(a, b)))
            return fail(a, b, 0, "join injection");
      return true;
    case Rule::OrElim:
    case Rule::BigOrElim:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (h.le(a, c) && h.le(b, c) && !h.le(h.join(a, b), c))
              return fail(a, b, c, "join elimination");
      return true;
    case Rule::ImpIntro:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (h.le(h.meet(a, b), c) && !h.le(a, h.imp(b, c)))
              return fail(a, b, c, "residuation (intro)");
      return true;
    case Rule::ImpElim:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (h.le(a, h.imp(b, c)) && !h.le(h.meet(a, b), c))
              return fail(a, b, c, "residuation (elim)");
      return true;
    case Rule::Dist:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (!h.le(h.meet(a, h.join(b, c)), h.join(h.meet(a, b), h.meet(a, c))))
              return fail(a, b, c, "distributivity");
      return true;
    case Rule::Lem:
      for (int a = 0; a < n; ++a)
        if (h.join(a, h.neg(a)) != h.top()) return fail(a, a, a, "excluded middle");
      return true;
    default:
      detail = "no propositional content";
      return true;
  }
}

// Quantifier, equality, substitution and Frobenius checks over enumerated
// subpresheaves and natural transformations.
bool presheaf_rule_sound(Rule r, const PresheafKit& kit, std::string& detail) {
  const fincat::FinCategory& cat = *kit.cat;
  const std::vector<const fincat::Presheaf*> shapes = {&kit.terminal, &kit.rep};

  auto adjunction_checks = [&](bool existential) {
    for (const auto* xp : shapes) {
      for (const auto* yp : shapes) {
        auto subs_x = fincat::subobject_lattice(*xp);
        auto subs_y = fincat::subobject_lattice(*yp);
        for (const auto& h : fincat::enumerate_nat_trans(*xp, *yp)) {
          for (const auto& a : subs_x.elements) {
            for (const auto& b : subs_y.elements) {
              if (existential) {
                bool left = fincat::exists_along(h, a).le(b);
                bool right = a.le(fincat::pullback(h, b));
                if (left != right) {
                  detail = "image adjunction fails";
                  return false;
                }
              } else {
                bool left = fincat::pullback(h, b).le(a);
                bool right = b.le(fincat::forall_along(h, a));
                if (left != right) {
                  detail = "dual-image adjunction fails";
                  return false;
                }
              }
            }
          }
        }
      }
    }
    return true;
  };

  switch (r) {
    case Rule::ExLeftIntro:
    case Rule::ExLeftElim:
      return adjunction_checks(true);
    case Rule::AllRightIntro:
    case Rule::AllRightElim:
      return adjunction_checks(false);
    case Rule::Frobenius: {
      for (const auto* xp : shapes) {
        for (const auto* yp : shapes) {
          auto subs_x = fincat::subobject_lattice(*xp);
          auto subs_y = fincat::subobject_lattice(*yp);
          for (const auto& h : fincat::enumerate_nat_trans(*xp, *yp))
            for (const auto& a : subs_x.elements)
              for (const auto& b : subs_y.elements) {
                auto lhs = fincat::intersect(b, fincat::exists_along(h, a));
                auto rhs = fincat::exists_along(h, fincat::intersect(fincat::pullback(h, b), a));
                if (!(lhs == rhs)) {
                  detail = "Frobenius law fails";
                  return false;
                }
              }
        }
      }
      return true;
    }
    case Rule::Subst:
    case Rule::Weaken: {
      // substitution interprets as pullback; check pullback is a Heyting hom
      for (const auto* xp : shapes) {
        for (const auto* yp : shapes) {
          auto subs_y = fincat::subobject_lattice(*yp);
          for (const auto& h : fincat::enumerate_nat_trans(*xp, *yp)) {
            for (const auto& a : subs_y.elements)
              for (const auto& b : subs_y.elements) {
                if (!(fincat::pullback(h, fincat::intersect(a, b)) ==
                      fincat::intersect(fincat::pullback(h, a), fincat::pullback(h, b))) ||
                    !(fincat::pullback(h, fincat::unite(a, b)) ==
                      fincat::unite(fincat::pullback(h, a), fincat::pullback(h, b))) ||
                    !(fincat::pullback(h, fincat::heyting_implication(a, b)) ==
                      fincat::heyting_implication(fincat::pullback(h, a),
                                                  fincat::pullback(h, b)))) {
                  detail = "pullback is not a Heyting homomorphism";
                  return false;
                }
              }
          }
        }
      }
      return true;
    }
    case Rule::EqRefl:
    case Rule::EqSubst: {
      // diagonal laws in Sub(Y x Y)
      for (const auto* yp : shapes) {
        auto prod = fincat::product(cat, {yp, yp});
        fincat::Subpresheaf diag = fincat::Subpresheaf::none(prod.presheaf);
        for (std::size_t obj = 0; obj < cat.num_objects(); ++obj)
          for (std::size_t e = 0; e < yp->carrier(static_cast<int>(obj)); ++e)
            diag.sets[obj].set(prod.encode(static_cast<int>(obj),
                                           {static_cast<int>(e), static_cast<int>(e)}));
        diag.validate();
        auto p1 = prod.projection(0);
        auto p2 = prod.projection(1);
        auto subs_y = fincat::subobject_lattice(*yp);
        for (const auto& a : subs_y.elements) {
          // (x = y) /\ A(x) <= A(y)
          auto lhs = fincat::intersect(diag, fincat::pullback(p1, a));
          if (!lhs.le(fincat::pullback(p2, a))) {
            detail = "equality substitution fails";
            return false;
          }
        }
      }
      return true;
    }
    default:
      detail = "covered by the propositional harness";
      return true;
  }
}

bool rule_is_presheaf_only(Rule r) {
  switch (r) {
    case Rule::Subst:
    case Rule::Weaken:
    case Rule::EqRefl:
    case Rule::EqSubst:
    case Rule::ExLeftIntro:
    case Rule::ExLeftElim:
    case Rule::AllRightIntro:
    case Rule::AllRightElim:
    case Rule::Frobenius:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<SoundnessRecord> soundness_suite(SystemTag sys,
                                             const std::vector<SoundnessTarget>& targets) {
  std::vector<SoundnessRecord> records;
  auto rules = kernel::rule_catalogue(sys);

  for (const auto& target : targets) {
    if (target.heyting) {
      const auto& h = *target.heyting;
      for (const auto& info : rules) {
        if (info.rule == Rule::Axiom) continue;
        if (rule_is_presheaf_only(info.rule)) continue;
        if (info.rule == Rule::Lem && !h.is_boolean()) {
          records.push_back({info.name, target.name, "refused",
                             "classical rules require Boolean targets"});
          continue;
        }
        std::string detail;
        bool ok = prop_rule_sound(info.rule, h, detail);
        records.push_back({info.name, target.name, ok ? "pass" : "fail", detail});
      }
    }
    if (target.category) {
      PresheafKit kit(*target.category);
      for (const auto& info : rules) {
        if (info.rule == Rule::Axiom) continue;
        std::string detail;
        bool ok;
        if (rule_is_presheaf_only(info.rule)) {
          ok = presheaf_rule_sound(info.rule, kit, detail);
        } else if (info.rule == Rule::Lem) {
          if (!kit.boolean) {
            records.push_back({info.name, target.name, "refused",
                               "classical rules require Boolean targets"});
            continue;
          }
          ok = prop_rule_sound(info.rule, kit.sub_rep.algebra, detail) &&
               prop_rule_sound(info.rule, kit.sub_terminal.algebra, detail);
        } else {
          // lattice rules over the subobject algebras
          ok = prop_rule_sound(info.rule, kit.sub_rep.algebra, detail) &&
               prop_rule_sound(info.rule, kit.sub_terminal.algebra, detail);
        }
        records.push_back({info.name, target.name, ok ? "pass" : "fail", detail});
      }
    }
  }
  return records;
}

// ---- corpora ----

namespace {

FormulaPtr random_formula(std::mt19937& gen, const std::vector<std::string>& atoms, int depth,
                          syntax::FragmentTag fragment);

FormulaPtr random_leaf(std::mt19937& gen, const std::vector<std::string>& atoms) {
  std::size_t pick = gen() % (atoms.size() + 2);
  if (pick < atoms.size()) return syntax::atom(atoms[pick]);
  return pick == atoms.size() ? syntax::truth() : syntax::falsity();
}

FormulaPtr random_formula(std::mt19937& gen, const std::vector<std::string>& atoms, int depth,
                          syntax::FragmentTag fragment) {
  if (depth <= 0) return random_leaf(gen, atoms);
  // connective palette per fragment
  int palette = 4;  // leaf, and, or, bigor
  if (fragment >= syntax::FragmentTag::SubFirstOrder) palette += 2;  // imp, neg
  if (fragment >= syntax::FragmentTag::FirstOrder) palette += 1;     // bigand
  switch (gen() % palette) {
    case 0: return random_leaf(gen, atoms);
    case 1:
      return syntax::conj({random_formula(gen, atoms, depth - 1, fragment),
                           random_formula(gen, atoms, depth - 1, fragment)});
    case 2:
      return syntax::disj({random_formula(gen, atoms, depth - 1, fragment),
                           random_formula(gen, atoms, depth - 1, fragment)});
    case 3:
      return syntax::big_disj({random_formula(gen, atoms, depth - 1, fragment),
                               random_formula(gen, atoms, depth - 1, fragment)});
    case 4:
      return syntax::implies(random_formula(gen, atoms, depth - 1, fragment),
                             random_formula(gen, atoms, depth - 1, fragment));
    case 5: return syntax::neg(random_formula(gen, atoms, depth - 1, fragment));
    default:
      return syntax::big_conj({random_formula(gen, atoms, depth - 1, fragment),
                               random_formula(gen, atoms, depth - 1, fragment)});
  }
}

}  // namespace

std::vector<FormulaPtr> formula_corpus(const std::vector<std::string>& atoms, int depth,
                                       std::size_t count, unsigned seed,
                                       syntax::FragmentTag fragment) {
  std::mt19937 gen(seed);
  std::vector<FormulaPtr> out;
  std::size_t attempts = 0;
  while (out.size() < count && attempts < count * 64) {
    ++attempts;
    auto f = random_formula(gen, atoms, depth, fragment);
    bool fresh = true;
    for (const auto& g : out)
      if (*g == *f) {
        fresh = false;
        break;
      }
    if (fresh) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Sequent> sequent_corpus(const std::vector<std::string>& atoms, int depth,
                                    std::size_t count, unsigned seed,
                                    syntax::FragmentTag fragment) {
  auto formulas = formula_corpus(atoms, depth, 2 * count, seed, fragment);
  std::vector<Sequent> out;
  for (std::size_t i = 0; i + 1 < formulas.size() && out.size() < count; i += 2)
    out.push_back({{}, formulas[i], formulas[i + 1]});
  return out;
}

}  // namespace toposcope::semantics
