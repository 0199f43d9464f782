#include "toposcope/transforms.hpp"

#include <algorithm>
#include <map>

namespace toposcope::transforms {

using namespace syntax;

FormulaPtr classicalize(const Formula& f) {
  auto map_parts = [&] {
    std::vector<FormulaPtr> out;
    out.reserve(f.parts.size());
    for (const auto& p : f.parts) out.push_back(classicalize(*p));
    return out;
  };
  switch (f.kind) {
    case Formula::Kind::Rel:
    case Formula::Kind::Eq:
    case Formula::Kind::Truth:
    case Formula::Kind::Falsity:
      return std::make_shared<Formula>(f);
    case Formula::Kind::And: return conj(map_parts());
    case Formula::Kind::Or: return disj(map_parts());
    case Formula::Kind::BigOr: return big_disj(map_parts());
    case Formula::Kind::Implies:
      return implies(classicalize(*f.parts[0]), classicalize(*f.parts[1]));
    case Formula::Kind::Exists:
      return exists(f.binders, classicalize(*f.parts[0]));
    case Formula::Kind::BigAnd: {
      std::vector<FormulaPtr> negs;
      negs.reserve(f.parts.size());
      for (const auto& p : f.parts) negs.push_back(neg(classicalize(*p)));
      return neg(big_disj(std::move(negs)));
    }
    case Formula::Kind::Forall:
      return neg(exists(f.binders, neg(classicalize(*f.parts[0]))));
  }
  throw WellFormednessError("unreachable formula kind");
}

Sequent classicalize(const Sequent& s) {
  return Sequent{s.ctx, classicalize(*s.lhs), classicalize(*s.rhs)};
}

namespace {

bool has_tagged_infinitary(const Formula& f) {
  if (f.kind == Formula::Kind::BigAnd || f.kind == Formula::Kind::BigOr) return true;
  for (const auto& p : f.parts)
    if (has_tagged_infinitary(*p)) return true;
  return false;
}

// One named subformula: the formula together with its free-variable context
// (sorted by name), and the relation/complement symbols assigned to it.
struct Named {
  FormulaPtr formula;
  Context ctx;
  std::string rel;
  std::string comp;
};

struct Morleyizer {
  const Theory& input;
  std::string prefix;
  std::vector<Named> named;
  std::vector<Sequent> axioms;

  explicit Morleyizer(const Theory& t) : input(t) {
    // Pick a symbol prefix that cannot collide with declared symbols.
    prefix = "R";
    auto collides = [&](const std::string& p) {
      for (const auto& [n, a] : input.signature.relations)
        if (n.rfind(p, 0) == 0) return true;
      for (const auto& [n, d] : input.signature.functions)
        if (n.rfind(p, 0) == 0) return true;
      return false;
    };
    while (collides(prefix) || collides("c" + prefix)) prefix = "_" + prefix;
  }

  // Context of a formula restricted to its free names, sorted, with sorts
  // read off the ambient context.
  Context restricted_ctx(const Formula& f, const Context& ambient) {
    auto names = free_variable_names(f);
    Context out;
    for (const auto& n : names) {  // std::set iterates sorted
      auto s = ambient.sort_of(n);
      if (!s) throw WellFormednessError("free variable " + n + " escapes the axiom context");
      out.vars.emplace_back(n, *s);
    }
    return out;
  }

  std::size_t index_of(const FormulaPtr& f, const Context& ctx) {
    for (std::size_t i = 0; i < named.size(); ++i)
      if (*named[i].formula == *f && named[i].ctx == ctx) return i;
    std::size_t i = named.size();
    named.push_back({f, ctx, prefix + std::to_string(i), "c" + prefix + std::to_string(i)});
    return i;
  }

  // R_phi applied to its own free variables.
  FormulaPtr apply(std::size_t i) {
    std::vector<TermPtr> args;
    for (const auto& [n, s] : named[i].ctx.vars) args.push_back(Term::var(n));
    return rel(named[i].rel, std::move(args));
  }
  FormulaPtr apply_comp(std::size_t i) {
    std::vector<TermPtr> args;
    for (const auto& [n, s] : named[i].ctx.vars) args.push_back(Term::var(n));
    return rel(named[i].comp, std::move(args));
  }

  // Rendering of a subformula and its complement: the constants stand for
  // themselves, everything else gets a relation-symbol pair.
  std::pair<FormulaPtr, FormulaPtr> render(const FormulaPtr& f, const Context& ambient) {
    if (f->kind == Formula::Kind::Truth) return {truth(), falsity()};
    if (f->kind == Formula::Kind::Falsity) return {falsity(), truth()};
    std::size_t i = process(f, ambient);
    return {apply(i), apply_comp(i)};
  }

  void emit(const Context& ctx, FormulaPtr lhs, FormulaPtr rhs) {
    axioms.push_back({ctx, std::move(lhs), std::move(rhs)});
  }

  // Walks phi under the ambient context, names it, emits the sequents tying
  // its name to the names of its immediate subformulas, and returns its index.
  std::size_t process(const FormulaPtr& f, const Context& ambient) {
    Context ctx = restricted_ctx(*f, ambient);
    bool fresh = true;
    for (const auto& n : named)
      if (*n.formula == *f && n.ctx == ctx) fresh = false;
    std::size_t me = index_of(f, ctx);
    if (!fresh) return me;

    // Complement pair: total and disjoint.
    emit(ctx, truth(), disj({apply(me), apply_comp(me)}));
    emit(ctx, conj({apply(me), apply_comp(me)}), falsity());

    switch (f->kind) {
      case Formula::Kind::Rel:
      case Formula::Kind::Eq:
        emit(ctx, apply(me), f);
        emit(ctx, f, apply(me));
        break;
      case Formula::Kind::And: {
        std::vector<FormulaPtr> subs;
        for (const auto& p : f->parts) {
          FormulaPtr pos = render(p, ambient).first;
          subs.push_back(pos);
          emit(ctx, apply(me), pos);
        }
        emit(ctx, subs.size() >= 2 ? conj(subs) : subs[0], apply(me));
        break;
      }
      case Formula::Kind::Or: {
        std::vector<FormulaPtr> subs;
        for (const auto& p : f->parts) {
          FormulaPtr pos = render(p, ambient).first;
          subs.push_back(pos);
          emit(ctx, pos, apply(me));
        }
        emit(ctx, apply(me), subs.size() >= 2 ? disj(subs) : subs[0]);
        break;
      }
      case Formula::Kind::Implies: {
        auto [lpos, lcomp] = render(f->parts[0], ambient);
        auto [rpos, rcomp] = render(f->parts[1], ambient);
        emit(ctx, conj({apply(me), lpos}), rpos);
        emit(ctx, lcomp, apply(me));
        emit(ctx, rpos, apply(me));
        break;
      }
      case Formula::Kind::Exists: {
        FormulaPtr body = render(f->parts[0], ambient.extended(f->binders)).first;
        emit(ctx, apply(me), exists(f->binders, body));
        emit(ctx, exists(f->binders, body), apply(me));
        break;
      }
      case Formula::Kind::Forall: {
        // Classically forall y. psi is the complement of exists y. ~psi.
        FormulaPtr comp = render(f->parts[0], ambient.extended(f->binders)).second;
        emit(ctx, conj({apply(me), exists(f->binders, comp)}), falsity());
        emit(ctx, truth(), disj({apply(me), exists(f->binders, comp)}));
        break;
      }
      case Formula::Kind::Truth:
      case Formula::Kind::Falsity:
        throw WellFormednessError("morleyize: constants are rendered inline");
      case Formula::Kind::BigAnd:
      case Formula::Kind::BigOr:
        throw WellFormednessError("morleyize: tagged-infinitary input");
    }
    return me;
  }
};

}  // namespace

MorleyResult morleyize(const Theory& t) {
  for (const auto& ax : t.axioms)
    if (has_tagged_infinitary(*ax.lhs) || has_tagged_infinitary(*ax.rhs))
      throw WellFormednessError("morleyize: theory is not finitary first-order");

  Theory geometric_check = t;
  geometric_check.fragment = t.computed_fragment();
  if (geometric_check.fragment == FragmentTag::Geometric) {
    MorleyResult out;
    out.theory = t;
    out.theory.fragment = FragmentTag::Geometric;
    return out;
  }

  Morleyizer m(t);
  for (const auto& ax : t.axioms) {
    FormulaPtr lhs = m.render(ax.lhs, ax.ctx).first;
    FormulaPtr rhs = m.render(ax.rhs, ax.ctx).first;
    m.emit(ax.ctx, std::move(lhs), std::move(rhs));
  }

  MorleyResult out;
  out.theory.signature = t.signature;
  for (const auto& n : m.named) {
    std::vector<std::string> arg_sorts;
    for (const auto& [name, sort] : n.ctx.vars) arg_sorts.push_back(sort);
    out.theory.signature.add_relation(n.rel, arg_sorts);
    out.theory.signature.add_relation(n.comp, arg_sorts);
  }
  out.theory.axioms = std::move(m.axioms);
  out.theory.fragment = FragmentTag::Geometric;
  out.theory.validate();
  for (const auto& n : m.named) out.names.emplace_back(n.rel, n.formula, n.comp);
  return out;
}

}  // namespace toposcope::transforms
