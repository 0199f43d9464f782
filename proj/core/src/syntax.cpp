#include "toposcope/syntax.hpp"

#include <algorithm>
#include <sstream>

namespace toposcope::syntax {

const char* fragment_name(FragmentTag t) {
  switch (t) {
    case FragmentTag::Geometric: return "geometric";
    case FragmentTag::SubFirstOrder: return "sub-first-order";
    case FragmentTag::FirstOrder: return "first-order";
  }
  return "?";
}

// ---- Signature ----

void Signature::add_sort(const std::string& name) {
  if (has_sort(name)) throw WellFormednessError("duplicate sort: " + name);
  sorts.push_back(name);
}

void Signature::add_relation(const std::string& name, std::vector<std::string> arg_sorts) {
  if (relations.count(name)) throw WellFormednessError("duplicate relation: " + name);
  for (const auto& s : arg_sorts)
    if (!has_sort(s)) throw WellFormednessError("relation " + name + " uses undeclared sort " + s);
  relations.emplace(name, std::move(arg_sorts));
}

void Signature::add_function(const std::string& name, std::vector<std::string> arg_sorts,
                             const std::string& result_sort) {
  if (functions.count(name)) throw WellFormednessError("duplicate function: " + name);
  for (const auto& s : arg_sorts)
    if (!has_sort(s)) throw WellFormednessError("function " + name + " uses undeclared sort " + s);
  if (!has_sort(result_sort))
    throw WellFormednessError("function " + name + " uses undeclared sort " + result_sort);
  functions.emplace(name, FunDecl{std::move(arg_sorts), result_sort});
}

bool Signature::has_sort(const std::string& name) const {
  return std::find(sorts.begin(), sorts.end(), name) != sorts.end();
}

bool Signature::propositional() const {
  if (!functions.empty()) return false;
  for (const auto& [name, args] : relations)
    if (!args.empty()) return false;
  return true;
}

std::vector<std::string> Signature::atom_names() const {
  std::vector<std::string> out;
  for (const auto& [name, args] : relations)
    if (args.empty()) out.push_back(name);
  return out;
}

// ---- Context ----

Context::Context(std::initializer_list<std::pair<std::string, std::string>> v) : vars(v) {
  validate();
}

std::optional<std::string> Context::sort_of(const std::string& name) const {
  for (const auto& [n, s] : vars)
    if (n == name) return s;
  return std::nullopt;
}

Context Context::extended(const std::vector<std::pair<std::string, std::string>>& more) const {
  Context out = *this;
  for (const auto& p : more) out.vars.push_back(p);
  out.validate();
  return out;
}

void Context::validate() const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i].first == vars[j].first)
        throw WellFormednessError("duplicate context variable: " + vars[i].first);
}

// ---- Term ----

TermPtr Term::var(const std::string& name) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Var;
  t->name = name;
  return t;
}

TermPtr Term::app(const std::string& fn, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::App;
  t->name = fn;
  t->args = std::move(args);
  return t;
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

// ---- Formula factories ----

namespace {
std::shared_ptr<Formula> make(Formula::Kind k) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  return f;
}
}  // namespace

FormulaPtr rel(const std::string& name, std::vector<TermPtr> args) {
  auto f = make(Formula::Kind::Rel);
  f->rel = name;
  f->terms = std::move(args);
  return f;
}

FormulaPtr eq(TermPtr lhs, TermPtr rhs) {
  auto f = make(Formula::Kind::Eq);
  f->terms = {std::move(lhs), std::move(rhs)};
  return f;
}

FormulaPtr truth() { return make(Formula::Kind::Truth); }
FormulaPtr falsity() { return make(Formula::Kind::Falsity); }

namespace {
FormulaPtr nary(Formula::Kind k, std::vector<FormulaPtr> parts, std::size_t min_arity,
                const char* what) {
  if (parts.size() < min_arity)
    throw WellFormednessError(std::string(what) + " needs at least " +
                              std::to_string(min_arity) + " parts");
  auto f = make(k);
  f->parts = std::move(parts);
  return f;
}
}  // namespace

FormulaPtr conj(std::vector<FormulaPtr> parts) {
  return nary(Formula::Kind::And, std::move(parts), 2, "finitary conjunction");
}
FormulaPtr disj(std::vector<FormulaPtr> parts) {
  return nary(Formula::Kind::Or, std::move(parts), 2, "finitary disjunction");
}
FormulaPtr big_conj(std::vector<FormulaPtr> parts) {
  return nary(Formula::Kind::BigAnd, std::move(parts), 1, "infinitary conjunction");
}
FormulaPtr big_disj(std::vector<FormulaPtr> parts) {
  return nary(Formula::Kind::BigOr, std::move(parts), 1, "infinitary disjunction");
}

FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs) {
  auto f = make(Formula::Kind::Implies);
  f->parts = {std::move(lhs), std::move(rhs)};
  return f;
}

FormulaPtr neg(FormulaPtr f) { return implies(std::move(f), falsity()); }

bool is_neg(const Formula& f) {
  return f.kind == Formula::Kind::Implies && f.parts[1]->kind == Formula::Kind::Falsity;
}

namespace {
FormulaPtr quant(Formula::Kind k, std::vector<std::pair<std::string, std::string>> binders,
                 FormulaPtr body) {
  if (binders.empty()) throw WellFormednessError("quantifier binds an empty variable string");
  for (std::size_t i = 0; i < binders.size(); ++i)
    for (std::size_t j = i + 1; j < binders.size(); ++j)
      if (binders[i].first == binders[j].first)
        throw WellFormednessError("duplicate bound variable: " + binders[i].first);
  auto f = make(k);
  f->binders = std::move(binders);
  f->parts = {std::move(body)};
  return f;
}
}  // namespace

FormulaPtr exists(std::vector<std::pair<std::string, std::string>> binders, FormulaPtr body) {
  return quant(Formula::Kind::Exists, std::move(binders), std::move(body));
}
FormulaPtr forall(std::vector<std::pair<std::string, std::string>> binders, FormulaPtr body) {
  return quant(Formula::Kind::Forall, std::move(binders), std::move(body));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.rel != b.rel || a.binders != b.binders) return false;
  if (a.terms.size() != b.terms.size() || a.parts.size() != b.parts.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (!(*a.terms[i] == *b.terms[i])) return false;
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    if (!(*a.parts[i] == *b.parts[i])) return false;
  return true;
}

bool operator==(const Sequent& a, const Sequent& b) {
  return a.ctx == b.ctx && *a.lhs == *b.lhs && *a.rhs == *b.rhs;
}

// ---- fragment classification ----

FragmentTag classify_fragment(const Formula& f) {
  auto max_parts = [&](FragmentTag floor) {
    FragmentTag t = floor;
    for (const auto& p : f.parts) t = std::max(t, classify_fragment(*p));
    return t;
  };
  switch (f.kind) {
    case Formula::Kind::Rel:
    case Formula::Kind::Eq:
    case Formula::Kind::Truth:
    case Formula::Kind::Falsity:
      return FragmentTag::Geometric;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::BigOr:
    case Formula::Kind::Exists:
      return max_parts(FragmentTag::Geometric);
    case Formula::Kind::Implies:
      return max_parts(FragmentTag::SubFirstOrder);
    case Formula::Kind::BigAnd:
    case Formula::Kind::Forall:
      return max_parts(FragmentTag::FirstOrder);
  }
  return FragmentTag::FirstOrder;
}

// ---- well-formedness ----

std::string term_sort(const Term& t, const Signature& sig, const Context& ctx) {
  if (t.kind == Term::Kind::Var) {
    auto s = ctx.sort_of(t.name);
    if (!s) throw WellFormednessError("unknown variable: " + t.name);
    return *s;
  }
  auto it = sig.functions.find(t.name);
  if (it == sig.functions.end()) throw WellFormednessError("unknown function: " + t.name);
  const auto& decl = it->second;
  if (decl.args.size() != t.args.size())
    throw WellFormednessError("function " + t.name + " expects " +
                              std::to_string(decl.args.size()) + " arguments, got " +
                              std::to_string(t.args.size()));
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    auto got = term_sort(*t.args[i], sig, ctx);
    if (got != decl.args[i])
      throw WellFormednessError("argument " + std::to_string(i) + " of " + t.name +
                                " has sort " + got + ", expected " + decl.args[i]);
  }
  return decl.result;
}

void check_well_formed(const Formula& f, const Signature& sig, const Context& ctx) {
  switch (f.kind) {
    case Formula::Kind::Rel: {
      auto it = sig.relations.find(f.rel);
      if (it == sig.relations.end()) throw WellFormednessError("unknown relation: " + f.rel);
      if (it->second.size() != f.terms.size())
        throw WellFormednessError("relation " + f.rel + " expects " +
                                  std::to_string(it->second.size()) + " arguments, got " +
                                  std::to_string(f.terms.size()));
      for (std::size_t i = 0; i < f.terms.size(); ++i) {
        auto got = term_sort(*f.terms[i], sig, ctx);
        if (got != it->second[i])
          throw WellFormednessError("argument " + std::to_string(i) + " of " + f.rel +
                                    " has sort " + got + ", expected " + it->second[i]);
      }
      return;
    }
    case Formula::Kind::Eq: {
      auto a = term_sort(*f.terms[0], sig, ctx);
      auto b = term_sort(*f.terms[1], sig, ctx);
      if (a != b)
        throw WellFormednessError("equality between sorts " + a + " and " + b);
      return;
    }
    case Formula::Kind::Truth:
    case Formula::Kind::Falsity:
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::BigAnd:
    case Formula::Kind::BigOr:
    case Formula::Kind::Implies:
      for (const auto& p : f.parts) check_well_formed(*p, sig, ctx);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      for (const auto& [name, sort] : f.binders) {
        if (ctx.contains(name))
          throw WellFormednessError("bound variable " + name + " shadows the context");
        if (!sig.has_sort(sort))
          throw WellFormednessError("bound variable " + name + " has undeclared sort " + sort);
      }
      check_well_formed(*f.parts[0], sig, ctx.extended(f.binders));
      return;
    }
  }
}

// ---- free variables ----

namespace {

void collect_names(const Term& t, const std::set<std::string>& bound,
                   std::set<std::string>& out) {
  if (t.kind == Term::Kind::Var) {
    if (!bound.count(t.name)) out.insert(t.name);
  } else {
    for (const auto& a : t.args) collect_names(*a, bound, out);
  }
}

void collect_names(const Formula& f, std::set<std::string> bound, std::set<std::string>& out) {
  for (const auto& t : f.terms) collect_names(*t, bound, out);
  if (f.kind == Formula::Kind::Exists || f.kind == Formula::Kind::Forall) {
    for (const auto& [n, s] : f.binders) bound.insert(n);
    collect_names(*f.parts[0], bound, out);
  } else {
    for (const auto& p : f.parts) collect_names(*p, bound, out);
  }
}

// Instance key for a variable occurrence: free variables share instance 0,
// each binder scope introduces a fresh instance id for its name.
struct SortInference {
  // (name, instance) -> representative index
  std::map<std::pair<std::string, int>, int> index;
  std::vector<int> parent;
  std::vector<std::string> sort;  // "" = unknown

  int node(const std::string& name, int instance) {
    auto key = std::make_pair(name, instance);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(parent.size());
    index.emplace(key, id);
    parent.push_back(id);
    sort.emplace_back();
    return id;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void merge(int a, int b) {
    a = find(a); b = find(b);
    if (a == b) return;
    if (sort[a].empty()) std::swap(a, b);
    if (!sort[b].empty() && sort[a] != sort[b])
      throw WellFormednessError("variable used at two sorts: " + sort[a] + " vs " + sort[b]);
    parent[b] = a;
  }
  void force(int x, const std::string& s) {
    x = find(x);
    if (sort[x].empty()) sort[x] = s;
    else if (sort[x] != s)
      throw WellFormednessError("variable used at two sorts: " + sort[x] + " vs " + s);
  }
};

// Returns the inference node of t if t is a variable, else -1 after forcing
// argument sorts; `expected` ("" = unknown) is applied to the result.
int infer_term(const Term& t, const Signature& sig, const std::map<std::string, int>& scope,
               SortInference& inf, const std::string& expected) {
  if (t.kind == Term::Kind::Var) {
    auto it = scope.find(t.name);
    int n = inf.node(t.name, it == scope.end() ? 0 : it->second);
    if (!expected.empty()) inf.force(n, expected);
    return n;
  }
  auto it = sig.functions.find(t.name);
  if (it == sig.functions.end()) throw WellFormednessError("unknown function: " + t.name);
  if (it->second.args.size() != t.args.size())
    throw WellFormednessError("arity mismatch for function " + t.name);
  if (!expected.empty() && it->second.result != expected)
    throw WellFormednessError("term of sort " + it->second.result + " used at sort " + expected);
  for (std::size_t i = 0; i < t.args.size(); ++i)
    infer_term(*t.args[i], sig, scope, inf, it->second.args[i]);
  return -1;
}

void infer_formula(const Formula& f, const Signature& sig, std::map<std::string, int> scope,
                   int& next_instance, SortInference& inf) {
  switch (f.kind) {
    case Formula::Kind::Rel: {
      auto it = sig.relations.find(f.rel);
      if (it == sig.relations.end()) throw WellFormednessError("unknown relation: " + f.rel);
      if (it->second.size() != f.terms.size())
        throw WellFormednessError("arity mismatch for relation " + f.rel);
      for (std::size_t i = 0; i < f.terms.size(); ++i)
        infer_term(*f.terms[i], sig, scope, inf, it->second[i]);
      return;
    }
    case Formula::Kind::Eq: {
      int a = infer_term(*f.terms[0], sig, scope, inf, "");
      int b = infer_term(*f.terms[1], sig, scope, inf, "");
      if (a >= 0 && b >= 0) inf.merge(a, b);
      else if (a >= 0) {
        // rhs is an application; force its sort onto the variable
        const Term& rhs = *f.terms[1];
        inf.force(a, sig.functions.at(rhs.name).result);
      } else if (b >= 0) {
        const Term& lhs = *f.terms[0];
        inf.force(b, sig.functions.at(lhs.name).result);
      }
      return;
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      for (const auto& [name, sort] : f.binders) {
        scope[name] = ++next_instance;
        inf.force(inf.node(name, scope[name]), sort);
      }
      infer_formula(*f.parts[0], sig, scope, next_instance, inf);
      return;
    }
    default:
      for (const auto& p : f.parts) infer_formula(*p, sig, scope, next_instance, inf);
      return;
  }
}

}  // namespace

std::set<std::string> free_variable_names(const Formula& f) {
  std::set<std::string> out;
  collect_names(f, {}, out);
  return out;
}

std::set<std::string> free_variable_names(const Term& t) {
  std::set<std::string> out;
  collect_names(t, {}, out);
  return out;
}

std::map<std::string, std::string> free_variables(const Formula& f, const Signature& sig) {
  SortInference inf;
  int next_instance = 0;
  infer_formula(f, sig, {}, next_instance, inf);
  std::map<std::string, std::string> out;
  for (const auto& [key, id] : inf.index) {
    if (key.second != 0) continue;  // bound instance
    const std::string& s = inf.sort[inf.find(id)];
    if (s.empty())
      throw WellFormednessError("cannot infer a sort for variable " + key.first);
    out[key.first] = s;
  }
  return out;
}

// ---- substitution ----

namespace {

using Subst = std::map<std::string, TermPtr>;

TermPtr subst_term(const Term& t, const Subst& m) {
  if (t.kind == Term::Kind::Var) {
    auto it = m.find(t.name);
    return it != m.end() ? it->second : Term::var(t.name);
  }
  std::vector<TermPtr> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(subst_term(*a, m));
  return Term::app(t.name, std::move(args));
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  std::string cand = base + "'";
  while (taken.count(cand)) cand += "'";
  return cand;
}

FormulaPtr subst_formula(const Formula& f, Subst m) {
  switch (f.kind) {
    case Formula::Kind::Rel: {
      std::vector<TermPtr> args;
      for (const auto& t : f.terms) args.push_back(subst_term(*t, m));
      return rel(f.rel, std::move(args));
    }
    case Formula::Kind::Eq:
      return eq(subst_term(*f.terms[0], m), subst_term(*f.terms[1], m));
    case Formula::Kind::Truth: return truth();
    case Formula::Kind::Falsity: return falsity();
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::BigAnd:
    case Formula::Kind::BigOr:
    case Formula::Kind::Implies: {
      std::vector<FormulaPtr> parts;
      for (const auto& p : f.parts) parts.push_back(subst_formula(*p, m));
      auto g = std::make_shared<Formula>();
      g->kind = f.kind;
      g->parts = std::move(parts);
      return g;
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      // Drop shadowed entries, rename binders that would capture.
      auto binders = f.binders;
      FormulaPtr body = f.parts[0];
      for (const auto& [name, sort] : binders) m.erase(name);

      std::set<std::string> inserted_free;
      for (const auto& [k, t] : m) {
        auto names = free_variable_names(*t);
        inserted_free.insert(names.begin(), names.end());
      }
      for (auto& [name, sort] : binders) {
        if (!inserted_free.count(name)) continue;
        std::set<std::string> taken = inserted_free;
        auto body_names = free_variable_names(*body);
        taken.insert(body_names.begin(), body_names.end());
        for (const auto& [k, t] : m) taken.insert(k);
        for (const auto& [n, s] : binders) taken.insert(n);
        std::string renamed = fresh_name(name, taken);
        Subst rename{{name, Term::var(renamed)}};
        body = subst_formula(*body, rename);
        name = renamed;
      }
      body = subst_formula(*body, m);
      auto g = std::make_shared<Formula>();
      g->kind = f.kind;
      g->binders = std::move(binders);
      g->parts = {std::move(body)};
      return g;
    }
  }
  throw WellFormednessError("unreachable formula kind");
}

}  // namespace

TermPtr substitute(const Term& t, const std::vector<TermPtr>& terms, const Context& ctx) {
  if (terms.size() != ctx.size())
    throw WellFormednessError("substitution arity mismatch: " + std::to_string(terms.size()) +
                              " terms for " + std::to_string(ctx.size()) + " variables");
  Subst m;
  for (std::size_t i = 0; i < terms.size(); ++i) m[ctx.vars[i].first] = terms[i];
  return subst_term(t, m);
}

FormulaPtr substitute(const Formula& f, const std::vector<TermPtr>& terms, const Context& ctx) {
  if (terms.size() != ctx.size())
    throw WellFormednessError("substitution arity mismatch: " + std::to_string(terms.size()) +
                              " terms for " + std::to_string(ctx.size()) + " variables");
  Subst m;
  for (std::size_t i = 0; i < terms.size(); ++i) m[ctx.vars[i].first] = terms[i];
  return subst_formula(f, std::move(m));
}

// ---- subformulas ----

namespace {
void collect_subformulas(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  for (const auto& p : f->parts) collect_subformulas(p, out);
  for (const auto& g : out)
    if (*g == *f) return;
  out.push_back(f);
}
}  // namespace

std::vector<FormulaPtr> subformulas(const FormulaPtr& f) {
  std::vector<FormulaPtr> out;
  collect_subformulas(f, out);
  return out;
}

// ---- Theory ----

FragmentTag Theory::computed_fragment() const {
  FragmentTag t = FragmentTag::Geometric;
  for (const auto& ax : axioms) {
    t = std::max(t, classify_fragment(*ax.lhs));
    t = std::max(t, classify_fragment(*ax.rhs));
  }
  return t;
}

void Theory::validate() const {
  for (const auto& ax : axioms) {
    ax.ctx.validate();
    check_well_formed(*ax.lhs, signature, ax.ctx);
    check_well_formed(*ax.rhs, signature, ax.ctx);
    FragmentTag t = std::max(classify_fragment(*ax.lhs), classify_fragment(*ax.rhs));
    if (t > fragment)
      throw WellFormednessError("axiom " + to_text(ax) + " lies in fragment " +
                                fragment_name(t) + ", outside declared " +
                                fragment_name(fragment));
  }
}

// ---- printing ----
//
// Precedence levels: 0 = implication / quantifier body, 1 = \/, 2 = /\,
// 3 = ~, 4 = atoms. An operand whose own level is below the required level
// gets parenthesized, so printing then parsing is the identity on ASTs.

std::string to_text(const Term& t) {
  if (t.kind == Term::Kind::Var || t.args.empty()) return t.name;
  std::string out = t.name + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ", ";
    out += to_text(*t.args[i]);
  }
  return out + ")";
}

namespace {

int level_of(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Implies: return is_neg(f) ? 3 : 0;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: return 0;
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    default: return 4;
  }
}

std::string print(const Formula& f, int min_level);

std::string print_binders(const std::vector<std::pair<std::string, std::string>>& bs) {
  std::string out;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (i) out += ", ";
    out += bs[i].first + ":" + bs[i].second;
  }
  return out;
}

std::string print_family(const char* op, const std::vector<FormulaPtr>& parts) {
  std::string out = std::string(op) + "{ ";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "; ";
    out += print(*parts[i], 0);
  }
  return out + " }";
}

std::string print_raw(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Rel: {
      if (f.terms.empty()) return f.rel;
      std::string out = f.rel + "(";
      for (std::size_t i = 0; i < f.terms.size(); ++i) {
        if (i) out += ", ";
        out += to_text(*f.terms[i]);
      }
      return out + ")";
    }
    case Formula::Kind::Eq:
      return to_text(*f.terms[0]) + " = " + to_text(*f.terms[1]);
    case Formula::Kind::Truth: return "top";
    case Formula::Kind::Falsity: return "bot";
    case Formula::Kind::And: {
      std::string out;
      for (std::size_t i = 0; i < f.parts.size(); ++i) {
        if (i) out += " /\\ ";
        out += print(*f.parts[i], 3);
      }
      return out;
    }
    case Formula::Kind::Or: {
      std::string out;
      for (std::size_t i = 0; i < f.parts.size(); ++i) {
        if (i) out += " \\/ ";
        out += print(*f.parts[i], 2);
      }
      return out;
    }
    case Formula::Kind::BigAnd: return print_family("/\\", f.parts);
    case Formula::Kind::BigOr: return print_family("\\/", f.parts);
    case Formula::Kind::Implies:
      if (is_neg(f)) return "~" + print(*f.parts[0], 3);
      return print(*f.parts[0], 1) + " -> " + print(*f.parts[1], 0);
    case Formula::Kind::Exists:
      return "exists " + print_binders(f.binders) + ". " + print(*f.parts[0], 0);
    case Formula::Kind::Forall:
      return "forall " + print_binders(f.binders) + ". " + print(*f.parts[0], 0);
  }
  return "?";
}

std::string print(const Formula& f, int min_level) {
  if (level_of(f) < min_level) return "(" + print_raw(f) + ")";
  return print_raw(f);
}

}  // namespace

std::string to_text(const Formula& f) { return print(f, 0); }

std::string to_text(const Context& c) {
  std::string out;
  for (std::size_t i = 0; i < c.vars.size(); ++i) {
    if (i) out += ", ";
    out += c.vars[i].first + ":" + c.vars[i].second;
  }
  return out;
}

std::string to_text(const Sequent& s) {
  std::string turnstile = s.ctx.empty() ? " |- " : (" |-[" + to_text(s.ctx) + "] ");
  return to_text(*s.lhs) + turnstile + to_text(*s.rhs);
}

}  // namespace toposcope::syntax
