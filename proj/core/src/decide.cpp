#include "toposcope/decide.hpp"

#include <algorithm>
#include <functional>

namespace toposcope::algebra {

using syntax::Formula;
using syntax::FormulaPtr;
using syntax::Sequent;
using syntax::Theory;

// ---- classical evaluation ----

namespace {

int atom_index(const std::vector<std::string>& atoms, const std::string& name) {
  auto it = std::find(atoms.begin(), atoms.end(), name);
  if (it == atoms.end())
    throw WellFormednessError("unknown propositional atom: " + name);
  return static_cast<int>(it - atoms.begin());
}

}  // namespace

bool eval_classical(const Formula& f, const std::vector<std::string>& atoms,
                    std::uint32_t valuation) {
  switch (f.kind) {
    case Formula::Kind::Rel:
      if (!f.terms.empty())
        throw WellFormednessError("non-propositional relation: " + f.rel);
      return (valuation >> atom_index(atoms, f.rel)) & 1;
    case Formula::Kind::Truth: return true;
    case Formula::Kind::Falsity: return false;
    case Formula::Kind::And:
    case Formula::Kind::BigAnd:
      for (const auto& p : f.parts)
        if (!eval_classical(*p, atoms, valuation)) return false;
      return true;
    case Formula::Kind::Or:
    case Formula::Kind::BigOr:
      for (const auto& p : f.parts)
        if (eval_classical(*p, atoms, valuation)) return true;
      return false;
    case Formula::Kind::Implies:
      return !eval_classical(*f.parts[0], atoms, valuation) ||
             eval_classical(*f.parts[1], atoms, valuation);
    case Formula::Kind::Eq:
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      throw WellFormednessError("non-propositional formula");
  }
  throw WellFormednessError("unreachable formula kind");
}

std::vector<std::uint32_t> classical_models(const Theory& t) {
  if (!t.signature.propositional())
    throw WellFormednessError("theory is not propositional");
  auto atoms = t.signature.atom_names();
  if (atoms.size() > 20) throw ResourceError("too many atoms for valuation enumeration");
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < (1u << atoms.size()); ++v) {
    bool ok = true;
    for (const auto& ax : t.axioms)
      if (eval_classical(*ax.lhs, atoms, v) && !eval_classical(*ax.rhs, atoms, v)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(v);
  }
  return out;
}

bool decide_classical(const Theory& t, const Sequent& s) {
  if (!s.ctx.empty()) throw WellFormednessError("sequent is not propositional");
  auto atoms = t.signature.atom_names();
  for (auto v : classical_models(t))
    if (eval_classical(*s.lhs, atoms, v) && !eval_classical(*s.rhs, atoms, v)) return false;
  return true;
}

// ---- Kripke models ----

void KripkeModel::validate() const {
  if (worlds == 0) throw AlgebraError("Kripke model needs at least one world");
  if (above.size() != worlds) throw AlgebraError("Kripke order has wrong size");
  for (std::size_t w = 0; w < worlds; ++w) {
    if (!above[w].test(w)) throw AlgebraError("Kripke order not reflexive");
    for (std::size_t v = 0; v < worlds; ++v) {
      if (above[w].test(v) && !above[v].subset_of(above[w]))
        throw AlgebraError("Kripke order not transitive");
      if (w != v && above[w].test(v) && above[v].test(w))
        throw AlgebraError("Kripke order not antisymmetric");
    }
  }
  if (above[0].count() != worlds) throw AlgebraError("world 0 is not a root");
  for (const auto& [atom, set] : valuation)
    for (std::size_t w = 0; w < worlds; ++w)
      if (set.test(w) && !above[w].subset_of(set))
        throw AlgebraError("valuation of " + atom + " is not monotone");
}

bool KripkeModel::forces(std::size_t world, const Formula& f) const {
  switch (f.kind) {
    case Formula::Kind::Rel: {
      if (!f.terms.empty()) throw WellFormednessError("non-propositional relation");
      auto it = valuation.find(f.rel);
      return it != valuation.end() && it->second.test(world);
    }
    case Formula::Kind::Truth: return true;
    case Formula::Kind::Falsity: return false;
    case Formula::Kind::And:
    case Formula::Kind::BigAnd:
      for (const auto& p : f.parts)
        if (!forces(world, *p)) return false;
      return true;
    case Formula::Kind::Or:
    case Formula::Kind::BigOr:
      for (const auto& p : f.parts)
        if (forces(world, *p)) return true;
      return false;
    case Formula::Kind::Implies:
      for (auto v : above[world].members())
        if (forces(v, *f.parts[0]) && !forces(v, *f.parts[1])) return false;
      return true;
    default:
      throw WellFormednessError("non-propositional formula");
  }
}

std::string KripkeModel::to_text() const {
  std::string out = std::to_string(worlds) + " worlds; order:";
  for (std::size_t w = 0; w < worlds; ++w)
    for (std::size_t v = 0; v < worlds; ++v)
      if (w != v && above[w].test(v)) out += " " + std::to_string(w) + "<" + std::to_string(v);
  for (const auto& [atom, set] : valuation) {
    out += "; " + atom + " at";
    bool empty = true;
    for (auto w : set.members()) {
      out += " " + std::to_string(w);
      empty = false;
    }
    if (empty) out += " -";
  }
  return out;
}

// ---- intuitionistic engine ----

namespace {

// Interned propositional formulas. BAnd/BOr mirror the tagged-infinitary
// nodes when the engine runs with the first-order rule set; their search
// rules coincide with the finitary ones.
struct PForm {
  enum class K { Atom, Top, Bot, And, Or, BAnd, BOr, Imp };
  K k;
  int atom = -1;
  std::vector<int> kids;
};

}  // namespace

struct IntuitionisticEngine::Impl {
  std::vector<std::string> atoms;
  TaggedMode mode;
  std::vector<PForm> pool;
  std::map<std::string, int> interned;
  std::vector<int> hypotheses;  // axiom implications, folded into every goal

  std::map<std::pair<std::vector<int>, int>, bool> prove_memo;
  // (lhs, rhs) -> (deepest bound searched, countermodel if found)
  std::map<std::pair<int, int>, std::pair<std::size_t, std::optional<KripkeModel>>> refute_memo;

  int top_id = -1, bot_id = -1;

  explicit Impl(const Theory& t, TaggedMode m) : mode(m) {
    if (!t.signature.propositional())
      throw WellFormednessError("theory is not propositional");
    atoms = t.signature.atom_names();
    top_id = intern({PForm::K::Top, -1, {}});
    bot_id = intern({PForm::K::Bot, -1, {}});
    for (const auto& ax : t.axioms) {
      if (!ax.ctx.empty()) throw WellFormednessError("axiom is not propositional");
      hypotheses.push_back(intern({PForm::K::Imp, -1, {convert(*ax.lhs), convert(*ax.rhs)}}));
    }
  }

  int intern(PForm f) {
    std::string key(1, static_cast<char>('a' + static_cast<int>(f.k)));
    key += std::to_string(f.atom);
    for (int k : f.kids) key += "," + std::to_string(k);
    auto it = interned.find(key);
    if (it != interned.end()) return it->second;
    int id = static_cast<int>(pool.size());
    pool.push_back(std::move(f));
    interned.emplace(std::move(key), id);
    return id;
  }

  int convert(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::Rel:
        if (!f.terms.empty()) throw WellFormednessError("non-propositional relation: " + f.rel);
        return intern({PForm::K::Atom, atom_index(atoms, f.rel), {}});
      case Formula::Kind::Truth: return top_id;
      case Formula::Kind::Falsity: return bot_id;
      case Formula::Kind::And:
      case Formula::Kind::Or:
      case Formula::Kind::BigAnd:
      case Formula::Kind::BigOr: {
        std::vector<int> kids;
        kids.reserve(f.parts.size());
        for (const auto& p : f.parts) kids.push_back(convert(*p));
        PForm::K k;
        bool conjunctive =
            f.kind == Formula::Kind::And || f.kind == Formula::Kind::BigAnd;
        bool tagged = f.kind == Formula::Kind::BigAnd || f.kind == Formula::Kind::BigOr;
        if (tagged && mode == TaggedMode::FirstOrderRules)
          k = conjunctive ? PForm::K::BAnd : PForm::K::BOr;
        else
          k = conjunctive ? PForm::K::And : PForm::K::Or;
        if (kids.size() == 1 && tagged && mode == TaggedMode::Expand) return kids[0];
        return intern({k, -1, std::move(kids)});
      }
      case Formula::Kind::Implies:
        return intern({PForm::K::Imp, -1, {convert(*f.parts[0]), convert(*f.parts[1])}});
      case Formula::Kind::Eq:
      case Formula::Kind::Exists:
      case Formula::Kind::Forall:
        throw WellFormednessError("non-propositional formula");
    }
    throw WellFormednessError("unreachable formula kind");
  }

  static bool conjunctive(PForm::K k) { return k == PForm::K::And || k == PForm::K::BAnd; }
  static bool disjunctive(PForm::K k) { return k == PForm::K::Or || k == PForm::K::BOr; }

  // Contraction-free sequent search (Dyckhoff's G4ip). Gamma is kept as a
  // sorted duplicate-free vector; contraction is admissible so set semantics
  // is complete.
  bool prove(std::vector<int> gamma, int goal) {
    std::sort(gamma.begin(), gamma.end());
    gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
    auto key = std::make_pair(gamma, goal);
    auto it = prove_memo.find(key);
    if (it != prove_memo.end()) return it->second;
    prove_memo.emplace(key, false);  // cycles read as failure while expanding
    bool result = prove_step(gamma, goal);
    prove_memo[key] = result;
    return result;
  }

  bool prove_step(const std::vector<int>& gamma, int goal) {
    auto has = [&](int id) {
      return std::binary_search(gamma.begin(), gamma.end(), id);
    };
    if (has(bot_id)) return true;
    if (goal == top_id) return true;
    if (pool[goal].k == PForm::K::Atom && has(goal)) return true;

    auto without = [&](std::size_t drop_index) {
      std::vector<int> out;
      out.reserve(gamma.size());
      for (std::size_t i = 0; i < gamma.size(); ++i)
        if (i != drop_index) out.push_back(gamma[i]);
      return out;
    };

    // invertible left rules, first match
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      const PForm& f = pool[gamma[i]];
      if (f.k == PForm::K::Top) {
        return prove(without(i), goal);
      }
      if (conjunctive(f.k)) {
        auto g = without(i);
        g.insert(g.end(), f.kids.begin(), f.kids.end());
        return prove(std::move(g), goal);
      }
      if (disjunctive(f.k)) {
        for (int kid : f.kids) {
          auto g = without(i);
          g.push_back(kid);
          if (!prove(std::move(g), goal)) return false;
        }
        return true;
      }
      if (f.k == PForm::K::Imp) {
        const PForm& a = pool[f.kids[0]];
        int b = f.kids[1];
        if (a.k == PForm::K::Top) {
          auto g = without(i);
          g.push_back(b);
          return prove(std::move(g), goal);
        }
        if (a.k == PForm::K::Bot) {
          return prove(without(i), goal);
        }
        if (conjunctive(a.k)) {
          int curried = b;
          for (auto it2 = a.kids.rbegin(); it2 != a.kids.rend(); ++it2)
            curried = intern({PForm::K::Imp, -1, {*it2, curried}});
          auto g = without(i);
          g.push_back(curried);
          return prove(std::move(g), goal);
        }
        if (disjunctive(a.k)) {
          auto g = without(i);
          for (int kid : a.kids) g.push_back(intern({PForm::K::Imp, -1, {kid, b}}));
          return prove(std::move(g), goal);
        }
        if (a.k == PForm::K::Atom && has(f.kids[0])) {
          auto g = without(i);
          g.push_back(b);
          return prove(std::move(g), goal);
        }
        // nested implication: handled below as a choice point
      }
    }

    // invertible right rules
    const PForm& g = pool[goal];
    if (conjunctive(g.k)) {
      for (int kid : g.kids)
        if (!prove(gamma, kid)) return false;
      return true;
    }
    if (g.k == PForm::K::Imp) {
      auto g2 = gamma;
      g2.push_back(g.kids[0]);
      return prove(std::move(g2), g.kids[1]);
    }

    // choice points
    if (disjunctive(g.k)) {
      for (int kid : g.kids)
        if (prove(gamma, kid)) return true;
    }
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      const PForm& f = pool[gamma[i]];
      if (f.k != PForm::K::Imp || pool[f.kids[0]].k != PForm::K::Imp) continue;
      const PForm& nested = pool[f.kids[0]];  // (c -> d) -> b
      int c = nested.kids[0], d = nested.kids[1], b = f.kids[1];
      auto left = without(i);
      left.push_back(intern({PForm::K::Imp, -1, {d, b}}));
      left.push_back(c);
      if (!prove(std::move(left), d)) continue;
      auto right = without(i);
      right.push_back(b);
      if (prove(std::move(right), goal)) return true;
    }
    return false;
  }

  // forcing over interned formulas, memoized per model
  struct ModelEval {
    const Impl& impl;
    const std::vector<std::uint32_t>& above;   // world -> mask of worlds >= it
    const std::vector<std::uint32_t>& atoms;   // atom -> truth mask
    std::size_t worlds;
    std::map<std::pair<int, std::size_t>, bool> memo;

    bool forces(int id, std::size_t w) {
      auto key = std::make_pair(id, w);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      const PForm& f = impl.pool[id];
      bool r = false;
      switch (f.k) {
        case PForm::K::Atom: r = (atoms[f.atom] >> w) & 1; break;
        case PForm::K::Top: r = true; break;
        case PForm::K::Bot: r = false; break;
        case PForm::K::And:
        case PForm::K::BAnd:
          r = true;
          for (int kid : f.kids) r = r && forces(kid, w);
          break;
        case PForm::K::Or:
        case PForm::K::BOr:
          r = false;
          for (int kid : f.kids) r = r || forces(kid, w);
          break;
        case PForm::K::Imp:
          r = true;
          for (std::size_t v = 0; v < worlds && r; ++v)
            if ((above[w] >> v) & 1)
              if (forces(f.kids[0], v) && !forces(f.kids[1], v)) r = false;
          break;
      }
      memo.emplace(key, r);
      return r;
    }
  };

  std::optional<KripkeModel> search_countermodel(int lhs, int rhs, std::size_t bound) {
    if (bound > 12) throw ResourceError("Kripke search bound too large");
    std::vector<int> wanted = hypotheses;
    wanted.push_back(lhs);

    for (std::size_t n = 1; n <= bound; ++n) {
      // rooted posets refining the index order, as strict-below masks
      std::vector<std::uint32_t> below(n, 0);
      std::optional<KripkeModel> found;

      std::function<bool(std::size_t)> enumerate_posets = [&](std::size_t i) -> bool {
        if (i == n) {
          // reflexive-transitive "above" masks
          std::vector<std::uint32_t> above(n, 0);
          for (std::size_t w = 0; w < n; ++w) {
            above[w] |= 1u << w;
            for (std::size_t v = w + 1; v < n; ++v)
              if ((below[v] >> w) & 1) above[w] |= 1u << v;
          }
          // upward-closed truth sets
          std::vector<std::uint32_t> upsets;
          for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            bool closed = true;
            for (std::size_t w = 0; w < n && closed; ++w)
              if ((mask >> w) & 1)
                if ((above[w] & ~mask) != 0) closed = false;
            if (closed) upsets.push_back(mask);
          }
          std::vector<std::size_t> pick(atoms.size(), 0);
          std::vector<std::uint32_t> truth(atoms.size(), 0);
          while (true) {
            for (std::size_t a = 0; a < atoms.size(); ++a) truth[a] = upsets[pick[a]];
            ModelEval eval{*this, above, truth, n, {}};
            bool ok = true;
            for (int h : wanted)
              if (!eval.forces(h, 0)) {
                ok = false;
                break;
              }
            if (ok && !eval.forces(rhs, 0)) {
              KripkeModel m;
              m.worlds = n;
              m.above.assign(n, Bits(n));
              for (std::size_t w = 0; w < n; ++w)
                for (std::size_t v = 0; v < n; ++v)
                  if ((above[w] >> v) & 1) m.above[w].set(v);
              for (std::size_t a = 0; a < atoms.size(); ++a) {
                Bits set(n);
                for (std::size_t w = 0; w < n; ++w)
                  if ((truth[a] >> w) & 1) set.set(w);
                m.valuation.emplace(atoms[a], std::move(set));
              }
              m.validate();
              found = std::move(m);
              return true;
            }
            // odometer over valuations, last atom fastest
            std::size_t a = atoms.size();
            while (a > 0) {
              --a;
              if (++pick[a] < upsets.size()) break;
              pick[a] = 0;
              if (a == 0) return false;
            }
            if (atoms.empty()) return false;
          }
        }
        for (std::uint32_t mask = 0; mask < (1u << i); ++mask) {
          if (i >= 1 && !(mask & 1u)) continue;  // world 0 stays a root
          bool transitive = true;
          for (std::size_t j = 0; j < i && transitive; ++j)
            if ((mask >> j) & 1)
              if ((below[j] & ~mask) != 0) transitive = false;
          if (!transitive) continue;
          below[i] = mask;
          if (enumerate_posets(i + 1)) return true;
        }
        return false;
      };

      if (enumerate_posets(0)) return found;
    }
    return std::nullopt;
  }
};

IntuitionisticEngine::IntuitionisticEngine(const Theory& t, TaggedMode mode)
    : impl_(std::make_unique<Impl>(t, mode)) {}
IntuitionisticEngine::~IntuitionisticEngine() = default;
IntuitionisticEngine::IntuitionisticEngine(IntuitionisticEngine&&) noexcept = default;
IntuitionisticEngine& IntuitionisticEngine::operator=(IntuitionisticEngine&&) noexcept = default;

bool IntuitionisticEngine::provable(const Sequent& s) {
  if (!s.ctx.empty()) throw WellFormednessError("sequent is not propositional");
  std::vector<int> gamma = impl_->hypotheses;
  gamma.push_back(impl_->convert(*s.lhs));
  return impl_->prove(std::move(gamma), impl_->convert(*s.rhs));
}

std::optional<KripkeModel> IntuitionisticEngine::refute(const Sequent& s,
                                                        std::size_t kripke_bound) {
  if (!s.ctx.empty()) throw WellFormednessError("sequent is not propositional");
  int lhs = impl_->convert(*s.lhs);
  int rhs = impl_->convert(*s.rhs);
  auto key = std::make_pair(lhs, rhs);
  auto it = impl_->refute_memo.find(key);
  if (it != impl_->refute_memo.end() &&
      (it->second.second.has_value() || it->second.first >= kripke_bound))
    return it->second.second;
  auto result = impl_->search_countermodel(lhs, rhs, kripke_bound);
  impl_->refute_memo[key] = {kripke_bound, result};
  return result;
}

IntResult IntuitionisticEngine::decide(const Sequent& s, std::size_t kripke_bound) {
  if (provable(s)) return {IntVerdict::Proved, std::nullopt};
  if (auto m = refute(s, kripke_bound)) return {IntVerdict::Refuted, std::move(m)};
  return {IntVerdict::Unknown, std::nullopt};
}

IntResult decide_intuitionistic(const Theory& t, const Sequent& s, std::size_t kripke_bound,
                                TaggedMode mode) {
  IntuitionisticEngine engine(t, mode);
  return engine.decide(s, kripke_bound);
}

// ---- Lindenbaum constructions ----

LindenbaumBoolean lindenbaum_boolean(const Theory& t, std::size_t max_models) {
  LindenbaumBoolean out;
  out.atoms = t.signature.atom_names();
  out.models = classical_models(t);
  if (out.models.size() > max_models)
    throw ResourceError("lindenbaum_boolean: " + std::to_string(out.models.size()) +
                        " models exceed the guard");
  out.algebra = FinHeyting::boolean_powerset(out.models.size());
  return out;
}

int LindenbaumBoolean::label(const Formula& f) const {
  int mask = 0;
  for (std::size_t i = 0; i < models.size(); ++i)
    if (eval_classical(f, atoms, models[i])) mask |= 1 << i;
  return mask;
}

LindenbaumGeometric lindenbaum_geometric(const Theory& t) {
  for (const auto& ax : t.axioms) {
    auto frag = std::max(syntax::classify_fragment(*ax.lhs), syntax::classify_fragment(*ax.rhs));
    if (frag != syntax::FragmentTag::Geometric)
      throw WellFormednessError("lindenbaum_geometric: axiom " + syntax::to_text(ax) +
                                " is not geometric");
  }
  LindenbaumGeometric out;
  out.atoms = t.signature.atom_names();
  out.models = classical_models(t);
  if (out.models.size() > 20) throw ResourceError("lindenbaum_geometric: too many models");

  const std::uint32_t full =
      out.models.empty() ? 0 : static_cast<std::uint32_t>((1ull << out.models.size()) - 1);
  std::vector<std::uint32_t> cols = {0, full};
  for (std::size_t a = 0; a < out.atoms.size(); ++a) {
    std::uint32_t col = 0;
    for (std::size_t i = 0; i < out.models.size(); ++i)
      if ((out.models[i] >> a) & 1) col |= 1u << i;
    cols.push_back(col);
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

  // close under pairwise meet and join
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t k = cols.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        for (std::uint32_t c : {cols[i] & cols[j], cols[i] | cols[j]}) {
          if (std::find(cols.begin(), cols.end(), c) == cols.end()) {
            cols.push_back(c);
            grew = true;
          }
        }
      }
    std::sort(cols.begin(), cols.end());
  }

  out.columns = cols;
  out.lattice = FinHeyting::from_poset(
      FinPoset(cols.size(), [&](int a, int b) { return (cols[a] & ~cols[b]) == 0; }));
  return out;
}

int LindenbaumGeometric::label(const Formula& f) const {
  if (syntax::classify_fragment(f) != syntax::FragmentTag::Geometric)
    throw WellFormednessError("label: formula is not geometric");
  std::uint32_t col = 0;
  for (std::size_t i = 0; i < models.size(); ++i)
    if (eval_classical(f, atoms, models[i])) col |= 1u << i;
  auto it = std::find(columns.begin(), columns.end(), col);
  if (it == columns.end())
    throw AlgebraError("label: column missing from the generated lattice");
  return static_cast<int>(it - columns.begin());
}

HeytingClasses lindenbaum_heyting_bounded(const Theory& t,
                                          const std::vector<FormulaPtr>& seeds, int depth,
                                          std::size_t kripke_bound, std::size_t max_classes) {
  IntuitionisticEngine engine(t);
  std::vector<FormulaPtr> reps;

  auto provable = [&](const FormulaPtr& a, const FormulaPtr& b) {
    return engine.provable(Sequent{{}, a, b});
  };
  auto try_insert = [&](const FormulaPtr& f) {
    for (const auto& r : reps)
      if (provable(f, r) && provable(r, f)) return;
    if (reps.size() >= max_classes)
      throw ResourceError("lindenbaum_heyting_bounded: class guard exceeded");
    reps.push_back(f);
  };

  try_insert(syntax::falsity());
  try_insert(syntax::truth());
  for (const auto& s : seeds) try_insert(s);

  for (int d = 0; d < depth; ++d) {
    const std::vector<FormulaPtr> snapshot = reps;
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = 0; j < snapshot.size(); ++j) {
        if (i < j) {
          try_insert(syntax::conj({snapshot[i], snapshot[j]}));
          try_insert(syntax::disj({snapshot[i], snapshot[j]}));
        }
        if (i != j) try_insert(syntax::implies(snapshot[i], snapshot[j]));
      }
    }
  }

  HeytingClasses out;
  out.reps = reps;
  std::vector<std::vector<bool>> le(reps.size(), std::vector<bool>(reps.size(), false));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      Sequent s{{}, reps[i], reps[j]};
      auto r = engine.decide(s, kripke_bound);
      if (r.verdict == IntVerdict::Proved) {
        le[i][j] = true;
      } else if (r.verdict == IntVerdict::Refuted) {
        out.refutations.emplace(std::make_pair(static_cast<int>(i), static_cast<int>(j)),
                                *r.countermodel);
      } else {
        throw Error("decide_intuitionistic returned Unknown for " + syntax::to_text(s));
      }
    }
  }
  out.order = FinPoset(reps.size(), [&](int a, int b) { return le[a][b]; });
  return out;
}

}  // namespace toposcope::algebra
