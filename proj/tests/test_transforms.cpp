#include <doctest.h>

#include "toposcope/decide.hpp"
#include "toposcope/semantics.hpp"
#include "toposcope/transforms.hpp"

using namespace toposcope;
using namespace toposcope::syntax;
using namespace toposcope::transforms;

TEST_CASE("classicalize rewrites forall and tagged conjunction only") {
  Signature sig;
  sig.add_sort("A");
  sig.add_relation("R", {"A"});

  auto fa = forall({{"y", "A"}}, rel("R", {Term::var("y")}));
  auto out = classicalize(*fa);
  auto expected = neg(exists({{"y", "A"}}, neg(rel("R", {Term::var("y")}))));
  CHECK(*out == *expected);

  auto p = atom("p"), q = atom("q");
  CHECK(*classicalize(*disj({p, q})) == *disj({p, q}));
  CHECK(*classicalize(*conj({p, q})) == *conj({p, q}));

  auto big = big_conj({p, q});
  auto translated = classicalize(*big);
  CHECK(*translated == *neg(big_disj({neg(p), neg(q)})));
  CHECK(translated->parts[0]->kind == Formula::Kind::BigOr);
}

TEST_CASE("classicalize lands in the sub-first-order fragment and is idempotent") {
  auto p = atom("p"), q = atom("q");
  std::vector<FormulaPtr> pool = {
      big_conj({p, implies(q, p)}),
      implies(big_conj({p, q}), big_disj({p, q})),
      forall({{"y", "A"}}, exists({{"z", "A"}}, rel("R", {Term::var("y"), Term::var("z")}))),
      conj({p, big_conj({q, big_conj({p, q})})}),
  };
  for (const auto& f : pool) {
    auto t = classicalize(*f);
    CHECK(classify_fragment(*t) <= FragmentTag::SubFirstOrder);
    CHECK(*classicalize(*t) == *t);
  }
}

TEST_CASE("classicalize preserves Boolean interpretations") {
  auto corpus = semantics::formula_corpus({"p", "q"}, 3, 60, 7, FragmentTag::FirstOrder);
  auto b4 = algebra::FinHeyting::boolean_powerset(2);
  for (const auto& f : corpus) {
    auto t = classicalize(*f);
    for (int pa = 0; pa < 4; ++pa)
      for (int qa = 0; qa < 4; ++qa) {
        semantics::PropStructure m{&b4, {{"p", pa}, {"q", qa}}};
        CHECK(semantics::interpret(m, *f) == semantics::interpret(m, *t));
      }
  }
}

namespace {

// classical model sets over the original atoms, as sorted valuation masks
std::vector<std::uint32_t> models_over(const Theory& t, const std::vector<std::string>& atoms) {
  auto own_atoms = t.signature.atom_names();
  std::vector<std::uint32_t> projected;
  for (auto m : algebra::classical_models(t)) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      auto it = std::find(own_atoms.begin(), own_atoms.end(), atoms[i]);
      REQUIRE(it != own_atoms.end());
      if ((m >> (it - own_atoms.begin())) & 1) mask |= 1u << i;
    }
    projected.push_back(mask);
  }
  std::sort(projected.begin(), projected.end());
  projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
  return projected;
}

}  // namespace

TEST_CASE("morleyize of p -> q names the implication and its parts") {
  Theory t;
  t.signature.add_atom("p");
  t.signature.add_atom("q");
  t.axioms.push_back({{}, truth(), implies(atom("p"), atom("q"))});
  t.fragment = FragmentTag::SubFirstOrder;

  auto result = morleyize(t);
  CHECK(result.theory.fragment == FragmentTag::Geometric);
  CHECK(result.theory.computed_fragment() == FragmentTag::Geometric);
  // names the implication and its two subformulas
  CHECK(result.names.size() == 3);

  // classical model sets over {p, q} coincide (truth-table enumeration)
  CHECK(models_over(result.theory, {"p", "q"}) == models_over(t, {"p", "q"}));
}

TEST_CASE("morleyize leaves geometric theories unchanged") {
  Theory t;
  t.signature.add_atom("p");
  t.signature.add_atom("q");
  t.axioms.push_back({{}, atom("p"), disj({atom("p"), atom("q")})});
  t.fragment = FragmentTag::Geometric;

  auto result = morleyize(t);
  CHECK(result.names.empty());
  CHECK(result.theory.axioms.size() == 1);
  CHECK(result.theory.axioms[0] == t.axioms[0]);
  CHECK(result.theory.signature == t.signature);

  Theory empty;
  auto trivial = morleyize(empty);
  CHECK(trivial.theory.axioms.empty());
  CHECK(trivial.names.empty());
}

TEST_CASE("morleyize rejects tagged-infinitary input") {
  Theory t;
  t.signature.add_atom("p");
  t.axioms.push_back({{}, truth(), big_conj({atom("p"), neg(atom("p"))})});
  t.fragment = FragmentTag::FirstOrder;
  CHECK_THROWS_AS((void)morleyize(t), WellFormednessError);
}

TEST_CASE("morleyize preserves classical model sets on a corpus of theories") {
  auto generated = semantics::formula_corpus({"p", "q"}, 2, 48, 11, FragmentTag::SubFirstOrder);
  // morleyize wants finitary input: drop formulas with tagged nodes
  std::vector<FormulaPtr> corpus;
  for (const auto& f : generated) {
    bool tagged = false;
    for (const auto& sub : subformulas(f))
      if (sub->kind == Formula::Kind::BigAnd || sub->kind == Formula::Kind::BigOr)
        tagged = true;
    if (!tagged) corpus.push_back(f);
  }
  REQUIRE(corpus.size() >= 10);
  std::size_t compared = 0;
  for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
    Theory t;
    t.signature.add_atom("p");
    t.signature.add_atom("q");
    t.axioms.push_back({{}, truth(), corpus[i]});
    t.axioms.push_back({{}, corpus[i + 1], corpus[i]});
    t.fragment = t.computed_fragment();

    auto result = morleyize(t);
    CHECK(result.theory.computed_fragment() == FragmentTag::Geometric);
    // valuation enumeration over the extended signature is exponential in
    // the subformula count, so compare only reasonably small outputs
    if (result.theory.signature.relations.size() > 16) continue;
    ++compared;
    CHECK(models_over(result.theory, {"p", "q"}) == models_over(t, {"p", "q"}));
  }
  CHECK(compared >= 5);
}

TEST_CASE("morleyize handles quantified axioms") {
  Theory t;
  t.signature.add_sort("A");
  t.signature.add_relation("R", {"A"});
  t.axioms.push_back({{}, truth(), forall({{"y", "A"}}, rel("R", {Term::var("y")}))});
  t.fragment = FragmentTag::FirstOrder;

  auto result = morleyize(t);
  CHECK(result.theory.computed_fragment() == FragmentTag::Geometric);
  // the forall, its body; each with a complement partner
  CHECK(result.names.size() == 2);
  CHECK_NOTHROW(result.theory.validate());
}
