#include <doctest.h>

#include "toposcope/syntax.hpp"

using namespace toposcope;
using namespace toposcope::syntax;

namespace {

Signature prop_sig() {
  Signature sig;
  sig.add_atom("p");
  sig.add_atom("q");
  return sig;
}

Signature pred_sig() {
  Signature sig;
  sig.add_sort("A");
  sig.add_relation("R", {"A", "A"});
  sig.add_relation("S", {"A"});
  sig.add_function("c", {}, "A");
  sig.add_function("f", {"A"}, "A");
  return sig;
}

}  // namespace

TEST_CASE("fragment classification") {
  auto p = atom("p");
  auto q = atom("q");
  CHECK(classify_fragment(*disj({p, conj({q, p})})) == FragmentTag::Geometric);
  CHECK(classify_fragment(*neg(p)) == FragmentTag::SubFirstOrder);

  auto fa = forall({{"x", "A"}}, rel("S", {Term::var("x")}));
  CHECK(classify_fragment(*fa) == FragmentTag::FirstOrder);

  // tagged infinitary nodes force their clause even for finite families
  CHECK(classify_fragment(*big_disj({p, q})) == FragmentTag::Geometric);
  CHECK(classify_fragment(*big_conj({p, q})) == FragmentTag::FirstOrder);
}

TEST_CASE("fragment is monotone under subformula embedding") {
  auto p = atom("p");
  std::vector<FormulaPtr> pool = {
      p, neg(p), conj({p, atom("q")}), big_conj({p}), big_disj({p, neg(p)}),
      implies(p, big_conj({p})),
  };
  for (const auto& f : pool) {
    auto frag = classify_fragment(*f);
    for (const auto& sub : subformulas(f))
      CHECK(classify_fragment(*sub) <= frag);
  }
}

TEST_CASE("free variables and sort inference") {
  Signature sig = pred_sig();
  CHECK(free_variables(*truth(), sig).empty());

  auto f = exists({{"y", "A"}}, rel("R", {Term::var("x"), Term::var("y")}));
  auto fv = free_variables(*f, sig);
  REQUIRE(fv.size() == 1);
  CHECK(fv.at("x") == "A");

  // propositional atoms have no free variables
  Signature ps = prop_sig();
  CHECK(free_variables(*implies(atom("p"), atom("q")), ps).empty());

  // x = y alone cannot be sorted, but an atom elsewhere forces it
  auto bare = eq(Term::var("x"), Term::var("y"));
  CHECK_THROWS_AS((void)free_variables(*bare, sig), WellFormednessError);
  auto forced = conj({eq(Term::var("x"), Term::var("y")), rel("S", {Term::var("x")})});
  CHECK(free_variables(*forced, sig).at("y") == "A");
}

TEST_CASE("substitution") {
  Signature sig = pred_sig();
  Context x_ctx{{"x", "A"}};

  // identity substitution
  auto rx = rel("S", {Term::var("x")});
  CHECK(*substitute(*rx, {Term::var("x")}, x_ctx) == *rx);

  // capture forces renaming: (exists y. R(x,y))[y/x] = exists y'. R(y, y')
  auto f = exists({{"y", "A"}}, rel("R", {Term::var("x"), Term::var("y")}));
  auto g = substitute(*f, {Term::var("y")}, x_ctx);
  auto expected = exists({{"y'", "A"}}, rel("R", {Term::var("y"), Term::var("y'")}));
  CHECK(*g == *expected);

  // (x = c)[f(z)/x] = f(z) = c
  auto e = eq(Term::var("x"), Term::app("c"));
  auto sub = substitute(*e, {Term::app("f", {Term::var("z")})}, x_ctx);
  CHECK(*sub == *eq(Term::app("f", {Term::var("z")}), Term::app("c")));
}

TEST_CASE("substitution composes on disjoint contexts") {
  Signature sig = pred_sig();
  Context x_ctx{{"x", "A"}};
  Context z_ctx{{"z", "A"}};

  auto f = rel("R", {Term::var("x"), Term::app("f", {Term::var("x")})});
  // substitute x := f(z), then z := c
  auto once = substitute(*f, {Term::app("f", {Term::var("z")})}, x_ctx);
  auto twice = substitute(*once, {Term::app("c")}, z_ctx);
  // composed: x := f(c)
  auto composed = substitute(*f, {Term::app("f", {Term::app("c")})}, x_ctx);
  CHECK(*twice == *composed);
}

TEST_CASE("well-formedness rejects sort and arity mismatches") {
  Signature sig = pred_sig();
  sig.add_sort("B");
  Context ctx{{"x", "A"}, {"b", "B"}};

  CHECK_NOTHROW(check_well_formed(*rel("S", {Term::var("x")}), sig, ctx));
  CHECK_THROWS_AS(check_well_formed(*rel("S", {Term::var("b")}), sig, ctx),
                  WellFormednessError);
  CHECK_THROWS_AS(check_well_formed(*rel("S", {}), sig, ctx), WellFormednessError);
  CHECK_THROWS_AS(check_well_formed(*eq(Term::var("x"), Term::var("b")), sig, ctx),
                  WellFormednessError);
  CHECK_THROWS_AS(check_well_formed(*rel("T", {}), sig, ctx), WellFormednessError);
  // binder shadowing the context is rejected
  CHECK_THROWS_AS(
      check_well_formed(*exists({{"x", "A"}}, rel("S", {Term::var("x")})), sig, ctx),
      WellFormednessError);
}

TEST_CASE("negation sugar is an implication node") {
  auto p = atom("p");
  auto n = neg(p);
  CHECK(n->kind == Formula::Kind::Implies);
  CHECK(n->parts[1]->kind == Formula::Kind::Falsity);
  CHECK(is_neg(*n));
  CHECK(!is_neg(*implies(p, atom("q"))));
}

TEST_CASE("theories validate their declared fragment") {
  Theory t;
  t.signature = prop_sig();
  t.axioms.push_back({{}, truth(), neg(atom("p"))});
  t.fragment = FragmentTag::Geometric;
  CHECK_THROWS_AS(t.validate(), WellFormednessError);
  t.fragment = FragmentTag::SubFirstOrder;
  CHECK_NOTHROW(t.validate());
  CHECK(t.computed_fragment() == FragmentTag::SubFirstOrder);
}

TEST_CASE("signature invariants") {
  Signature sig;
  sig.add_sort("A");
  CHECK_THROWS_AS(sig.add_sort("A"), WellFormednessError);
  CHECK_THROWS_AS(sig.add_relation("R", {"B"}), WellFormednessError);
  sig.add_relation("R", {"A"});
  CHECK_THROWS_AS(sig.add_relation("R", {}), WellFormednessError);
  CHECK(!sig.propositional());

  Context ctx{{"x", "A"}};
  CHECK_THROWS_AS(Context({{"x", "A"}, {"x", "A"}}).validate(), WellFormednessError);
}
