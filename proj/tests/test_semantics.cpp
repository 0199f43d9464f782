#include <doctest.h>

#include "toposcope/decide.hpp"
#include "toposcope/semantics.hpp"

using namespace toposcope;
using namespace toposcope::syntax;
using namespace toposcope::semantics;

namespace {

PresheafStructure idempotent_structure(const fincat::FinCategory& m, const Signature& sig,
                                       const fincat::Presheaf& rep,
                                       const fincat::Subpresheaf& r_interp) {
  PresheafStructure s;
  s.cat = &m;
  s.signature = &sig;
  s.sorts = {{"A", &rep}};
  s.relations.emplace("R", r_interp);
  return s;
}

}  // namespace

TEST_CASE("propositional interpretation on the 3-chain") {
  auto c3 = algebra::FinHeyting::chain(3);
  PropStructure m{&c3, {{"p", 1}}};

  CHECK(interpret(m, *truth()) == 2);
  CHECK(interpret(m, *neg(neg(atom("p")))) == 2);
  CHECK(interpret(m, *disj({atom("p"), neg(atom("p"))})) == 1);

  CHECK(sequent_valid(m, {{}, truth(), truth()}));
  CHECK(!sequent_valid(m, {{}, truth(), disj({atom("p"), neg(atom("p"))})}));

  // tagged-infinitary nodes interpret as iterated finitary operations
  CHECK(interpret(m, *big_conj({atom("p"), truth()})) == 1);
  CHECK(interpret(m, *big_disj({atom("p"), falsity()})) == 1);

  CHECK_THROWS_AS((void)interpret(m, *exists({{"x", "A"}}, atom("p"))), WellFormednessError);
}

TEST_CASE("presheaf interpretation over the walking idempotent") {
  auto m = fincat::FinCategory::walking_idempotent();
  Signature sig;
  sig.add_sort("A");
  sig.add_relation("R", {"A"});

  auto rep = fincat::Presheaf::representable(m, 0);
  // the {e}-ideal inside the representable: the element fixed by e
  fincat::Subpresheaf ideal = fincat::Subpresheaf::none(rep);
  int e = m.find_arrow("e");
  for (std::size_t i = 0; i < rep.carrier(0); ++i)
    if (rep.act(e, static_cast<int>(i)) == static_cast<int>(i) &&
        rep.elems[0][i] == m.arrow(e).name)
      ideal.sets[0].set(i);
  REQUIRE(ideal.sets[0].count() == 1);
  ideal.validate();

  // R's domain is the 1-fold product, which renames elements to "(x)" tuples
  auto domain = fincat::product(m, {&rep});
  fincat::Subpresheaf r_interp = fincat::Subpresheaf::none(domain.presheaf);
  for (auto i : ideal.sets[0].members()) r_interp.sets[0].set(i);
  r_interp.validate();

  PresheafStructure s = idempotent_structure(m, sig, rep, r_interp);

  auto ex = exists({{"x", "A"}}, rel("R", {Term::var("x")}));
  auto fa = forall({{"x", "A"}}, rel("R", {Term::var("x")}));

  // context is empty: interpretations are subterminals
  auto iex = interpret(s, *ex, {});
  CHECK(iex.subobject.sets[0].count() == 1);  // full subterminal
  auto ifa = interpret(s, *fa, {});
  CHECK(ifa.subobject.sets[0].count() == 0);  // empty subterminal

  CHECK(sequent_valid(s, {{}, ex, truth()}));
  CHECK(!sequent_valid(s, {{}, truth(), fa}));
  CHECK(sequent_valid(s, {{{"x", "A"}}, rel("R", {Term::var("x")}), truth()}));

  // interpretation matches the universal property route: top |- exists is valid
  CHECK(sequent_valid(s, {{}, truth(), ex}));
}

TEST_CASE("equality and function symbols in presheaf mode") {
  // a 2-element set as a presheaf over the one-object discrete category
  auto cat = fincat::FinCategory::discrete(1);
  Signature sig;
  sig.add_sort("A");
  sig.add_function("c", {}, "A");
  sig.add_function("f", {"A"}, "A");

  auto carrier = fincat::Presheaf::constant(cat, 2);
  PresheafStructure s;
  s.cat = &cat;
  s.signature = &sig;
  s.sorts = {{"A", &carrier}};

  // c = element 0; f swaps the two elements
  auto c_domain = fincat::product(cat, {});
  fincat::NatTrans c_interp;
  c_interp.src = &c_domain.presheaf;
  c_interp.dst = &carrier;
  c_interp.component = {{0}};
  c_interp.validate();
  s.functions.emplace("c", c_interp);

  auto f_domain = fincat::product(cat, {&carrier});
  fincat::NatTrans f_interp;
  f_interp.src = &f_domain.presheaf;
  f_interp.dst = &carrier;
  f_interp.component = {{1, 0}};
  f_interp.validate();
  s.functions.emplace("f", f_interp);

  // (x = c)[f(z)/x] and f(z) = c have the same interpretation
  Context x_ctx{{"x", "A"}};
  Context z_ctx{{"z", "A"}};
  auto original = eq(Term::var("x"), Term::app("c"));
  auto substituted = substitute(*original, {Term::app("f", {Term::var("z")})}, x_ctx);
  auto direct = eq(Term::app("f", {Term::var("z")}), Term::app("c"));
  auto i1 = interpret(s, *substituted, z_ctx);
  auto i2 = interpret(s, *direct, z_ctx);
  CHECK(i1.subobject.sets == i2.subobject.sets);
  // and the set is { z : f(z) = c } = { element 1 }
  CHECK(i1.subobject.sets[0].count() == 1);
  CHECK(i1.subobject.sets[0].test(1));
}

TEST_CASE("soundness suite over Heyting targets") {
  auto c3 = algebra::FinHeyting::chain(3);
  auto b4 = algebra::FinHeyting::boolean_powerset(2);
  std::vector<SoundnessTarget> targets = {{"chain3", &c3, nullptr}, {"b4", &b4, nullptr}};

  auto records = soundness_suite(kernel::SystemTag::Classical, targets);
  bool chain3_refused = false;
  for (const auto& r : records) {
    CHECK(r.status != "fail");
    if (r.rule == "lem" && r.target == "chain3") {
      CHECK(r.status == "refused");
      chain3_refused = true;
    }
    if (r.rule == "lem" && r.target == "b4") CHECK(r.status == "pass");
  }
  CHECK(chain3_refused);
}

TEST_CASE("soundness suite over presheaf targets") {
  auto monoid = fincat::FinCategory::walking_idempotent();
  auto discrete = fincat::FinCategory::discrete(2);
  std::vector<SoundnessTarget> targets = {{"idem", nullptr, &monoid},
                                          {"disc2", nullptr, &discrete}};
  for (auto sys : {kernel::SystemTag::Geometric, kernel::SystemTag::FirstOrder}) {
    for (const auto& r : soundness_suite(sys, targets)) CHECK(r.status != "fail");
  }
  // classical over the non-Boolean presheaf topos is refused
  auto records = soundness_suite(kernel::SystemTag::Classical, targets);
  bool refused = false, passed_disc = false;
  for (const auto& r : records) {
    if (r.rule == "lem" && r.target == "idem") refused = r.status == "refused";
    if (r.rule == "lem" && r.target == "disc2") passed_disc = r.status == "pass";
  }
  CHECK(refused);
  CHECK(passed_disc);
}

TEST_CASE("structure maps: homomorphism vs sub-elementary") {
  auto c3 = algebra::FinHeyting::chain(3);
  auto b4 = algebra::FinHeyting::boolean_powerset(2);

  // identity map is everything
  PropStructure m{&c3, {{"p", 1}}};
  algebra::LatticeHom id{&c3, &c3, {0, 1, 2}};
  PropStructureMap self{&m, &m, id};
  CHECK(is_homomorphism(self));
  auto corpus = formula_corpus({"p"}, 3, 40, 41, FragmentTag::SubFirstOrder);
  CHECK(is_subelementary(self, corpus).holds);
  CHECK(is_elementary(self, corpus).holds);

  // the 3-chain collapse m |-> 0: homomorphism but not sub-elementary
  algebra::LatticeHom collapse{&c3, &b4, {0, 0, 3}};
  PropStructure n{&b4, {{"p", 0}}};
  PropStructureMap h{&m, &n, collapse};
  CHECK(is_homomorphism(h));
  auto report = is_subelementary(h, corpus);
  CHECK(!report.holds);
  REQUIRE(report.witness.has_value());
  // the witnessing formula involves an implication
  CHECK(classify_fragment(**report.witness) >= FragmentTag::SubFirstOrder);

  // a Heyting-preserving algebra map is sub-elementary on the full corpus
  auto embeds = algebra::enumerate_homs(b4, b4);
  for (const auto& e : embeds) {
    if (!algebra::check_heyting_preservation(e).preserved) continue;
    PropStructure src{&b4, {{"p", 2}}};
    PropStructure dst{&b4, {{"p", e(2)}}};
    PropStructureMap map{&src, &dst, e};
    CHECK(is_subelementary(map, corpus).holds);
  }
}

TEST_CASE("Boolean-target collapse: lattice maps between Boolean models are elementary") {
  auto corpus = formula_corpus({"p", "q"}, 3, 40, 43, FragmentTag::FirstOrder);
  auto b4 = algebra::FinHeyting::boolean_powerset(2);
  auto b16 = algebra::FinHeyting::free_boolean(2);

  for (const auto* src : {&b4, &b16}) {
    for (const auto* dst : {&b4, &b16}) {
      for (const auto& hom : algebra::enumerate_homs(*src, *dst)) {
        for (int pa : {src->bot(), src->top(), 1}) {
          PropStructure m{src, {{"p", pa}, {"q", src->top()}}};
          PropStructure n{dst, {{"p", hom(pa)}, {"q", hom(src->top())}}};
          PropStructureMap map{&m, &n, hom};
          CHECK(is_elementary(map, corpus).holds);
        }
      }
    }
  }
}

TEST_CASE("functor-preservation shadow for Heyting-preserving maps") {
  auto corpus = formula_corpus({"p"}, 3, 40, 47, FragmentTag::SubFirstOrder);
  auto b4 = algebra::FinHeyting::boolean_powerset(2);
  auto b2 = algebra::FinHeyting::chain(2);
  for (const auto& hom : algebra::enumerate_homs(b4, b2)) {
    REQUIRE(algebra::check_heyting_preservation(hom).preserved);
    for (int pa = 0; pa < 4; ++pa) {
      PropStructure m{&b4, {{"p", pa}}};
      PropStructure n{&b2, {{"p", hom(pa)}}};
      for (const auto& f : corpus)
        CHECK(hom(interpret(m, *f)) == interpret(n, *f));
    }
  }
}

TEST_CASE("interpretation respects provable equivalence") {
  Theory t;
  t.signature.add_atom("p");
  t.signature.add_atom("q");
  algebra::IntuitionisticEngine engine(t);
  auto corpus = formula_corpus({"p", "q"}, 2, 25, 53, FragmentTag::SubFirstOrder);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      bool equivalent = engine.provable({{}, corpus[i], corpus[j]}) &&
                        engine.provable({{}, corpus[j], corpus[i]});
      if (!equivalent) continue;
      for (const auto& h : algebra::heyting_catalogue(4)) {
        for (std::size_t pa = 0; pa < h.size(); ++pa)
          for (std::size_t qa = 0; qa < h.size(); ++qa) {
            PropStructure m{&h, {{"p", static_cast<int>(pa)},
                                 {"q", static_cast<int>(qa)}}};
            CHECK(interpret(m, *corpus[i]) == interpret(m, *corpus[j]));
          }
      }
    }
}

TEST_CASE("geometric interpretations are monotone in the atoms") {
  auto corpus = formula_corpus({"p", "q"}, 3, 30, 59, FragmentTag::Geometric);
  for (const auto& h : algebra::heyting_catalogue(5)) {
    for (std::size_t pa = 0; pa < h.size(); ++pa)
      for (std::size_t pb = 0; pb < h.size(); ++pb) {
        if (!h.le(static_cast<int>(pa), static_cast<int>(pb))) continue;
        for (std::size_t qa = 0; qa < h.size(); ++qa) {
          PropStructure low{&h, {{"p", static_cast<int>(pa)}, {"q", static_cast<int>(qa)}}};
          PropStructure high{&h, {{"p", static_cast<int>(pb)}, {"q", static_cast<int>(qa)}}};
          for (const auto& f : corpus)
            CHECK(h.le(interpret(low, *f), interpret(high, *f)));
        }
      }
  }
}

TEST_CASE("presheaf structure maps") {
  auto m = fincat::FinCategory::walking_idempotent();
  Signature sig;
  sig.add_sort("A");
  sig.add_relation("R", {"A"});

  auto rep = fincat::Presheaf::representable(m, 0);
  auto domain = fincat::product(m, {&rep});

  PresheafStructure source =
      idempotent_structure(m, sig, rep, fincat::Subpresheaf::none(domain.presheaf));
  PresheafStructure target =
      idempotent_structure(m, sig, rep, fincat::Subpresheaf::full(domain.presheaf));

  PresheafStructureMap map;
  map.source = &source;
  map.target = &target;
  map.components.emplace("A", fincat::NatTrans::identity(rep));
  CHECK(is_homomorphism(map));

  Context ctx{{"x", "A"}};
  std::vector<FormulaPtr> corpus = {rel("R", {Term::var("x")}),
                                    neg(rel("R", {Term::var("x")}))};
  // R grows along the map (empty to full), so ~R shrinks from full to empty:
  // sub-elementary fails with the negated witness
  auto report = is_subelementary(map, corpus, ctx);
  CHECK(!report.holds);
  REQUIRE(report.witness.has_value());
  CHECK(is_neg(**report.witness));

  // the identity map on the same structure is sub-elementary
  PresheafStructureMap id_map;
  id_map.source = &source;
  id_map.target = &source;
  id_map.components.emplace("A", fincat::NatTrans::identity(rep));
  CHECK(is_subelementary(id_map, corpus, ctx).holds);
}

TEST_CASE("corpora are deterministic and fragment-correct") {
  auto a = formula_corpus({"p", "q"}, 3, 30, 61, FragmentTag::Geometric);
  auto b = formula_corpus({"p", "q"}, 3, 30, 61, FragmentTag::Geometric);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(*a[i] == *b[i]);
  for (const auto& f : a) CHECK(classify_fragment(*f) == FragmentTag::Geometric);

  auto fo = formula_corpus({"p"}, 4, 50, 67, FragmentTag::FirstOrder);
  bool saw_tagged = false;
  for (const auto& f : fo)
    for (const auto& sub : subformulas(f))
      if (sub->kind == Formula::Kind::BigAnd) saw_tagged = true;
  CHECK(saw_tagged);
}
