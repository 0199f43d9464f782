#include <doctest.h>

#include "toposcope/commands.hpp"
#include "toposcope/decide.hpp"
#include "toposcope/semantics.hpp"
#include "toposcope/sites.hpp"

using namespace toposcope;
using namespace toposcope::syntax;
using namespace toposcope::sites;

namespace {

Theory atoms(std::initializer_list<const char*> names) {
  Theory t;
  for (const char* n : names) t.signature.add_atom(n);
  return t;
}

// brute-force per-object comparison of the covering families, for small slices
bool families_equal_brute_force(const SyntacticSite& site) {
  for (int a : site.objects) {
    std::vector<int> down;
    for (int b : site.objects)
      if (site.algebra.le(b, a)) down.push_back(b);
    REQUIRE(down.size() <= 16);
    for (std::uint32_t mask = 0; mask < (1u << down.size()); ++mask) {
      SiteSieve s{a, {}};
      for (std::size_t i = 0; i < down.size(); ++i)
        if ((mask >> i) & 1) s.elements.push_back(down[i]);
      bool downset = true;
      for (int x : s.elements)
        for (int y : down)
          if (site.algebra.le(y, x) &&
              !std::binary_search(s.elements.begin(), s.elements.end(), y))
            downset = false;
      if (!downset) continue;
      if (kappa_covers(site, s) != dense_covers(site, s)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("boolean site sizes") {
  CHECK(build_boolean_site(atoms({})).algebra.size() == 2);
  CHECK(build_boolean_site(atoms({"p"})).algebra.size() == 4);

  Theory t = atoms({"p", "q"});
  t.axioms.push_back({{}, atom("p"), atom("q")});
  t.axioms.push_back({{}, atom("q"), atom("p")});
  CHECK(build_boolean_site(t).algebra.size() == 4);
}

TEST_CASE("geometric site sizes") {
  CHECK(build_geometric_site(atoms({})).algebra.size() == 2);
  CHECK(build_geometric_site(atoms({"p"})).algebra.size() == 3);
  CHECK(build_geometric_site(atoms({"p", "q"})).algebra.size() == 6);
}

TEST_CASE("syncons removes exactly the bottom") {
  auto site4 = build_boolean_site(atoms({"p"}));
  auto sc = syncons(site4);
  CHECK(sc.objects.size() == 3);
  CHECK(!sc.has_object(site4.algebra.bot()));

  auto site16 = build_boolean_site(atoms({"p", "q"}));
  CHECK(syncons(site16).objects.size() == 15);

  Theory bad = atoms({"p"});
  bad.axioms.push_back({{}, truth(), atom("p")});
  bad.axioms.push_back({{}, atom("p"), falsity()});
  auto degenerate = build_boolean_site(bad);
  CHECK_THROWS_WITH_AS(syncons(degenerate), "theory inconsistent, SynCons empty", Error);
}

TEST_CASE("universal model property: labeling validity is provability") {
  Theory t = atoms({"p", "q"});
  t.axioms.push_back({{}, truth(), implies(atom("p"), atom("q"))});
  auto site = build_boolean_site(t);
  auto corpus = semantics::sequent_corpus({"p", "q"}, 3, 40, 37, FragmentTag::FirstOrder);
  for (const auto& s : corpus)
    CHECK(site.sequent_valid(s) == algebra::decide_classical(t, s));
}

TEST_CASE("topology comparison on SynCons sites is equality") {
  for (auto&& t : {atoms({"p"}), atoms({"p", "q"})}) {
    auto sc = syncons(build_boolean_site(t));
    auto result = compare_topologies(sc);
    CHECK(result.verdict == TopologyComparison::Equal);
    CHECK(families_equal_brute_force(sc));
  }
}

TEST_CASE("the full Boolean site fails both inclusions at the bottom") {
  auto site = build_boolean_site(atoms({"p"}));
  auto result = compare_topologies(site);
  CHECK(result.verdict != TopologyComparison::Equal);
  REQUIRE(result.kappa_not_dense.has_value());
  CHECK(result.kappa_not_dense->object == site.algebra.bot());
  CHECK(result.kappa_not_dense->sieve.elements.empty());
  // the dense sieve {bot} fails to kappa-cover any non-bottom object
  REQUIRE(result.dense_not_kappa.has_value());
}

TEST_CASE("geometric sites may separate the topologies") {
  // on the 3-element geometric site of one atom, density and joins agree on
  // SynCons-style objects but the bottom breaks kappa-in-dense
  auto site = build_geometric_site(atoms({"p"}));
  auto result = compare_topologies(site);
  CHECK(result.verdict != TopologyComparison::Equal);
}

TEST_CASE("closed sieve lattices on sites") {
  Theory t = atoms({"p", "q"});
  auto full = build_boolean_site(t);
  auto sc = syncons(full);

  auto top_lattice = closed_sieve_lattice(sc, sc.algebra.top());
  CHECK(top_lattice.algebra.size() == 16);  // 2^(#models)
  CHECK(top_lattice.algebra.is_boolean());

  // every object of the SynCons site has a Boolean closed-sieve lattice
  CHECK(is_boolean_site(sc));

  // the full site on an atom keeps a non-Boolean trace nowhere: closed
  // sieves on bottom form the 1-element lattice
  auto bottom_lattice = closed_sieve_lattice(full, full.algebra.bot());
  CHECK(bottom_lattice.algebra.size() == 1);
}

TEST_CASE("sieves decompose as joins of principal sieves") {
  auto sc = syncons(build_boolean_site(atoms({"p", "q"})));
  for (int a : sc.objects) {
    auto lattice = closed_sieve_lattice(sc, a);
    for (const auto& s : lattice.sieves) {
      std::vector<int> uni;
      for (int b : s.elements)
        for (int c : sc.objects)
          if (sc.algebra.le(c, b)) uni.push_back(c);
      std::sort(uni.begin(), uni.end());
      uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
      CHECK(uni == s.elements);
    }
  }
}

TEST_CASE("site export as a category") {
  auto sc = syncons(build_boolean_site(atoms({"p"})));
  auto cat = site_category(sc);
  CHECK(cat.num_objects() == 3);
  // arrows = comparable pairs
  std::size_t pairs = 0;
  for (int a : sc.objects)
    for (int b : sc.objects)
      if (sc.algebra.le(a, b)) ++pairs;
  CHECK(cat.num_arrows() == pairs);
  CHECK_THROWS_AS((void)site_category(syncons(build_boolean_site(atoms({"p", "q", "r"}))), 4),
                  ResourceError);
}

TEST_CASE("tsfo double sequents on chains and the 4-element Boolean algebra") {
  // 2-element algebra: both sides of every double sequent agree
  auto r2 = tsfo_sequents(algebra::FinHeyting::chain(2));
  CHECK(r2.all_valid);
  for (const auto& s : r2.sequents) CHECK(s.lhs == s.rhs);

  // 3-chain: the 3+2+1 closed-sieve pairs per object, all valid
  auto r3 = tsfo_sequents(algebra::FinHeyting::chain(3));
  CHECK(r3.all_valid);
  std::size_t top_pairs = 0;
  for (const auto& s : r3.sequents)
    if (s.object == 2) ++top_pairs;
  CHECK(top_pairs == 9);  // ordered pairs over the 3 slices below the top

  auto r4 = tsfo_sequents(algebra::FinHeyting::boolean_powerset(2));
  CHECK(r4.all_valid);

  // the rendered double sequents hold in the algebra itself under the
  // element labeling
  const auto h = algebra::FinHeyting::chain(3);
  auto rendered = tsfo_sequents(h).rendered;
  semantics::PropStructure m{&h, {}};
  for (std::size_t e = 0; e < h.size(); ++e)
    m.assignment["e" + std::to_string(e)] = static_cast<int>(e);
  for (const auto& ax : rendered.axioms) CHECK(semantics::sequent_valid(m, ax));
}

TEST_CASE("acceptance family is consistent throughout") {
  auto theories = cli::acceptance_theories(3);
  CHECK(theories.size() == 299);
  for (const auto& t : theories) CHECK(!algebra::classical_models(t).empty());
}
