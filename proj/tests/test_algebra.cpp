#include <doctest.h>
#include <map>

#include "toposcope/algebra.hpp"

using namespace toposcope;
using namespace toposcope::algebra;

TEST_CASE("poset law verification") {
  CHECK_NOTHROW(FinPoset(3, [](int a, int b) { return a <= b; }));
  // not antisymmetric
  CHECK_THROWS_AS(FinPoset(2, [](int, int) { return true; }), AlgebraError);
  // not reflexive
  CHECK_THROWS_AS(FinPoset(2, [](int a, int b) { return a < b; }), AlgebraError);
  // not transitive
  CHECK_THROWS_AS(FinPoset(3,
                           [](int a, int b) {
                             if (a == b) return true;
                             return (a == 0 && b == 1) || (b == 2 && a == 1);
                           }),
                  AlgebraError);
}

TEST_CASE("chains and powersets are Heyting algebras") {
  auto c3 = FinHeyting::chain(3);
  CHECK(c3.size() == 3);
  CHECK(c3.bot() == 0);
  CHECK(c3.top() == 2);
  CHECK(c3.imp(1, 0) == 0);
  CHECK(c3.imp(2, 1) == 1);
  CHECK(c3.neg(1) == 0);
  CHECK(c3.neg(0) == 2);
  CHECK(!c3.is_boolean());

  auto b8 = FinHeyting::boolean_powerset(3);
  CHECK(b8.size() == 8);
  CHECK(b8.is_boolean());
  CHECK(b8.meet(0b101, 0b110) == 0b100);
  CHECK(b8.join(0b001, 0b010) == 0b011);
  CHECK(b8.imp(0b101, 0b100) == 0b110);
}

TEST_CASE("residuation holds on every constructed algebra") {
  for (const auto& h : heyting_catalogue(6)) {
    for (std::size_t a = 0; a < h.size(); ++a)
      for (std::size_t b = 0; b < h.size(); ++b)
        for (std::size_t c = 0; c < h.size(); ++c) {
          bool left = h.le(h.meet(static_cast<int>(c), static_cast<int>(a)),
                           static_cast<int>(b));
          bool right = h.le(static_cast<int>(c), h.imp(static_cast<int>(a),
                                                       static_cast<int>(b)));
          CHECK(left == right);
        }
  }
}

TEST_CASE("a non-lattice poset is rejected") {
  // two incomparable elements with no bounds
  auto two = FinPoset(2, [](int a, int b) { return a == b; });
  CHECK_THROWS_AS(FinHeyting::from_poset(two), AlgebraError);
}

TEST_CASE("free Boolean algebras") {
  auto b0 = FinHeyting::free_boolean(0);
  CHECK(b0.size() == 2);
  auto b1 = FinHeyting::free_boolean(1);
  CHECK(b1.size() == 4);
  auto b2 = FinHeyting::free_boolean(2);
  CHECK(b2.size() == 16);
  CHECK(b2.is_boolean());
  CHECK(b2.generators().size() == 2);
  // generators are independent: all four meets of literals are distinct
  int x = b2.generators()[0], y = b2.generators()[1];
  CHECK(b2.meet(x, y) != b2.meet(x, b2.neg(y)));
  CHECK(b2.meet(x, y) != b2.bot());
}

TEST_CASE("catalogue matches the known distributive lattice counts") {
  const auto& cat = heyting_catalogue(6);
  std::map<std::size_t, int> by_size;
  for (const auto& h : cat) by_size[h.size()]++;
  // unlabeled bounded distributive lattices: 1, 1, 1, 2, 3, 5 for n = 1..6
  CHECK(by_size[1] == 1);
  CHECK(by_size[2] == 1);
  CHECK(by_size[3] == 1);
  CHECK(by_size[4] == 2);
  CHECK(by_size[5] == 3);
  CHECK(by_size[6] == 5);
  // pairwise non-isomorphic
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j)
      CHECK(!cat[i].isomorphic_to(cat[j]));
}

TEST_CASE("hom enumeration counts") {
  auto b2 = FinHeyting::chain(2);
  auto b4 = FinHeyting::boolean_powerset(2);
  auto c3 = FinHeyting::chain(3);

  CHECK(enumerate_homs(b2, b2).size() == 1);
  CHECK(enumerate_homs(b4, b2).size() == 2);
  CHECK(enumerate_homs(b2, c3).size() == 1);

  for (const auto& h : enumerate_homs(b4, c3)) CHECK_NOTHROW(h.validate());
}

TEST_CASE("hom enumeration guard") {
  auto b16 = FinHeyting::free_boolean(2);
  CHECK_THROWS_AS((void)enumerate_homs(b16, b16, 10), ResourceError);
}

TEST_CASE("Boolean sources force Heyting preservation") {
  auto b4 = FinHeyting::boolean_powerset(2);
  auto c3 = FinHeyting::chain(3);

  // every {0,1,meet,join}-hom from the 4-element Boolean algebra preserves
  // implication, wherever it lands
  for (const auto* target : {&b4, &c3}) {
    auto homs = enumerate_homs(b4, *target);
    CHECK(!homs.empty());
    for (const auto& h : homs) CHECK(check_heyting_preservation(h).preserved);
  }

  // the 3-chain witness: m |-> 0 collapses the negation
  LatticeHom collapse{&c3, &b4, {0, 0, 3}};
  CHECK_NOTHROW(collapse.validate());
  auto verdict = check_heyting_preservation(collapse);
  CHECK(!verdict.preserved);
  REQUIRE(verdict.violation.has_value());
  CHECK(*verdict.violation == std::make_pair(1, 0));

  // an invalid hom is rejected before the implication check
  LatticeHom broken{&c3, &b4, {0, 3, 1}};  // not monotone, breaks joins
  CHECK_THROWS_AS((void)check_heyting_preservation(broken), AlgebraError);
}

TEST_CASE("join irreducibles generate by joins") {
  for (const auto& h : heyting_catalogue(6)) {
    auto ji = h.join_irreducibles();
    for (std::size_t a = 0; a < h.size(); ++a) {
      int join = h.bot();
      for (int j : ji)
        if (h.le(j, static_cast<int>(a))) join = h.join(join, j);
      CHECK(join == static_cast<int>(a));
    }
  }
}

TEST_CASE("downset lattices") {
  // downsets of a 2-antichain: the 4-element Boolean algebra
  auto anti = FinPoset(2, [](int a, int b) { return a == b; });
  auto d = FinHeyting::downsets(anti);
  CHECK(d.size() == 4);
  CHECK(d.is_boolean());
  CHECK(d.isomorphic_to(FinHeyting::boolean_powerset(2)));

  // downsets of a 2-chain: the 3-chain
  auto chain = FinPoset(2, [](int a, int b) { return a <= b; });
  CHECK(FinHeyting::downsets(chain).isomorphic_to(FinHeyting::chain(3)));
}
