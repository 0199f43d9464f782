#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toposcope/algebra.hpp"
#include "toposcope/bits.hpp"

namespace toposcope::fincat {

// Finite category with explicit arrows and a composition table; identity and
// associativity laws are verified on construction.
class FinCategory {
 public:
  struct ArrowData {
    std::string name;
    int src;
    int tgt;
  };

  class Builder {
   public:
    int add_object(const std::string& name);
    // Identities are created automatically as "id_<object>".
    int add_arrow(const std::string& name, int src, int tgt);
    // after o before, both non-identity
    void set_compose(int after, int before, int result);
    FinCategory build();  // verifies all laws; composites must be total

   private:
    friend class FinCategory;
    std::vector<std::string> objects_;
    std::vector<ArrowData> arrows_;
    std::vector<int> identity_;
    std::map<std::pair<int, int>, int> compose_;
  };

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::string& object_name(int c) const { return objects_[c]; }
  const ArrowData& arrow(int f) const { return arrows_[f]; }
  int identity(int c) const { return identity_[c]; }
  bool is_identity(int f) const { return identity_[arrows_[f].src] == f; }
  int compose(int after, int before) const;  // after o before

  // Arrows with target c, in ascending global order; sieves are bitsets over
  // positions in this list.
  const std::vector<int>& arrows_into(int c) const { return into_[c]; }
  int local_index(int c, int arrow) const;

  int find_object(const std::string& name) const;  // -1 if absent
  int find_arrow(const std::string& name) const;

  static FinCategory discrete(std::size_t n);
  // One object; arrows = monoid elements. table[i][j] = i*j, index 0 = unit.
  static FinCategory from_monoid(const std::vector<std::vector<int>>& table,
                                 const std::vector<std::string>& names);
  // The monoid {1, e} with e*e = e.
  static FinCategory walking_idempotent();
  static FinCategory cyclic_group(std::size_t n);
  // Objects = poset elements, one arrow a -> b per a <= b.
  static FinCategory from_poset(const algebra::FinPoset& p);

 private:
  void verify() const;
  std::vector<std::string> objects_;
  std::vector<ArrowData> arrows_;
  std::vector<int> identity_;
  std::vector<std::map<int, int>> comp_;  // comp_[g][f] = g o f, keyed on composable f
  std::vector<std::vector<int>> into_;
};

// A sieve on `target`: a set of incoming arrows closed under precomposition,
// stored over arrows_into(target) positions.
struct Sieve {
  int target = -1;
  Bits members;

  bool contains_arrow(const FinCategory& c, int arrow) const;
  friend bool operator==(const Sieve&, const Sieve&) = default;
  friend auto operator<=>(const Sieve&, const Sieve&) = default;
};

bool is_sieve(const FinCategory& c, const Sieve& s);
Sieve maximal_sieve(const FinCategory& c, int target);
Sieve empty_sieve(const FinCategory& c, int target);
// Least sieve containing the given arrows.
Sieve generated_sieve(const FinCategory& c, int target, const std::vector<int>& arrows);
// f*(S) for f : d -> c and S on c: the arrows g into d with f o g in S.
Sieve pullback_sieve(const FinCategory& c, int f, const Sieve& s);
// Density: every arrow into the target factors into the sieve.
bool is_dense(const FinCategory& c, const Sieve& s);
std::string to_text(const FinCategory& c, const Sieve& s);

// Grothendieck topology with explicitly materialized covering families.
// Construction verifies maximality, pullback stability and transitivity
// exhaustively over all sieves, which bounds usable in-degrees (guard).
class Topology {
 public:
  Topology() = default;
  static Topology from_predicate(const FinCategory& c,
                                 const std::function<bool(const Sieve&)>& covers,
                                 std::size_t max_sieves_per_object = 1u << 20);

  bool covers(const Sieve& s) const;
  const std::vector<Sieve>& covering(int c) const { return covering_[c]; }

 private:
  void verify(const FinCategory& c) const;
  const FinCategory* cat_ = nullptr;
  std::vector<std::vector<Sieve>> covering_;
};

// S covers iff every arrow admits a further arrow landing in S.
Topology negneg_topology(const FinCategory& c);
// Sieve covers an object iff the join of its members equals the object.
// `c` must be from_poset(l.poset()).
Topology jkappa_topology(const FinCategory& c, const algebra::FinHeyting& l);
// Only maximal sieves cover.
Topology trivial_topology(const FinCategory& c);

// ---- presheaves ----

struct Presheaf {
  const FinCategory* cat = nullptr;
  std::vector<std::vector<std::string>> elems;  // element names per object
  std::vector<std::vector<int>> action;         // per arrow f: d->c, X(c) -> X(d)

  std::size_t carrier(int c) const { return elems[c].size(); }
  std::size_t total_elements() const;
  int act(int arrow, int elem) const { return action[arrow][elem]; }
  void validate() const;  // identity and (contravariant) composition laws

  static Presheaf representable(const FinCategory& c, int obj);
  static Presheaf terminal(const FinCategory& c);
  static Presheaf empty(const FinCategory& c);
  static Presheaf constant(const FinCategory& c, std::size_t k);  // k points, trivial action
};

bool isomorphic(const Presheaf& x, const Presheaf& y);

struct Subpresheaf {
  const Presheaf* parent = nullptr;
  std::vector<Bits> sets;

  bool contains(int obj, int elem) const { return sets[obj].test(elem); }
  bool le(const Subpresheaf& other) const;
  void validate() const;  // closed under the parent's actions

  static Subpresheaf full(const Presheaf& x);
  static Subpresheaf none(const Presheaf& x);

  friend bool operator==(const Subpresheaf& a, const Subpresheaf& b) {
    return a.parent == b.parent && a.sets == b.sets;
  }
};

Subpresheaf intersect(const Subpresheaf& a, const Subpresheaf& b);
Subpresheaf unite(const Subpresheaf& a, const Subpresheaf& b);
// (A => B)(c) = { x : every restriction of x landing in A lands in B }
Subpresheaf heyting_implication(const Subpresheaf& a, const Subpresheaf& b);

struct NatTrans {
  const Presheaf* src = nullptr;
  const Presheaf* dst = nullptr;
  std::vector<std::vector<int>> component;  // per object

  void validate() const;  // naturality squares

  static NatTrans identity(const Presheaf& x);
};

// All natural transformations x -> y (small instances; guarded).
std::vector<NatTrans> enumerate_nat_trans(const Presheaf& x, const Presheaf& y,
                                          std::uint64_t guard = 1'000'000);

Subpresheaf pullback(const NatTrans& h, const Subpresheaf& b);      // h^*(B)
Subpresheaf exists_along(const NatTrans& h, const Subpresheaf& a);  // pointwise image
Subpresheaf forall_along(const NatTrans& h, const Subpresheaf& a);

// Product presheaf with tuple bookkeeping (used for predicate semantics).
// Indices are row-major: the last factor varies fastest.
struct ProductPresheaf {
  Presheaf presheaf;
  std::vector<const Presheaf*> factors;

  std::size_t rank() const { return factors.size(); }
  int encode(int c, const std::vector<int>& tuple) const;
  std::vector<int> decode(int c, int idx) const;
  NatTrans projection(std::size_t k) const;
};

ProductPresheaf product(const FinCategory& c, const std::vector<const Presheaf*>& factors);

// ---- subobject lattices and sheaf machinery ----

struct SubobjectLattice {
  algebra::FinHeyting algebra;        // verified Heyting structure
  std::vector<Subpresheaf> elements;  // index-aligned with algebra elements

  int index_of(const Subpresheaf& s) const;
};

// All subpresheaves of x ordered by inclusion; meet/join are pointwise,
// implication is the Kripke-Joyal formula. Guarded by subobject count.
SubobjectLattice subobject_lattice(const Presheaf& x, std::size_t guard = 1'000'000);

// Least closed sieve containing s: iterate S -> { f : f*(S) covers }.
Sieve close_sieve(const FinCategory& c, const Topology& j, const Sieve& s);

struct ClosedSieveLattice {
  algebra::FinHeyting algebra;
  std::vector<Sieve> sieves;  // index-aligned

  int index_of(const Sieve& s) const;
};

// The lattice of J-closed sieves on c: Sub_Sh(y(c)).
ClosedSieveLattice closed_sieves(const FinCategory& cat, const Topology& j, int c);

// Checks that a |-> closure of the principal sieve on a embeds each slice of
// l into the closed-sieve lattice, preserving meet, join and implication.
struct YonedaReport {
  bool preserved = true;
  std::string first_violation;
};
YonedaReport yoneda_check(const algebra::FinHeyting& l);

// Pointwise Booleanness of the closed-sieve lattices (the subobject
// classifier of the sheaf topos).
bool is_boolean_site(const FinCategory& cat, const Topology& j);

// ---- double-negation sheafification ----

struct Sheafification {
  Presheaf sheaf;
  std::vector<std::vector<int>> unit;  // per object, X(c) -> sheaf(c)
};

// Two applications of the plus construction over J. The result is verified
// to satisfy the sheaf condition for every covering sieve.
Sheafification sheafify(const FinCategory& cat, const Topology& j, const Presheaf& x,
                        std::size_t guard = 1'000'000);

// Sheafification at the double-negation topology of the category.
Sheafification sheafify_negneg(const FinCategory& cat, const Presheaf& x,
                               std::size_t guard = 1'000'000);

// ---- Boolean core and two-valuedness ----

struct BooleanCoreResult {
  std::vector<int> core;  // objects of the largest open Boolean piece
  // per object: true iff the only dense sieve on it is maximal
  std::vector<bool> dense_trivial;
};

BooleanCoreResult boolean_core(const FinCategory& cat);

bool is_two_valued(const FinCategory& cat);

}  // namespace toposcope::fincat
