#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "toposcope/bits.hpp"
#include "toposcope/errors.hpp"

namespace toposcope::algebra {

// Finite poset with the order stored as explicit rows; reflexivity,
// transitivity and antisymmetry are verified on construction.
class FinPoset {
 public:
  FinPoset() = default;
  // le(a, b) decides a <= b.
  FinPoset(std::size_t n, const std::function<bool(int, int)>& le);

  std::size_t size() const { return below_.size(); }
  bool le(int a, int b) const { return below_[b].test(static_cast<std::size_t>(a)); }
  // {x : x <= a}
  const Bits& below(int a) const { return below_[a]; }
  // {x : a <= x}
  const Bits& above(int a) const { return above_[a]; }

  std::vector<int> minimal_elements() const;
  bool is_downward_closed(const Bits& s) const;

 private:
  void verify() const;
  std::vector<Bits> below_;
  std::vector<Bits> above_;
};

// Finite Heyting algebra: bounded lattice tables plus a residuated
// implication. Construction computes the tables from the order and verifies
// the lattice laws and the residuation law a /\ b <= c iff a <= b -> c on
// all triples; failure throws AlgebraError. Every instance is distributive
// (residuation forces it).
class FinHeyting {
 public:
  FinHeyting() = default;
  static FinHeyting from_poset(const FinPoset& p);
  static FinHeyting chain(std::size_t n);
  // Powerset of {0..k-1}; element index is the subset mask.
  static FinHeyting boolean_powerset(std::size_t k);
  // Free Boolean algebra on `atoms` generators: 2^(2^atoms) elements,
  // indexed by truth-function masks over the 2^atoms valuations.
  static FinHeyting free_boolean(std::size_t atoms);
  // Algebra of downsets of p, ordered by inclusion.
  static FinHeyting downsets(const FinPoset& p);

  std::size_t size() const { return poset_.size(); }
  const FinPoset& poset() const { return poset_; }
  bool le(int a, int b) const { return poset_.le(a, b); }
  int meet(int a, int b) const { return meet_[idx(a, b)]; }
  int join(int a, int b) const { return join_[idx(a, b)]; }
  int imp(int a, int b) const { return imp_[idx(a, b)]; }
  int neg(int a) const { return imp(a, bot_); }
  int bot() const { return bot_; }
  int top() const { return top_; }

  int join_all(const std::vector<int>& xs) const;  // empty join = bot
  int meet_all(const std::vector<int>& xs) const;  // empty meet = top

  bool is_boolean() const;
  // Elements with exactly one lower cover.
  std::vector<int> join_irreducibles() const;

  // Generator elements for the free Boolean constructions; empty otherwise.
  const std::vector<int>& generators() const { return generators_; }
  // Optional display names, one per element (may be empty).
  std::vector<std::string> labels;
  std::string label(int a) const;

  // Structural isomorphism test (bounded-lattice + implication).
  bool isomorphic_to(const FinHeyting& other) const;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * size() + b; }
  void verify_laws() const;

  FinPoset poset_;
  std::vector<std::uint16_t> meet_, join_, imp_;
  int bot_ = 0, top_ = 0;
  std::vector<int> generators_;
};

// A {0,1,/\,\/}-preserving map; the propositional shadow of a geometric
// functor. validate() throws if preservation fails.
struct LatticeHom {
  const FinHeyting* source = nullptr;
  const FinHeyting* target = nullptr;
  std::vector<int> map;

  int operator()(int a) const { return map[a]; }
  void validate() const;
};

// All {0,1,/\,\/}-homs from a to b, enumerated over join-irreducible
// assignments with monotonicity pruning. Throws ResourceError when the
// candidate space exceeds `guard`.
std::vector<LatticeHom> enumerate_homs(const FinHeyting& a, const FinHeyting& b,
                                       std::uint64_t guard = 10'000'000);

struct PreservationVerdict {
  bool preserved = true;
  std::optional<std::pair<int, int>> violation;  // first (a, b) with h(a->b) != h(a)->h(b)
  std::string detail;
};

// Checks h(a -> b) = h(a) -> h(b) (negation is the b = 0 column). The source
// being Boolean forces "preserved".
PreservationVerdict check_heyting_preservation(const LatticeHom& h);

// All Heyting algebras with at most max_size elements, up to isomorphism,
// in a deterministic order. max_size <= 8.
const std::vector<FinHeyting>& heyting_catalogue(std::size_t max_size);

}  // namespace toposcope::algebra
