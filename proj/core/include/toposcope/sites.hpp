#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toposcope/decide.hpp"
#include "toposcope/fincat.hpp"
#include "toposcope/syntax.hpp"

namespace toposcope::sites {

enum class SiteFlag { Classical, Geometric };

// Propositional syntactic site: a Lindenbaum algebra viewed as a poset
// category carrying the covering topology, together with the labeling that
// sends a formula to its equivalence class (the universal-model shadow).
// SynCons sites drop the bottom element but keep the ambient algebra for
// join computations.
struct SyntacticSite {
  SiteFlag flag = SiteFlag::Classical;
  algebra::FinHeyting algebra;
  std::vector<int> objects;  // ascending element indices present in the site
  bool is_syncons = false;

  std::vector<std::string> atoms;
  std::vector<std::uint32_t> models;
  std::vector<std::uint32_t> columns;  // geometric labeling: element -> column

  bool has_object(int e) const;
  // Equivalence class of f (an algebra element; for SynCons sites the class
  // of an inconsistent formula is the removed bottom).
  int label(const syntax::Formula& f) const;
  // Validity under the universal-model labeling.
  bool sequent_valid(const syntax::Sequent& s) const;
};

SyntacticSite build_boolean_site(const syntax::Theory& t, std::size_t max_models = 8);
SyntacticSite build_geometric_site(const syntax::Theory& t);

// The full sub-poset with the bottom class removed, carrying the induced
// covering topology. Throws Error("theory inconsistent, SynCons empty") on
// the degenerate 1-element algebra.
SyntacticSite syncons(const SyntacticSite& site);

// A sieve on an object: the set of site elements below it, downward closed
// within the site.
struct SiteSieve {
  int object = -1;
  std::vector<int> elements;  // ascending
};

// J_kappa membership: the join of the members equals the object.
bool kappa_covers(const SyntacticSite& site, const SiteSieve& s);
// Double-negation density within the site's object poset.
bool dense_covers(const SyntacticSite& site, const SiteSieve& s);

enum class TopologyComparison { Equal, KappaStrictlyInsideNegNeg, NegNegStrictlyInsideKappa, Incomparable };

const char* comparison_name(TopologyComparison c);

struct ComparisonWitness {
  int object = -1;
  SiteSieve sieve;
  std::string note;
};

struct ComparisonResult {
  TopologyComparison verdict = TopologyComparison::Equal;
  // A J_kappa-covering sieve that is not dense, if any (breaks Jk <= Jnn).
  std::optional<ComparisonWitness> kappa_not_dense;
  // A dense sieve that does not J_kappa-cover, if any (breaks Jnn <= Jk).
  std::optional<ComparisonWitness> dense_not_kappa;
};

// Exhaustive per-object comparison of the two covering-sieve families. Each
// direction is decided by its extremal witness sieve: the largest sieve
// avoiding a slice (for J_kappa-covers that miss density) and the least dense
// sieve (the minimal elements) for the converse; every covering family is a
// filter over these, so the comparison is exact.
ComparisonResult compare_topologies(const SyntacticSite& site);

// The lattice of J_kappa-closed sieves on an object: Sub_Sh(y(a)). On a
// distributive site the closed sieves are exactly the slices below algebra
// elements; each candidate is verified closed.
struct SiteClosedSieves {
  algebra::FinHeyting algebra;
  std::vector<SiteSieve> sieves;
};

SiteClosedSieves closed_sieve_lattice(const SyntacticSite& site, int object);

bool is_boolean_site(const SyntacticSite& site);

// Export the site's object poset as an explicit finite category (small sites).
fincat::FinCategory site_category(const SyntacticSite& site, std::size_t max_objects = 64);

// ---- the T^sfo double-sequent generator ----

struct TsfoSequent {
  int object;        // a
  int left, right;   // join of S1, join of S2 (closed sieves are slices)
  int lhs;           // join of K = { b <= a : b /\ left = b /\ right }
  int rhs;           // (left <-> right) computed inside the slice below a
  bool valid;        // lhs == rhs in the algebra
};

struct TsfoResult {
  std::vector<TsfoSequent> sequents;
  bool all_valid = true;
  // Printable rendering over element labels e<i>.
  syntax::Theory rendered;
};

// For every object a and pair of closed sieves on a, the double sequent
// \/K -||- (\/S1 <-> \/S2), checked for validity in the algebra itself.
TsfoResult tsfo_sequents(const algebra::FinHeyting& h);

}  // namespace toposcope::sites
