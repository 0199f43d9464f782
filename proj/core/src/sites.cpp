#include "toposcope/sites.hpp"

#include <algorithm>

namespace toposcope::sites {

using syntax::Formula;
using syntax::Sequent;
using syntax::Theory;

bool SyntacticSite::has_object(int e) const {
  return std::binary_search(objects.begin(), objects.end(), e);
}

int SyntacticSite::label(const Formula& f) const {
  if (flag == SiteFlag::Classical) {
    int mask = 0;
    for (std::size_t i = 0; i < models.size(); ++i)
      if (algebra::eval_classical(f, atoms, models[i])) mask |= 1 << i;
    return mask;  // boolean_powerset element indices are model-set masks
  }
  if (syntax::classify_fragment(f) != syntax::FragmentTag::Geometric)
    throw WellFormednessError("geometric site cannot label a non-geometric formula");
  std::uint32_t col = 0;
  for (std::size_t i = 0; i < models.size(); ++i)
    if (algebra::eval_classical(f, atoms, models[i])) col |= 1u << i;
  auto it = std::find(columns.begin(), columns.end(), col);
  if (it == columns.end())
    throw AlgebraError("formula's column escaped the geometric Lindenbaum lattice");
  return static_cast<int>(it - columns.begin());
}

bool SyntacticSite::sequent_valid(const Sequent& s) const {
  return algebra.le(label(*s.lhs), label(*s.rhs));
}

SyntacticSite build_boolean_site(const Theory& t, std::size_t max_models) {
  auto lb = algebra::lindenbaum_boolean(t, max_models);
  SyntacticSite site;
  site.flag = SiteFlag::Classical;
  site.algebra = std::move(lb.algebra);
  site.atoms = std::move(lb.atoms);
  site.models = std::move(lb.models);
  for (std::size_t i = 0; i < site.algebra.size(); ++i)
    site.objects.push_back(static_cast<int>(i));
  return site;
}

SyntacticSite build_geometric_site(const Theory& t) {
  auto lg = algebra::lindenbaum_geometric(t);
  SyntacticSite site;
  site.flag = SiteFlag::Geometric;
  site.algebra = std::move(lg.lattice);
  site.atoms = std::move(lg.atoms);
  site.models = std::move(lg.models);
  site.columns = std::move(lg.columns);
  for (std::size_t i = 0; i < site.algebra.size(); ++i)
    site.objects.push_back(static_cast<int>(i));
  return site;
}

SyntacticSite syncons(const SyntacticSite& site) {
  if (site.algebra.size() <= 1) throw Error("theory inconsistent, SynCons empty");
  SyntacticSite out = site;
  out.is_syncons = true;
  out.objects.clear();
  for (std::size_t i = 0; i < site.algebra.size(); ++i)
    if (static_cast<int>(i) != site.algebra.bot()) out.objects.push_back(static_cast<int>(i));
  return out;
}

// ---- covering predicates ----

bool kappa_covers(const SyntacticSite& site, const SiteSieve& s) {
  int join = site.algebra.bot();
  for (int e : s.elements) join = site.algebra.join(join, e);
  return join == s.object;
}

bool dense_covers(const SyntacticSite& site, const SiteSieve& s) {
  for (int b : site.objects) {
    if (!site.algebra.le(b, s.object)) continue;
    bool met = false;
    for (int c : s.elements)
      if (site.algebra.le(c, b)) {
        met = true;
        break;
      }
    if (!met) return false;
  }
  return true;
}

// ---- topology comparison ----

namespace {

std::vector<int> slice(const SyntacticSite& site, int a) {
  std::vector<int> out;
  for (int b : site.objects)
    if (site.algebra.le(b, a)) out.push_back(b);
  return out;
}

}  // namespace

const char* comparison_name(TopologyComparison c) {
  switch (c) {
    case TopologyComparison::Equal: return "equal";
    case TopologyComparison::KappaStrictlyInsideNegNeg: return "J_kappa strictly inside J_negneg";
    case TopologyComparison::NegNegStrictlyInsideKappa: return "J_negneg strictly inside J_kappa";
    case TopologyComparison::Incomparable: return "incomparable";
  }
  return "?";
}

ComparisonResult compare_topologies(const SyntacticSite& site) {
  const auto& alg = site.algebra;
  ComparisonResult result;

  for (int a : site.objects) {
    std::vector<int> down = slice(site, a);

    // Jk <= Jnn: the largest sieve avoiding the slice below b joins short of
    // a for every b; otherwise it is a covering, non-dense witness.
    if (!result.kappa_not_dense) {
      for (int b : down) {
        SiteSieve avoid{a, {}};
        for (int c : down) {
          bool meets_b = false;
          for (int d : site.objects)
            if (alg.le(d, c) && alg.le(d, b)) {
              meets_b = true;
              break;
            }
          if (!meets_b) avoid.elements.push_back(c);
        }
        if (kappa_covers(site, avoid)) {
          result.kappa_not_dense = ComparisonWitness{
              a, avoid,
              "J_kappa-covering sieve with no element below e" + std::to_string(b)};
          break;
        }
      }
    }

    // Jnn <= Jk: the least dense sieve is the set of minimal slice elements.
    if (!result.dense_not_kappa) {
      SiteSieve minimal{a, {}};
      for (int c : down) {
        bool is_min = true;
        for (int d : down)
          if (d != c && alg.le(d, c)) {
            is_min = false;
            break;
          }
        if (is_min) minimal.elements.push_back(c);
      }
      if (!kappa_covers(site, minimal)) {
        result.dense_not_kappa =
            ComparisonWitness{a, minimal, "dense sieve whose join falls short of the object"};
      }
    }
  }

  bool kappa_in_nn = !result.kappa_not_dense.has_value();
  bool nn_in_kappa = !result.dense_not_kappa.has_value();
  if (kappa_in_nn && nn_in_kappa) result.verdict = TopologyComparison::Equal;
  else if (kappa_in_nn) result.verdict = TopologyComparison::KappaStrictlyInsideNegNeg;
  else if (nn_in_kappa) result.verdict = TopologyComparison::NegNegStrictlyInsideKappa;
  else result.verdict = TopologyComparison::Incomparable;
  return result;
}

// ---- closed sieves ----

SiteClosedSieves closed_sieve_lattice(const SyntacticSite& site, int object) {
  if (!site.has_object(object)) throw WellFormednessError("object is not in the site");
  const auto& alg = site.algebra;

  // Distributivity (verified at algebra construction) makes every closed
  // sieve a slice: closure(S) = { c : join(S /\ slice(c)) = c } = slice(join S).
  SiteClosedSieves out;
  for (std::size_t b = 0; b < alg.size(); ++b) {
    if (!alg.le(static_cast<int>(b), object)) continue;
    SiteSieve s{object, {}};
    for (int c : site.objects)
      if (alg.le(c, static_cast<int>(b))) s.elements.push_back(c);
    // verify closedness: membership iff the pullback covers
    for (int c : site.objects) {
      if (!alg.le(c, object)) continue;
      int join = alg.bot();
      for (int e : s.elements)
        if (alg.le(e, c)) join = alg.join(join, alg.meet(e, c));
      bool pullback_covers = join == c;
      bool member = std::binary_search(s.elements.begin(), s.elements.end(), c);
      if (pullback_covers != member)
        throw AlgebraError("candidate closed sieve fails the closedness check");
    }
    out.sieves.push_back(std::move(s));
  }

  out.algebra = algebra::FinHeyting::from_poset(algebra::FinPoset(
      out.sieves.size(), [&](int x, int y) {
        return std::includes(out.sieves[y].elements.begin(), out.sieves[y].elements.end(),
                             out.sieves[x].elements.begin(), out.sieves[x].elements.end());
      }));
  return out;
}

bool is_boolean_site(const SyntacticSite& site) {
  for (int a : site.objects)
    if (!closed_sieve_lattice(site, a).algebra.is_boolean()) return false;
  return true;
}

fincat::FinCategory site_category(const SyntacticSite& site, std::size_t max_objects) {
  if (site.objects.size() > max_objects)
    throw ResourceError("site too large to export as an explicit category");
  const auto& alg = site.algebra;
  const auto& objs = site.objects;
  return fincat::FinCategory::from_poset(algebra::FinPoset(
      objs.size(), [&](int a, int b) { return alg.le(objs[a], objs[b]); }));
}

// ---- T^sfo ----

TsfoResult tsfo_sequents(const algebra::FinHeyting& h) {
  TsfoResult out;
  out.rendered.fragment = syntax::FragmentTag::SubFirstOrder;
  for (std::size_t i = 0; i < h.size(); ++i)
    out.rendered.signature.add_atom("e" + std::to_string(i));

  auto atom_of = [&](int e) { return syntax::atom("e" + std::to_string(e)); };

  for (std::size_t a = 0; a < h.size(); ++a) {
    for (std::size_t b1 = 0; b1 < h.size(); ++b1) {
      if (!h.le(static_cast<int>(b1), static_cast<int>(a))) continue;
      for (std::size_t b2 = 0; b2 < h.size(); ++b2) {
        if (!h.le(static_cast<int>(b2), static_cast<int>(a))) continue;
        TsfoSequent s;
        s.object = static_cast<int>(a);
        s.left = static_cast<int>(b1);
        s.right = static_cast<int>(b2);
        int join_k = h.bot();
        for (std::size_t b = 0; b < h.size(); ++b) {
          if (!h.le(static_cast<int>(b), static_cast<int>(a))) continue;
          if (h.meet(static_cast<int>(b), s.left) == h.meet(static_cast<int>(b), s.right))
            join_k = h.join(join_k, static_cast<int>(b));
        }
        s.lhs = join_k;
        s.rhs = h.meet(h.meet(h.imp(s.left, s.right), h.imp(s.right, s.left)),
                       static_cast<int>(a));
        s.valid = s.lhs == s.rhs;
        out.all_valid = out.all_valid && s.valid;

        // rendered double sequent over element labels, relative to the object
        auto iff = syntax::conj({syntax::implies(atom_of(s.left), atom_of(s.right)),
                                 syntax::implies(atom_of(s.right), atom_of(s.left))});
        auto rhs_formula = syntax::conj({iff, atom_of(s.object)});
        out.rendered.axioms.push_back({{}, atom_of(s.lhs), rhs_formula});
        out.rendered.axioms.push_back({{}, rhs_formula, atom_of(s.lhs)});
        out.sequents.push_back(s);
      }
    }
  }
  return out;
}

}  // namespace toposcope::sites
