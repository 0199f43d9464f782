#include "toposcope/commands.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "toposcope/decide.hpp"
#include "toposcope/parse.hpp"
#include "toposcope/semantics.hpp"
#include "toposcope/sites.hpp"
#include "toposcope/transforms.hpp"

namespace toposcope::cli {

using syntax::FormulaPtr;
using syntax::Sequent;
using syntax::Theory;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string fragment_text(syntax::FragmentTag t) { return syntax::fragment_name(t); }

std::string sieve_text(const sites::SiteSieve& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.elements.size(); ++i)
    out += (i ? ", e" : "e") + std::to_string(s.elements[i]);
  return out + "}";
}

std::string table_text(const algebra::FinHeyting& h,
                       const std::function<int(int, int)>& op) {
  std::string out;
  for (std::size_t a = 0; a < h.size(); ++a) {
    if (a) out += " ";
    for (std::size_t b = 0; b < h.size(); ++b) {
      if (b) out += ",";
      out += std::to_string(op(static_cast<int>(a), static_cast<int>(b)));
    }
  }
  return out;
}

void algebra_records(Report& report, const std::string& prefix,
                     const algebra::FinHeyting& h) {
  report.add(prefix + ".size", "pass", std::to_string(h.size()));
  report.add(prefix + ".order", "pass",
             table_text(h, [&](int a, int b) { return h.le(a, b) ? 1 : 0; }));
  report.add(prefix + ".meet", "pass", table_text(h, [&](int a, int b) { return h.meet(a, b); }));
  report.add(prefix + ".join", "pass", table_text(h, [&](int a, int b) { return h.join(a, b); }));
  report.add(prefix + ".imp", "pass", table_text(h, [&](int a, int b) { return h.imp(a, b); }));
}

}  // namespace

const std::vector<std::string>& acceptance_pool() {
  static const std::vector<std::string> pool = {
      "p",
      "q",
      "r",
      "p -> q",
      "q -> r",
      "r -> p",
      "p \\/ q",
      "p \\/ ~p",
      "p /\\ q -> r",
      "~~p",
      "p /\\ q",
      "q \\/ (r -> p)",
  };
  return pool;
}

std::vector<Theory> acceptance_theories(std::size_t max_axioms) {
  const auto& pool = acceptance_pool();
  syntax::Signature sig;
  sig.add_atom("p");
  sig.add_atom("q");
  sig.add_atom("r");

  std::vector<FormulaPtr> formulas;
  for (const auto& text : pool) formulas.push_back(parse_formula(text, sig));

  std::vector<Theory> out;
  std::vector<std::size_t> picks;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    Theory t;
    t.signature = sig;
    for (auto i : picks) t.axioms.push_back({{}, syntax::truth(), formulas[i]});
    t.fragment = t.computed_fragment();
    out.push_back(std::move(t));
    if (picks.size() == max_axioms) return;
    for (std::size_t i = start; i < formulas.size(); ++i) {
      picks.push_back(i);
      rec(i + 1);
      picks.pop_back();
    }
  };
  rec(0);
  return out;
}

// ---- subcommands ----

namespace {

Report cmd_classify(const std::vector<std::string>& files) {
  Theory t = parse_theory(slurp(files.at(0)));
  Report report;
  for (std::size_t i = 0; i < t.axioms.size(); ++i) {
    auto frag = std::max(syntax::classify_fragment(*t.axioms[i].lhs),
                         syntax::classify_fragment(*t.axioms[i].rhs));
    report.add("classify.axiom" + std::to_string(i), "pass",
               syntax::to_text(t.axioms[i]) + " : " + fragment_text(frag));
  }
  report.add("classify.theory", "pass", fragment_text(t.computed_fragment()));
  return report;
}

Report cmd_check_proof(const std::vector<std::string>& files, const Options& opt) {
  Theory t = parse_theory(slurp(files.at(0)));
  kernel::ProofTree proof = parse_proof(slurp(files.at(1)), t);
  auto verdict = kernel::check_proof(proof, opt.system, t);
  Report report;
  report.add("check-proof", verdict.accepted() ? "pass" : "fail", kernel::to_text(verdict));
  return report;
}

Report cmd_translate(const std::vector<std::string>& files) {
  Theory t = parse_theory(slurp(files.at(0)));
  Report report;
  for (std::size_t i = 0; i < t.axioms.size(); ++i) {
    Sequent translated = transforms::classicalize(t.axioms[i]);
    auto frag = std::max(syntax::classify_fragment(*translated.lhs),
                         syntax::classify_fragment(*translated.rhs));
    bool ok = frag <= syntax::FragmentTag::SubFirstOrder;
    report.add("translate.axiom" + std::to_string(i), ok ? "pass" : "fail",
               syntax::to_text(translated));
  }
  return report;
}

Report cmd_morleyize(const std::vector<std::string>& files) {
  Theory t = parse_theory(slurp(files.at(0)));
  auto result = transforms::morleyize(t);
  Report report;
  report.add("morleyize.relations", "pass", std::to_string(result.names.size()));
  for (const auto& [rel, formula, comp] : result.names)
    report.add("morleyize.name." + rel, "pass",
               rel + " ~ " + syntax::to_text(*formula) + " (complement " + comp + ")");
  for (std::size_t i = 0; i < result.theory.axioms.size(); ++i)
    report.add("morleyize.axiom" + std::to_string(i), "pass",
               syntax::to_text(result.theory.axioms[i]));
  return report;
}

Report cmd_lindenbaum(const std::vector<std::string>& files, const Options& opt) {
  Theory t = parse_theory(slurp(files.at(0)));
  Report report;
  if (opt.system == kernel::SystemTag::Classical) {
    auto lb = algebra::lindenbaum_boolean(t);
    algebra_records(report, "lindenbaum.boolean", lb.algebra);
  } else if (opt.system == kernel::SystemTag::Geometric) {
    auto lg = algebra::lindenbaum_geometric(t);
    algebra_records(report, "lindenbaum.geometric", lg.lattice);
  } else {
    std::vector<FormulaPtr> seeds;
    for (const auto& a : t.signature.atom_names()) seeds.push_back(syntax::atom(a));
    auto hc = algebra::lindenbaum_heyting_bounded(t, seeds, opt.depth, opt.kripke_bound);
    report.add("lindenbaum.heyting.classes", "pass", std::to_string(hc.reps.size()));
    for (std::size_t i = 0; i < hc.reps.size(); ++i)
      report.add("lindenbaum.heyting.class" + std::to_string(i), "pass",
                 syntax::to_text(*hc.reps[i]));
  }
  return report;
}

Report cmd_site(const std::vector<std::string>& files, const Options& opt) {
  Theory t = parse_theory(slurp(files.at(0)));
  Report report;
  sites::SyntacticSite site = opt.system == kernel::SystemTag::Geometric
                                  ? sites::build_geometric_site(t)
                                  : sites::build_boolean_site(t);
  if (!opt.full_site && opt.system != kernel::SystemTag::Geometric)
    site = sites::syncons(site);
  report.add("site.objects", "pass", std::to_string(site.objects.size()));
  report.add("site.flag", "pass",
             site.flag == sites::SiteFlag::Classical ? "classical" : "geometric");
  report.add("site.models", "pass", std::to_string(site.models.size()));
  if (!opt.export_path.empty()) {
    auto cat = sites::site_category(site);
    std::ofstream out(opt.export_path);
    out << print_category(cat);
    report.add("site.export", "pass", opt.export_path);
  }
  return report;
}

Report cmd_compare_topologies(const std::vector<std::string>& files, const Options& opt) {
  Theory t = parse_theory(slurp(files.at(0)));
  Report report;
  sites::SyntacticSite site = sites::build_boolean_site(t);
  if (!opt.full_site) site = sites::syncons(site);
  auto result = sites::compare_topologies(site);
  for (int a : site.objects) {
    // per-object covering-sieve counts for the report
    std::size_t kappa = 0, dense = 0;
    std::vector<int> down;
    for (int b : site.objects)
      if (site.algebra.le(b, a)) down.push_back(b);
    // count downsets of the slice that cover (exhaustive for small slices)
    if (down.size() <= 12) {
      for (std::uint32_t mask = 0; mask < (1u << down.size()); ++mask) {
        sites::SiteSieve s{a, {}};
        for (std::size_t i = 0; i < down.size(); ++i)
          if ((mask >> i) & 1) s.elements.push_back(down[i]);
        bool downset = true;
        for (int x : s.elements)
          for (int y : down)
            if (site.algebra.le(y, x) &&
                !std::binary_search(s.elements.begin(), s.elements.end(), y))
              downset = false;
        if (!downset) continue;
        if (sites::kappa_covers(site, s)) ++kappa;
        if (sites::dense_covers(site, s)) ++dense;
      }
      report.add("compare.object.e" + std::to_string(a), "pass",
                 "kappa-covering " + std::to_string(kappa) + ", dense " +
                     std::to_string(dense));
    }
  }
  std::string witness;
  if (result.kappa_not_dense)
    witness += " kappa-not-dense at e" + std::to_string(result.kappa_not_dense->object) +
               " sieve " + sieve_text(result.kappa_not_dense->sieve);
  if (result.dense_not_kappa)
    witness += " dense-not-kappa at e" + std::to_string(result.dense_not_kappa->object) +
               " sieve " + sieve_text(result.dense_not_kappa->sieve);
  report.add("compare.verdict", "pass", sites::comparison_name(result.verdict) + witness);
  return report;
}

Report cmd_tsfo(const std::vector<std::string>& files) {
  Report report;
  algebra::FinHeyting h;
  const std::string& source = files.at(0);
  if (source.rfind("@chain:", 0) == 0) {
    h = algebra::FinHeyting::chain(std::stoul(source.substr(7)));
  } else if (source.rfind("@boolean:", 0) == 0) {
    h = algebra::FinHeyting::boolean_powerset(std::stoul(source.substr(9)));
  } else {
    Theory t = parse_theory(slurp(source));
    h = algebra::lindenbaum_boolean(t).algebra;
  }
  auto result = sites::tsfo_sequents(h);
  for (std::size_t i = 0; i < result.sequents.size(); ++i) {
    const auto& s = result.sequents[i];
    report.add("tsfo.sequent" + std::to_string(i), s.valid ? "pass" : "fail",
               syntax::to_text(result.rendered.axioms[2 * i]) + " [object e" +
                   std::to_string(s.object) + "]");
  }
  report.add("tsfo.all_valid", result.all_valid ? "pass" : "fail",
             std::to_string(result.sequents.size()) + " double sequents");
  return report;
}

Report cmd_presheaf(const std::vector<std::string>& files, const Options& opt) {
  CategoryDocument doc = parse_category(slurp(files.at(0)));
  Report report;
  const auto& cat = *doc.category;
  report.add("presheaf.objects", "pass", std::to_string(cat.num_objects()));
  report.add("presheaf.arrows", "pass", std::to_string(cat.num_arrows()));
  report.add("presheaf.two_valued", "pass", fincat::is_two_valued(cat) ? "true" : "false");
  auto terminal = fincat::Presheaf::terminal(cat);
  auto sub_terminal = fincat::subobject_lattice(terminal, opt.guard);
  report.add("presheaf.subterminals", "pass", std::to_string(sub_terminal.algebra.size()));
  for (const auto& [name, p] : doc.presheaves) {
    auto sub = fincat::subobject_lattice(p, opt.guard);
    report.add("presheaf." + name + ".subobjects", "pass",
               std::to_string(sub.algebra.size()) +
                   (sub.algebra.is_boolean() ? " (boolean)" : " (not boolean)"));
    auto sheaf = fincat::sheafify_negneg(cat, p, opt.guard);
    std::string carriers;
    for (std::size_t o = 0; o < cat.num_objects(); ++o) {
      if (o) carriers += " ";
      carriers += std::to_string(sheaf.sheaf.carrier(static_cast<int>(o)));
    }
    report.add("presheaf." + name + ".negneg_sheafification", "pass",
               "carriers " + carriers);
  }
  return report;
}

Report cmd_boolean_core(const std::vector<std::string>& files) {
  CategoryDocument doc = parse_category(slurp(files.at(0)));
  Report report;
  auto result = fincat::boolean_core(*doc.category);
  std::string names = "{";
  for (std::size_t i = 0; i < result.core.size(); ++i)
    names += (i ? ", " : "") + doc.category->object_name(result.core[i]);
  names += "}";
  std::string witness = "U = " + names;
  if (result.core.empty()) witness += " (trivial)";
  report.add("boolean-core", "pass", witness);
  return report;
}

Report cmd_validate(const std::vector<std::string>& files) {
  Theory t = parse_theory(slurp(files.at(0)));
  StructureDocument doc = parse_structure(slurp(files.at(1)), t.signature);
  Report report;
  for (std::size_t i = 0; i < t.axioms.size(); ++i) {
    bool valid = doc.is_presheaf()
                     ? semantics::sequent_valid(*doc.presheaf, t.axioms[i])
                     : semantics::sequent_valid(doc.prop_structure(), t.axioms[i]);
    report.add("validate.axiom" + std::to_string(i), valid ? "pass" : "fail",
               syntax::to_text(t.axioms[i]));
  }
  return report;
}

Report cmd_soundness(const Options& opt) {
  Report report;
  std::vector<semantics::SoundnessTarget> targets;
  const auto& catalogue = algebra::heyting_catalogue(5);
  for (std::size_t i = 0; i < catalogue.size(); ++i) {
    if (catalogue[i].size() < 2) continue;
    targets.push_back({"heyting" + std::to_string(catalogue[i].size()) + "_" +
                           std::to_string(i),
                       &catalogue[i], nullptr});
  }
  auto monoid = fincat::FinCategory::walking_idempotent();
  auto discrete = fincat::FinCategory::discrete(2);
  targets.push_back({"presheaf_idempotent", nullptr, &monoid});
  targets.push_back({"presheaf_discrete2", nullptr, &discrete});
  for (const auto& rec : semantics::soundness_suite(opt.system, targets))
    report.add("soundness." + rec.rule + "." + rec.target, rec.status, rec.detail);
  return report;
}

}  // namespace

// ---- the acceptance suite ----

namespace {

void criterion(Report& report, const std::string& id, bool ok, const std::string& witness) {
  report.add(id, ok ? "pass" : "fail", witness);
}

// criteria 1-3: the theory family, SynCons topology equality, Booleanness,
// and the full-site counterexample boundary
void run_family_criteria(Report& report) {
  auto theories = acceptance_theories(3);
  std::size_t c1_fail = 0, c2_fail = 0, c3_fail = 0;
  std::string c1_witness, c2_witness, c3_witness;

  for (std::size_t ti = 0; ti < theories.size(); ++ti) {
    const Theory& t = theories[ti];
    sites::SyntacticSite full = sites::build_boolean_site(t);
    sites::SyntacticSite sc = sites::syncons(full);

    auto cmp = sites::compare_topologies(sc);
    if (cmp.verdict != sites::TopologyComparison::Equal) {
      ++c1_fail;
      if (c1_witness.empty())
        c1_witness = "theory " + std::to_string(ti) + ": " +
                     sites::comparison_name(cmp.verdict);
    }

    bool boolean = sites::is_boolean_site(sc);
    auto top_lattice = sites::closed_sieve_lattice(sc, sc.algebra.top());
    bool size_ok =
        top_lattice.algebra.size() == (std::size_t{1} << full.models.size());
    if (!boolean || !size_ok) {
      ++c2_fail;
      if (c2_witness.empty())
        c2_witness = "theory " + std::to_string(ti) + ": boolean=" +
                     (boolean ? "true" : "false") + " top-lattice=" +
                     std::to_string(top_lattice.algebra.size()) + " expected " +
                     std::to_string(std::size_t{1} << full.models.size());
    }

    auto cmp_full = sites::compare_topologies(full);
    bool boundary = cmp_full.verdict != sites::TopologyComparison::Equal &&
                    cmp_full.kappa_not_dense.has_value() &&
                    cmp_full.kappa_not_dense->object == full.algebra.bot() &&
                    cmp_full.kappa_not_dense->sieve.elements.empty();
    if (!boundary) {
      ++c3_fail;
      if (c3_witness.empty()) c3_witness = "theory " + std::to_string(ti);
    }
  }

  std::string family = std::to_string(theories.size()) + " theories";
  criterion(report, "c1.topology-equality", c1_fail == 0,
            c1_fail == 0 ? family : c1_witness);
  criterion(report, "c2.boolean-site", c2_fail == 0, c2_fail == 0 ? family : c2_witness);
  criterion(report, "c3.counterexample-boundary", c3_fail == 0,
            c3_fail == 0 ? family + ", empty sieve on bottom each time" : c3_witness);
}

std::vector<const algebra::FinHeyting*> boolean_catalogue_leq16(
    const algebra::FinHeyting& b16) {
  std::vector<const algebra::FinHeyting*> out;
  for (const auto& h : algebra::heyting_catalogue(6))
    if (h.size() >= 2 && h.is_boolean()) out.push_back(&h);
  out.push_back(&b16);
  return out;
}

void run_yoneda_criterion(Report& report) {
  std::size_t checked = 0, failed = 0;
  std::string witness;
  auto run = [&](const algebra::FinHeyting& h, const std::string& name) {
    ++checked;
    auto r = fincat::yoneda_check(h);
    if (!r.preserved) {
      ++failed;
      if (witness.empty()) witness = name + ": " + r.first_violation;
    }
  };
  const auto& catalogue = algebra::heyting_catalogue(6);
  for (std::size_t i = 0; i < catalogue.size(); ++i) {
    if (catalogue[i].size() < 2) continue;
    run(catalogue[i], "catalogue" + std::to_string(i));
  }
  run(algebra::FinHeyting::free_boolean(1), "free_boolean1");
  run(algebra::FinHeyting::free_boolean(2), "free_boolean2");
  criterion(report, "c4.yoneda-preservation", failed == 0,
            failed == 0 ? std::to_string(checked) + " algebras" : witness);
}

void run_hom_criterion(Report& report) {
  auto b16 = algebra::FinHeyting::free_boolean(2);
  auto sources = boolean_catalogue_leq16(b16);

  std::vector<const algebra::FinHeyting*> targets;
  for (const auto& h : algebra::heyting_catalogue(6))
    if (h.size() >= 2) targets.push_back(&h);
  targets.push_back(&b16);

  std::size_t homs = 0, violations = 0;
  std::string witness;
  for (const auto* src : sources) {
    for (const auto* tgt : targets) {
      for (const auto& hom : algebra::enumerate_homs(*src, *tgt)) {
        ++homs;
        auto v = algebra::check_heyting_preservation(hom);
        if (!v.preserved) {
          ++violations;
          if (witness.empty()) witness = v.detail;
        }
      }
    }
  }

  // the 3-chain witness must be flagged
  auto chain3 = algebra::FinHeyting::chain(3);
  auto b4 = algebra::FinHeyting::boolean_powerset(2);
  algebra::LatticeHom collapse{&chain3, &b4, {0, 0, 3}};
  auto flagged = algebra::check_heyting_preservation(collapse);

  bool ok = violations == 0 && !flagged.preserved && flagged.violation &&
            *flagged.violation == std::make_pair(1, 0);
  criterion(report, "c5.boolean-source-preservation", ok,
            ok ? std::to_string(homs) + " homs preserved; 3-chain witness flagged at (m, 0)"
               : (violations ? witness : "3-chain witness not flagged"));
}

void run_soundness_criterion(Report& report) {
  std::vector<semantics::SoundnessTarget> targets;
  const auto& catalogue = algebra::heyting_catalogue(5);
  for (std::size_t i = 0; i < catalogue.size(); ++i) {
    if (catalogue[i].size() < 2) continue;
    targets.push_back({"h" + std::to_string(i), &catalogue[i], nullptr});
  }
  auto monoid = fincat::FinCategory::walking_idempotent();
  auto discrete = fincat::FinCategory::discrete(2);
  targets.push_back({"idempotent", nullptr, &monoid});
  targets.push_back({"discrete2", nullptr, &discrete});

  std::size_t checks = 0, failures = 0, refusals = 0;
  std::string witness;
  for (auto sys : {kernel::SystemTag::Geometric, kernel::SystemTag::SubFirstOrder,
                   kernel::SystemTag::FirstOrder, kernel::SystemTag::Classical}) {
    for (const auto& rec : semantics::soundness_suite(sys, targets)) {
      ++checks;
      if (rec.status == "fail") {
        ++failures;
        if (witness.empty())
          witness = std::string(kernel::system_name(sys)) + "/" + rec.rule + "/" +
                    rec.target + ": " + rec.detail;
      }
      if (rec.status == "refused") ++refusals;
    }
  }
  criterion(report, "c6.soundness", failures == 0,
            failures == 0 ? std::to_string(checks) + " rule-target checks, " +
                                std::to_string(refusals) + " non-Boolean classical refusals"
                          : witness);
}

void run_monoid_criterion(Report& report) {
  auto monoid = fincat::FinCategory::walking_idempotent();
  bool two_valued = fincat::is_two_valued(monoid);

  auto rep = fincat::Presheaf::representable(monoid, 0);
  auto sub = fincat::subobject_lattice(rep);
  bool rep_chain3 = sub.algebra.size() == 3 && !sub.algebra.is_boolean() &&
                    sub.algebra.isomorphic_to(algebra::FinHeyting::chain(3));

  auto core = fincat::boolean_core(monoid);
  bool core_empty = core.core.empty();

  auto jnn = fincat::negneg_topology(monoid);
  auto closed = fincat::closed_sieves(monoid, jnn, 0);
  bool classifier_b2 = closed.algebra.size() == 2 && closed.algebra.is_boolean();

  auto sheaf = fincat::sheafify(monoid, jnn, rep);
  bool singleton = sheaf.sheaf.carrier(0) == 1;

  bool ok = two_valued && rep_chain3 && core_empty && classifier_b2 && singleton;
  std::string witness = std::string("two-valued=") + (two_valued ? "yes" : "no") +
                        ", Sub(y)=" + std::to_string(sub.algebra.size()) +
                        (sub.algebra.is_boolean() ? " boolean" : " non-boolean") +
                        ", core=" + std::to_string(core.core.size()) +
                        ", closed-sieves=" + std::to_string(closed.algebra.size()) +
                        ", sheafified-carrier=" + std::to_string(sheaf.sheaf.carrier(0));
  criterion(report, "c7.monoid-counterexample", ok, witness);
}

void run_lindenbaum_criterion(Report& report) {
  // independent oracles: count truth functions / monotone truth functions
  auto count_functions = [](std::size_t atoms) {
    std::size_t valuations = std::size_t{1} << atoms;
    std::size_t count = 0;
    for (std::uint32_t f = 0;; ++f) {
      ++count;
      if (f == (valuations == 32 ? ~0u : (1u << valuations) - 1)) break;
    }
    return count;
  };
  auto count_monotone = [](std::size_t atoms) {
    std::size_t valuations = std::size_t{1} << atoms;
    std::size_t count = 0;
    for (std::uint32_t f = 0; f < (1u << valuations); ++f) {
      bool monotone = true;
      for (std::uint32_t v = 0; v < valuations && monotone; ++v)
        for (std::uint32_t w = 0; w < valuations && monotone; ++w)
          if ((v & ~w) == 0 && ((f >> v) & 1) > ((f >> w) & 1)) monotone = false;
      if (monotone) ++count;
    }
    return count;
  };

  const std::size_t expected_boolean[] = {2, 4, 16};
  const std::size_t expected_geometric[] = {2, 3, 6, 20};
  bool ok = true;
  std::string witness;

  for (std::size_t n = 0; n <= 3; ++n) {
    Theory t;
    const char* names[] = {"p", "q", "r"};
    for (std::size_t i = 0; i < n; ++i) t.signature.add_atom(names[i]);
    if (n <= 2) {
      auto lb = algebra::lindenbaum_boolean(t);
      if (lb.algebra.size() != expected_boolean[n] ||
          lb.algebra.size() != count_functions(n)) {
        ok = false;
        witness = "boolean size mismatch at " + std::to_string(n) + " atoms";
      }
    }
    auto lg = algebra::lindenbaum_geometric(t);
    if (lg.lattice.size() != expected_geometric[n] ||
        lg.lattice.size() != count_monotone(n)) {
      ok = false;
      witness = "geometric size mismatch at " + std::to_string(n) + " atoms: got " +
                std::to_string(lg.lattice.size()) + ", brute force " +
                std::to_string(count_monotone(n));
    }
  }
  criterion(report, "c8.lindenbaum-cardinalities", ok,
            ok ? "boolean 2/4/16, geometric 2/3/6/20, both matching brute force" : witness);
}

void run_rieger_nishimura_criterion(Report& report) {
  Theory t;
  t.signature.add_atom("p");
  auto classes = algebra::lindenbaum_heyting_bounded(t, {syntax::atom("p")}, 4, 6, 64);

  bool enough = classes.reps.size() >= 10;
  bool certified = true;
  std::size_t max_worlds = 0;
  for (std::size_t i = 0; i < classes.reps.size() && certified; ++i)
    for (std::size_t j = 0; j < classes.reps.size() && certified; ++j) {
      if (i == j || classes.order.le(static_cast<int>(i), static_cast<int>(j))) continue;
      auto it = classes.refutations.find({static_cast<int>(i), static_cast<int>(j)});
      if (it == classes.refutations.end() || it->second.worlds > 6) certified = false;
      else max_worlds = std::max(max_worlds, it->second.worlds);
    }
  criterion(report, "c9.rieger-nishimura-growth", enough && certified,
            std::to_string(classes.reps.size()) +
                " pairwise-distinct classes, countermodels up to " +
                std::to_string(max_worlds) + " worlds");
}

void run_translation_criterion(Report& report) {
  auto corpus = semantics::formula_corpus({"p", "q", "r"}, 4, 500, 20240811,
                                          syntax::FragmentTag::FirstOrder);
  auto b16 = algebra::FinHeyting::free_boolean(2);
  std::vector<const algebra::FinHeyting*> booleans = boolean_catalogue_leq16(b16);

  std::size_t checks = 0;
  bool ok = corpus.size() == 500;
  std::string witness = ok ? "" : "corpus generation fell short";

  for (const auto& f : corpus) {
    auto translated = transforms::classicalize(*f);
    if (syntax::classify_fragment(*translated) > syntax::FragmentTag::SubFirstOrder) {
      ok = false;
      witness = "fragment violation: " + syntax::to_text(*translated);
      break;
    }
    // idempotence
    if (!(*transforms::classicalize(*translated) == *translated)) {
      ok = false;
      witness = "translation not idempotent: " + syntax::to_text(*f);
      break;
    }
    for (const auto* b : booleans) {
      const std::size_t n = b->size();
      for (std::size_t pa = 0; pa < n && ok; ++pa)
        for (std::size_t qa = 0; qa < n && ok; ++qa)
          for (std::size_t ra = 0; ra < n && ok; ++ra) {
            semantics::PropStructure m{b,
                                       {{"p", static_cast<int>(pa)},
                                        {"q", static_cast<int>(qa)},
                                        {"r", static_cast<int>(ra)}}};
            ++checks;
            if (semantics::interpret(m, *f) != semantics::interpret(m, *translated)) {
              ok = false;
              witness = "semantic mismatch: " + syntax::to_text(*f);
            }
          }
      if (!ok) break;
    }
    if (!ok) break;
  }
  criterion(report, "c10.classical-translation", ok,
            ok ? "500 formulas, " + std::to_string(checks) + " Boolean interpretations"
               : witness);
}

void run_tsfo_criterion(Report& report) {
  std::size_t sequents = 0;
  bool ok = true;
  std::string witness;
  for (const auto& h : algebra::heyting_catalogue(5)) {
    if (h.size() < 2) continue;
    auto result = sites::tsfo_sequents(h);
    sequents += result.sequents.size();
    if (!result.all_valid) {
      ok = false;
      witness = "invalid double sequent on a " + std::to_string(h.size()) +
                "-element algebra";
      break;
    }
  }
  criterion(report, "c11.tsfo-validity", ok,
            ok ? std::to_string(sequents) + " double sequents valid" : witness);
}

void run_universal_model_criterion(Report& report) {
  auto theories = acceptance_theories(3);
  auto corpus = semantics::sequent_corpus({"p", "q", "r"}, 3, 48, 20240812,
                                          syntax::FragmentTag::SubFirstOrder);
  auto geometric_corpus = semantics::sequent_corpus({"p", "q", "r"}, 3, 32, 20240813,
                                                    syntax::FragmentTag::Geometric);

  std::size_t checks = 0, disagreements = 0;
  std::string witness;
  for (std::size_t ti = 0; ti < theories.size(); ++ti) {
    const Theory& t = theories[ti];
    auto site = sites::build_boolean_site(t);
    for (const auto& s : corpus) {
      ++checks;
      if (site.sequent_valid(s) != algebra::decide_classical(t, s)) {
        ++disagreements;
        if (witness.empty())
          witness = "theory " + std::to_string(ti) + ", sequent " + syntax::to_text(s);
      }
    }
    if (t.computed_fragment() == syntax::FragmentTag::Geometric) {
      auto geo = sites::build_geometric_site(t);
      algebra::IntuitionisticEngine engine(t);
      for (const auto& s : geometric_corpus) {
        ++checks;
        if (geo.sequent_valid(s) != engine.provable(s)) {
          ++disagreements;
          if (witness.empty())
            witness = "geometric theory " + std::to_string(ti) + ", sequent " +
                      syntax::to_text(s);
        }
      }
    }
  }
  criterion(report, "c12.universal-model", disagreements == 0,
            disagreements == 0 ? std::to_string(checks) + " oracle agreements" : witness);
}

}  // namespace

Report paperchecks(const Options&) {
  Report report;
  auto timed = [&report](const std::function<void(Report&)>& step) {
    std::size_t first = report.records.size();
    auto start = std::chrono::steady_clock::now();
    step(report);
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start).count();
    for (std::size_t i = first; i < report.records.size(); ++i)
      report.records[i].seconds = seconds;
  };
  timed(run_family_criteria);
  timed(run_yoneda_criterion);
  timed(run_hom_criterion);
  timed(run_soundness_criterion);
  timed(run_monoid_criterion);
  timed(run_lindenbaum_criterion);
  timed(run_rieger_nishimura_criterion);
  timed(run_translation_criterion);
  timed(run_tsfo_criterion);
  timed(run_universal_model_criterion);
  return report;
}

Report run_command(const std::string& name, const std::vector<std::string>& files,
                   const Options& opt) {
  try {
    if (name == "classify") return cmd_classify(files);
    if (name == "check-proof") return cmd_check_proof(files, opt);
    if (name == "translate") return cmd_translate(files);
    if (name == "morleyize") return cmd_morleyize(files);
    if (name == "lindenbaum") return cmd_lindenbaum(files, opt);
    if (name == "site") return cmd_site(files, opt);
    if (name == "compare-topologies") return cmd_compare_topologies(files, opt);
    if (name == "tsfo") return cmd_tsfo(files);
    if (name == "presheaf") return cmd_presheaf(files, opt);
    if (name == "boolean-core") return cmd_boolean_core(files);
    if (name == "validate") return cmd_validate(files);
    if (name == "soundness") return cmd_soundness(opt);
    if (name == "paperchecks") return paperchecks(opt);
  } catch (const ResourceError& e) {
    Report report;
    report.add(name, "error", e.what());
    return report;
  }
  throw Error("unknown command: " + name);
}

}  // namespace toposcope::cli
