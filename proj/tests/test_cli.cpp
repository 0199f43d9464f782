#include <doctest.h>

#include <fstream>

#include "toposcope/commands.hpp"
#include "toposcope/parse.hpp"
#include "toposcope/semantics.hpp"

using namespace toposcope;
using namespace toposcope::syntax;
using namespace toposcope::cli;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string("/tmp/toposcope_test_") + name;
  std::ofstream out(path);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("theory parsing: representative declarations") {
  Theory t1 = parse_theory("atoms p q. axiom p |- q.");
  CHECK(t1.axioms.size() == 1);
  CHECK(t1.fragment == FragmentTag::Geometric);

  Theory t2 = parse_theory("atoms p. axiom top |- p \\/ ~p.");
  CHECK(t2.fragment == FragmentTag::SubFirstOrder);

  Theory t3 = parse_theory("sort A. rel R(A). axiom top |-[x:A] forall y:A. R(y).");
  CHECK(t3.fragment == FragmentTag::FirstOrder);
  CHECK(t3.axioms[0].ctx.size() == 1);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_theory("atoms p.\naxiom p |- .");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_theory("axiom top |- p."), WellFormednessError);  // unknown atom
  CHECK_THROWS_AS(parse_theory("fragment geometric. atoms p. axiom top |- ~p."),
                  WellFormednessError);
}

TEST_CASE("print then parse is the identity on theories") {
  const char* sources[] = {
      "atoms p q. axiom p |- q. axiom top |- p \\/ ~p.",
      "sort A. rel R(A, A). fun c : A. fun f(A) : A. "
      "axiom R(c, f(c)) |- exists y:A. R(c, y). "
      "axiom top |-[x:A] forall y:A. R(x, y) -> R(y, x).",
      "atoms p q. axiom \\/{ p; q /\\ p } |- /\\{ p -> q; q }.",
      "atoms p. axiom p /\\ (p \\/ ~p) |- (p -> p) -> p.",
      "sort A. rel R(A). fun c : A. axiom c = c /\\ R(c) |- R(c).",
      // quantifiers over variable strings, and bi-implication sugar
      "sort A. rel R(A, A). axiom exists x:A, y:A. R(x, y) |- top.",
      "atoms p q. axiom p <-> q |- q <-> p.",
  };
  for (const char* src : sources) {
    Theory t = parse_theory(src);
    Theory reparsed = parse_theory(print_theory(t));
    CHECK(reparsed.signature == t.signature);
    CHECK(reparsed.fragment == t.fragment);
    REQUIRE(reparsed.axioms.size() == t.axioms.size());
    for (std::size_t i = 0; i < t.axioms.size(); ++i)
      CHECK(reparsed.axioms[i] == t.axioms[i]);
  }
}

TEST_CASE("print then parse is the identity on a generated corpus") {
  Signature sig;
  sig.add_atom("p");
  sig.add_atom("q");
  auto corpus =
      semantics::formula_corpus({"p", "q"}, 4, 120, 71, FragmentTag::FirstOrder);
  for (const auto& f : corpus) {
    auto reparsed = parse_formula(to_text(*f), sig);
    CHECK(*reparsed == *f);
  }
}

TEST_CASE("category files parse and validate") {
  const char* text =
      "objects X.\n"
      "arrow e : X -> X.\n"
      "compose e o e = e.\n"
      "presheaf P {\n"
      "  on X : a b.\n"
      "  act e : a -> b, b -> b.\n"
      "}\n";
  auto doc = parse_category(text);
  CHECK(doc.category->num_objects() == 1);
  CHECK(doc.category->num_arrows() == 2);
  REQUIRE(doc.find_presheaf("P") != nullptr);
  CHECK(doc.find_presheaf("P")->carrier(0) == 2);

  // a non-functorial action is rejected
  const char* broken =
      "objects X.\narrow e : X -> X.\ncompose e o e = e.\n"
      "presheaf P { on X : a b. act e : a -> b, b -> a. }\n";
  CHECK_THROWS_AS((void)parse_category(broken), WellFormednessError);

  // category print/parse round trip
  auto reparsed = parse_category(print_category(*doc.category));
  CHECK(reparsed.category->num_objects() == doc.category->num_objects());
  CHECK(reparsed.category->num_arrows() == doc.category->num_arrows());
}

TEST_CASE("structure files: propositional and presheaf modes") {
  Signature sig;
  sig.add_atom("p");
  auto prop = parse_structure("algebra chain 3. assign p = 1.", sig);
  CHECK(!prop.is_presheaf());
  auto m = prop.prop_structure();
  CHECK(semantics::interpret(m, *neg(neg(atom("p")))) == 2);
  CHECK_THROWS_AS((void)parse_structure("algebra chain 3. assign p = 7.", sig),
                  WellFormednessError);

  Signature pred;
  pred.add_sort("A");
  pred.add_relation("R", {"A"});
  const char* text =
      "category {\n"
      "  objects X.\n"
      "  arrow e : X -> X.\n"
      "  compose e o e = e.\n"
      "  presheaf P { on X : one e. act e : one -> e, e -> e. }\n"
      "}\n"
      "sort A = P.\n"
      "rel R { on X : (e). }\n";
  auto doc = parse_structure(text, pred);
  REQUIRE(doc.is_presheaf());
  auto ex = exists({{"x", "A"}}, rel("R", {Term::var("x")}));
  auto fa = forall({{"x", "A"}}, rel("R", {Term::var("x")}));
  CHECK(semantics::sequent_valid(*doc.presheaf, {{}, truth(), ex}));
  CHECK(!semantics::sequent_valid(*doc.presheaf, {{}, truth(), fa}));
}

TEST_CASE("structure files interpret function symbols") {
  Signature sig;
  sig.add_sort("A");
  sig.add_function("c", {}, "A");
  sig.add_function("f", {"A"}, "A");
  const char* text =
      "category {\n"
      "  objects X.\n"
      "  presheaf P { on X : a b. }\n"
      "}\n"
      "sort A = P.\n"
      "fun c { on X : () -> a. }\n"
      "fun f { on X : (a) -> b, (b) -> a. }\n";
  auto doc = parse_structure(text, sig);
  REQUIRE(doc.is_presheaf());
  // f(c) = c fails, f(f(c)) = c holds
  auto one = eq(Term::app("f", {Term::app("c")}), Term::app("c"));
  auto two = eq(Term::app("f", {Term::app("f", {Term::app("c")})}), Term::app("c"));
  CHECK(!semantics::sequent_valid(*doc.presheaf, {{}, truth(), one}));
  CHECK(semantics::sequent_valid(*doc.presheaf, {{}, truth(), two}));

  // a partial function table is rejected
  const char* partial =
      "category { objects X. presheaf P { on X : a b. } }\n"
      "sort A = P.\nfun c { on X : () -> a. }\nfun f { on X : (a) -> b. }\n";
  CHECK_THROWS_AS((void)parse_structure(partial, sig), WellFormednessError);
}

TEST_CASE("proof files run through the checker") {
  std::string thy = "atoms p q. axiom top |- p.";
  Theory t = parse_theory(thy);

  const char* prf =
      "step a = axiom @ 0 : top |- p.\n"
      "step b = or_inj : p |- p \\/ q.\n"
      "step c = cut from a, b : top |- p \\/ q.\n"
      "root c.\n";
  auto tree = parse_proof(prf, t);
  CHECK(kernel::check_proof(tree, kernel::SystemTag::Geometric, t).accepted());

  CHECK_THROWS_AS((void)parse_proof("root z.", t), WellFormednessError);
  CHECK_THROWS_AS((void)parse_proof("step a = bogus : top |- p.\nroot a.", t), ParseError);
}

TEST_CASE("run_command dispatch and exit codes") {
  Options opt;
  std::string thy =
      write_temp("cmd.thy", "atoms p q. axiom p |- q. axiom top |- p \\/ ~p.");

  auto classify = run_command("classify", {thy}, opt);
  CHECK(classify.all_pass());
  CHECK(classify.exit_code() == 0);

  auto compare = run_command("compare-topologies", {thy}, opt);
  CHECK(compare.all_pass());
  bool found = false;
  for (const auto& r : compare.records)
    if (r.id == "compare.verdict") {
      CHECK(r.witness == "equal");
      found = true;
    }
  CHECK(found);

  std::string prf = write_temp("cmd.prf",
                               "step a = lem : top |- q \\/ ~q.\n"
                               "root a.\n");
  opt.system = kernel::SystemTag::SubFirstOrder;
  auto rejected = run_command("check-proof", {thy, prf}, opt);
  CHECK(!rejected.all_pass());
  CHECK(rejected.exit_code() == 1);
  opt.system = kernel::SystemTag::Classical;
  CHECK(run_command("check-proof", {thy, prf}, opt).all_pass());

  CHECK_THROWS_AS((void)run_command("no-such-command", {}, opt), Error);
}

TEST_CASE("reports are byte-identical across runs") {
  Options opt;
  std::string thy = write_temp("det.thy", "atoms p q. axiom p |- q.");
  auto a = run_command("compare-topologies", {thy}, opt);
  auto b = run_command("compare-topologies", {thy}, opt);
  CHECK(a.to_records() == b.to_records());
  CHECK(a.to_text() == b.to_text());

  auto s1 = run_command("soundness", {}, opt);
  auto s2 = run_command("soundness", {}, opt);
  CHECK(s1.to_records() == s2.to_records());
}

TEST_CASE("record format is one tab-separated line per check") {
  Options opt;
  std::string thy = write_temp("rec.thy", "atoms p. axiom top |- p.");
  auto report = run_command("classify", {thy}, opt);
  std::string records = report.to_records();
  std::size_t lines = std::count(records.begin(), records.end(), '\n');
  CHECK(lines == report.records.size());
  CHECK(records.find("classify.axiom0\tpass\t") != std::string::npos);
}

TEST_CASE("site export feeds back into the category parser") {
  Options opt;
  opt.export_path = "/tmp/toposcope_test_site.cat";
  std::string thy = write_temp("site.thy", "atoms p. ");
  auto report = run_command("site", {thy}, opt);
  CHECK(report.all_pass());

  std::ifstream in(opt.export_path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto doc = parse_category(text);
  CHECK(doc.category->num_objects() == 3);  // SynCons of the 4-element algebra
}

TEST_CASE("lindenbaum command emits explicit tables") {
  Options opt;
  opt.system = kernel::SystemTag::Classical;
  std::string thy = write_temp("lind.thy", "atoms p. ");
  auto report = run_command("lindenbaum", {thy}, opt);
  bool saw_meet = false, saw_order = false;
  for (const auto& r : report.records) {
    if (r.id == "lindenbaum.boolean.meet") saw_meet = true;
    if (r.id == "lindenbaum.boolean.order") saw_order = true;
  }
  CHECK(saw_meet);
  CHECK(saw_order);
}

TEST_CASE("validate command checks axioms in a structure") {
  Options opt;
  std::string thy = write_temp("val.thy",
                               "atoms p.\n"
                               "axiom top |- ~~p.\n"
                               "axiom top |- p \\/ ~p.\n");
  std::string str = write_temp("val.str", "algebra chain 3. assign p = 1.");
  auto report = run_command("validate", {thy, str}, opt);
  REQUIRE(report.records.size() == 2);
  CHECK(report.records[0].status == "pass");   // ~~p holds at the middle
  CHECK(report.records[1].status == "fail");   // excluded middle does not
  CHECK(report.exit_code() == 1);
}

TEST_CASE("resource guards surface as error records") {
  Options opt;
  opt.guard = 2;  // far below any real enumeration
  std::string cat = write_temp("guard.cat",
                               "objects X.\narrow e : X -> X.\ncompose e o e = e.\n"
                               "presheaf P { on X : a b. act e : a -> b, b -> b. }\n");
  auto report = run_command("presheaf", {cat}, opt);
  CHECK(!report.all_pass());
  CHECK(report.exit_code() == 1);
  bool saw_error = false;
  for (const auto& r : report.records)
    if (r.status == "error") saw_error = true;
  CHECK(saw_error);
}

TEST_CASE("tsfo over builtin algebras") {
  Options opt;
  auto report = run_command("tsfo", {"@chain:3"}, opt);
  CHECK(report.all_pass());
  bool total = false;
  for (const auto& r : report.records)
    if (r.id == "tsfo.all_valid") total = true;
  CHECK(total);
}

TEST_CASE("morleyize command round trip") {
  Options opt;
  std::string thy = write_temp("mor.thy", "atoms p q. axiom top |- p -> q.");
  auto report = run_command("morleyize", {thy}, opt);
  CHECK(report.all_pass());
  bool saw_names = false;
  for (const auto& r : report.records)
    if (r.id == "morleyize.relations") {
      CHECK(r.witness == "3");
      saw_names = true;
    }
  CHECK(saw_names);
}
