#include <cstdlib>
#include <deque>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toposcope/commands.hpp"
#include "toposcope/errors.hpp"

namespace {

toposcope::kernel::SystemTag parse_system(const std::string& s) {
  if (s == "g") return toposcope::kernel::SystemTag::Geometric;
  if (s == "sfo") return toposcope::kernel::SystemTag::SubFirstOrder;
  if (s == "fo") return toposcope::kernel::SystemTag::FirstOrder;
  if (s == "cl") return toposcope::kernel::SystemTag::Classical;
  throw CLI::ValidationError("--system", "expected one of g|sfo|fo|cl");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toposcope: finite syntactic sites, proof checking and sheaf-level checks"};
  app.require_subcommand(1);

  std::string system = "sfo";
  int depth = 3;
  std::size_t kripke_bound = 6;
  std::size_t guard = 1'000'000;
  std::string format = "text";
  bool timings = false;

  if (const char* env = std::getenv("TOPOSCOPE_GUARD")) guard = std::strtoull(env, nullptr, 10);

  app.add_option("--system", system, "deduction-system: g|sfo|fo|cl")
      ->check(CLI::IsMember({"g", "sfo", "fo", "cl"}));
  app.add_option("--depth", depth, "corpus / closure depth");
  app.add_option("--kripke-bound", kripke_bound, "countermodel search bound (worlds)");
  app.add_option("--guard", guard, "resource guard for enumerations");
  app.add_option("--format", format, "output format: text|record")
      ->check(CLI::IsMember({"text", "record"}));
  app.add_flag("--timings", timings, "append per-record timings (text format)");

  struct Sub {
    std::string name;
    CLI::App* cmd = nullptr;
    std::vector<std::string> files;
    bool full = false;
    std::string export_path;
  };
  std::deque<Sub> subs;  // stable addresses for CLI11's bound references

  auto add = [&](const std::string& name, const std::string& desc, int nfiles,
                 bool has_full = false, bool has_export = false) {
    subs.push_back({});
    Sub& s = subs.back();
    s.name = name;
    s.cmd = app.add_subcommand(name, desc);
    if (nfiles > 0) s.cmd->add_option("files", s.files, "input files")->expected(nfiles);
    if (has_full) s.cmd->add_flag("--full", s.full, "keep the bottom object (no SynCons)");
    if (has_export)
      s.cmd->add_option("--export", s.export_path, "write the site as a category file");
  };

  add("classify", "fragment of each axiom of a theory file", 1);
  add("check-proof", "check a proof file against a theory", 2);
  add("translate", "classical elimination of forall and tagged conjunction", 1);
  add("morleyize", "extend a finitary first-order theory to a geometric one", 1);
  add("lindenbaum", "Lindenbaum algebra of a propositional theory", 1);
  add("site", "build the syntactic site of a propositional theory", 1, true, true);
  add("compare-topologies", "J_kappa versus J_negneg on the syntactic site", 1, true);
  add("tsfo", "generate and check the T^sfo double sequents", 1);
  add("presheaf", "validate a category file and report subobject lattices", 1);
  add("boolean-core", "Boolean core of a finite category", 1);
  add("validate", "check a theory's axioms in a structure file", 2);
  add("soundness", "run the soundness harness over builtin targets", 0);
  add("paperchecks", "run the full acceptance suite", 0);

  CLI11_PARSE(app, argc, argv);

  toposcope::cli::Options opt;
  opt.system = parse_system(system);
  opt.depth = depth;
  opt.kripke_bound = kripke_bound;
  opt.guard = guard;

  try {
    for (const auto& sub : subs) {
      if (!sub.cmd->parsed()) continue;
      opt.full_site = sub.full;
      opt.export_path = sub.export_path;
      auto report = toposcope::cli::run_command(sub.name, sub.files, opt);
      std::cout << (format == "record" ? report.to_records() : report.to_text(timings));
      return report.exit_code();
    }
  } catch (const toposcope::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const toposcope::WellFormednessError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const toposcope::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
