#include <iostream>

#include "CLI11.hpp"
#include "findim/cli.hpp"

using namespace findim;

int main(int argc, char** argv) {
  CLI::App app{"findim: exact finitistic dimension workbench for non-positive commutative DG-rings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kEngineVersion));

  std::string field, window, format = "json", scenario, check;
  std::optional<int> cutoff;
  RunOptions opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", field, "Q or Fp:<p>");
    sub->add_option("--cutoff", cutoff, "generator budget of the resolution engine");
    sub->add_option("--window", window, "cohomological window lo:hi");
    sub->add_option("--seed", opt.seed, "seed for randomized checks")->default_val(0);
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--filter", opt.filter, "run only checks whose id contains this substring");
  };
  auto* run = app.add_subcommand("run", "run the queries of a scenario file");
  run->add_option("scenario", scenario, "scenario JSON file")->required();
  common(run);
  auto* verify = app.add_subcommand("verify", "run the built-in verification suite");
  common(verify);
  auto* expl = app.add_subcommand("explain", "print the anchor and certificate of a built-in check");
  expl->add_option("check", check, "check id")->required();
  common(expl);
  auto* list = app.add_subcommand("list", "list the built-in checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (!field.empty()) opt.field = Field::parse(field);
    if (!window.empty()) opt.window = parse_window(window);
    if (cutoff) {
      if (*cutoff < 1) throw InputError("--cutoff must be positive");
      opt.cutoff = cutoff;
    }
    if (*list) {
      for (const auto& c : builtin_checks()) std::cout << c.id << "  " << c.anchor << "\n";
      return 0;
    }
    if (*expl) {
      std::cout << explain(check, opt);
      return 0;
    }
    VerificationReport rep = *run ? run_scenario_file(scenario, opt) : verify_builtin_suite(opt);
    std::cout << emit_report(rep, format);
    return rep.exit_code();
  } catch (const InputError& e) {
    std::cerr << "findim: input error: " << e.what() << "\n";
    return 3;
  }
}
