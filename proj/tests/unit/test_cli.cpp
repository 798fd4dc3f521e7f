#include <fstream>
#include <sstream>

#include "doctest.h"
#include "findim/cli.hpp"
#include "findim/engine.hpp"

using namespace findim;

namespace {

std::string fixture(const std::string& name) { return std::string(FINDIM_FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const CheckResult& find(const VerificationReport& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return c;
  FAIL("no check " << id);
  return r.checks.front();
}

}  // namespace

TEST_CASE("golden scenario reports are byte-identical") {
  for (const char* name : {"projdim_koszul", "empty", "cutoff", "wrong_expectation"}) {
    CAPTURE(name);
    VerificationReport r = run_scenario_file(fixture(std::string(name) + ".json"), {});
    CHECK(emit_report(r, "json") == slurp(fixture(std::string(name) + ".expected.json")));
  }
}

TEST_CASE("scenario examples") {
  VerificationReport r = run_scenario_file(fixture("projdim_koszul.json"), {});
  CHECK(find(r, "projdim-Ky").value == 1);
  CHECK(find(r, "projdim-k").value == "infinity");
  CHECK(r.exit_code() == 0);

  VerificationReport e = run_scenario_file(fixture("empty.json"), {});
  CHECK(e.checks.empty());
  CHECK(e.exit_code() == 0);
  json doc = json::parse(emit_report(e, "json"));
  CHECK(doc["checks"].empty());
  CHECK(doc["schema"] == kReportSchema);

  try {
    run_scenario_file(fixture("nonzero_square.json"), {});
    FAIL("a module with nonzero square differential was accepted");
  } catch (const InputError& err) {
    CHECK(std::string(err.what()).find("d^2 != 0") != std::string::npos);
  }
}

TEST_CASE("parse errors carry line and column") {
  try {
    run_scenario_file(fixture("syntax_error.json"), {});
    FAIL("syntax error not reported");
  } catch (const InputError& err) {
    CHECK(std::string(err.what()).find("syntax_error.json:4:11:") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_scenario_text("{\"a\": }", "inline"), InputError);
  CHECK_THROWS_AS(run_scenario_file(fixture("missing.json"), {}), InputError);
  CHECK_THROWS_AS(run_scenario(json::parse(R"({"schema": "findim-scenario/1", "bogus": []})"), {}), InputError);
  CHECK_THROWS_AS(run_scenario(json::parse(R"({"schema": "findim-scenario/1",
      "rings": [{"name": "R", "vars": ["x"]}],
      "dg_rings": [{"name": "A", "kind": "ring", "base": "R"}],
      "modules": [{"name": "M", "kind": "restricted", "ring": "A"}]})"),
                              {}),
                  InputError);
}

TEST_CASE("exit codes follow the worst status") {
  CHECK(run_scenario_file(fixture("cutoff.json"), {}).exit_code() == 2);
  VerificationReport w = run_scenario_file(fixture("wrong_expectation.json"), {});
  CHECK(w.exit_code() == 1);
  VerificationReport u = run_scenario(json::parse(R"({"schema": "findim-scenario/1",
      "rings": [{"name": "R", "vars": ["x"]}],
      "dg_rings": [{"name": "A", "kind": "ring", "base": "R"}],
      "queries": [{"op": "frobnicate", "ring": "A"}]})"),
                                      {});
  CHECK(u.checks.at(0).status == Status::error);
  CHECK(u.exit_code() == 3);
}

TEST_CASE("command-line options override the scenario file") {
  RunOptions opt;
  opt.cutoff = 4000;
  VerificationReport r = run_scenario_file(fixture("cutoff.json"), opt);
  CHECK(r.exit_code() == 0);
  CHECK(find(r, "projdim-k").value == "infinity");
  CHECK(r.options["cutoff"] == 4000);
}

TEST_CASE("failures carry a minimal reproducing scenario") {
  VerificationReport w = run_scenario_file(fixture("wrong_expectation.json"), {});
  const CheckResult& c = find(w, "projdim-Ky");
  REQUIRE(c.status == Status::fail);
  const json& rep = c.reproducer;
  CHECK(rep["dg_rings"].size() == 1);
  CHECK(rep["dg_rings"][0]["name"] == "A");
  CHECK(rep["queries"].size() == 1);
  VerificationReport again = run_scenario(rep, {});
  CHECK(again.exit_code() == 1);
  CHECK(again.checks.at(0).value == 1);
}

TEST_CASE("reports round-trip through json") {
  RunOptions opt;
  opt.filter = "finitistic";
  VerificationReport r = verify_builtin_suite(opt);
  REQUIRE(!r.checks.empty());
  json j = to_json(r);
  CHECK(to_json(report_from_json(j)) == j);
  VerificationReport w = run_scenario_file(fixture("wrong_expectation.json"), {});
  CHECK(to_json(report_from_json(to_json(w))) == to_json(w));

  json tampered = j;
  tampered["checks"][0]["certificate"] = "forged";
  CHECK_THROWS_AS(report_from_json(tampered), InputError);
}

TEST_CASE("text reports name the anchor of failed checks") {
  VerificationReport w = run_scenario_file(fixture("wrong_expectation.json"), {});
  std::string text = emit_report(w, "text");
  CHECK(text.find(find(w, "projdim-Ky").anchor) != std::string::npos);
  CHECK(text.find("1 failed") != std::string::npos);
  CHECK_THROWS_AS(emit_report(w, "yaml"), InputError);
}

TEST_CASE("built-in suite filtering") {
  RunOptions opt;
  opt.filter = "koszul";
  VerificationReport k = verify_builtin_suite(opt);
  REQUIRE(k.checks.size() == 2);
  CHECK(k.checks[0].id == "koszul.projdim");
  CHECK(k.checks[1].id == "koszul.window");
  opt.filter = "families";
  CHECK(verify_builtin_suite(opt).checks.size() == 2);
  opt.filter = "";
  VerificationReport all = verify_builtin_suite(opt);
  CHECK(all.checks.size() == builtin_checks().size());
  CHECK(all.exit_code() == 0);
  for (const auto& c : all.checks) CHECK(!c.anchor.empty());
}

TEST_CASE("built-in suite is deterministic for a fixed seed") {
  RunOptions opt;
  opt.seed = 5;
  CHECK(emit_report(verify_builtin_suite(opt), "json") == emit_report(verify_builtin_suite(opt), "json"));
}

TEST_CASE("a tight cutoff makes checks indeterminate and is scoped to the run") {
  int before = generator_budget();
  RunOptions opt;
  opt.cutoff = 2;
  opt.filter = "finitistic.small";
  VerificationReport r = verify_builtin_suite(opt);
  CHECK(r.checks.at(0).status == Status::indeterminate);
  CHECK(r.checks.at(0).reproducer["command"] == "findim verify --filter finitistic.small --seed 0");
  CHECK(generator_budget() == before);
}

TEST_CASE("explain prints anchor and certificate") {
  std::string s = explain("hochschild", {});
  CHECK(s.find("anchor: HH_i(B/A)") != std::string::npos);
  CHECK(s.find("certificate:") != std::string::npos);
  CHECK(s.find("status: pass") != std::string::npos);
  CHECK_THROWS_AS(explain("no.such.check", {}), InputError);
}

TEST_CASE("window parsing") {
  CHECK(parse_window("-3:4") == std::pair<int, int>{-3, 4});
  CHECK_THROWS_AS(parse_window("4:-3"), InputError);
  CHECK_THROWS_AS(parse_window("3"), InputError);
  CHECK_THROWS_AS(parse_window("a:b"), InputError);
}
