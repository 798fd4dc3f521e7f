// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "findim/cli.hpp"

using namespace findim;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Runs the checks with the given ids; every one must be present and pass.
Outcome checks_pass(const std::vector<std::string>& ids) {
  Outcome o;
  RunOptions opt;
  for (const auto& id : ids) {
    opt.filter = id;
    VerificationReport r = verify_builtin_suite(opt);
    bool found = false;
    for (const auto& c : r.checks) {
      if (c.id != id) continue;
      found = true;
      if (c.status != Status::pass) {
        o.ok = false;
        o.detail += id + ": " + to_string(c.status) + " (" + c.detail + "); ";
      } else {
        o.detail += id + " " + c.value.dump() + "; ";
      }
    }
    if (!found) {
      o.ok = false;
      o.detail += id + ": missing; ";
    }
  }
  return o;
}

Outcome determinism() {
  RunOptions opt;
  opt.seed = 0;
  std::string a = emit_report(verify_builtin_suite(opt), "json");
  std::string b = emit_report(verify_builtin_suite(opt), "json");
  Outcome o = checks_pass({"determinism.betti"});
  if (a != b) {
    o.ok = false;
    o.detail = "json reports differ between two runs with seed 0; " + o.detail;
  } else {
    o.detail = "two runs byte-identical (" + std::to_string(a.size()) + " bytes); " + o.detail;
  }
  return o;
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "Koszul projective dimension", 10, [] { return checks_pass({"koszul.projdim"}); }},
      {2, "small finitistic formulas", 30, [] { return checks_pass({"finitistic.small"}); }},
      {3, "FPD interval and both collapses", 60,
       [] { return checks_pass({"finitistic.interval", "families.gorenstein", "families.trivial-extension"}); }},
      {4, "global upper bound on 50 random modules", 300, [] { return checks_pass({"bounds.global"}); }},
      {5, "Auslander-Buchsbaum bound", 300, [] { return checks_pass({"bounds.auslander-buchsbaum"}); }},
      {6, "reduction oracle against Ext vanishing", 300, [] { return checks_pass({"oracle.definition"}); }},
      {7, "dualizing module checks", 60, [] { return checks_pass({"dualizing"}); }},
      {8, "local-Cohen-Macaulay equivalence", 60, [] { return checks_pass({"lcm.equivalence"}); }},
      {9, "Hochschild vanishing", 60, [] { return checks_pass({"hochschild"}); }},
      {10, "determinism", 60, determinism}};

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.ok && s < c.limit_seconds;
    if (o.ok && !ok) o.detail = "over time limit; " + o.detail;
    failed += !ok;
    std::printf("%s  criterion %2d  %-42s %7.2f s (limit %.0f s)  %s\n", ok ? "PASS" : "FAIL", c.number, c.name.c_str(),
                s, c.limit_seconds, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
