#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "findim/cli.hpp"

namespace findim {

json RunOptions::echo() const {
  auto w = window_or_default();
  return {{"field", field_or_default().name()},
          {"cutoff", cutoff.value_or(kMaxGenerators)},
          {"window", std::to_string(w.first) + ":" + std::to_string(w.second)},
          {"seed", seed},
          {"filter", filter}};
}

std::pair<int, int> parse_window(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("window '" + text + "' is not of the form lo:hi");
  try {
    std::size_t a = 0, b = 0;
    int lo = std::stoi(text.substr(0, colon), &a);
    int hi = std::stoi(text.substr(colon + 1), &b);
    if (a != colon || b != text.size() - colon - 1) throw std::invalid_argument("trailing");
    if (lo > hi) throw InputError("window '" + text + "' is empty");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InputError("window '" + text + "' is not of the form lo:hi");
  }
}

json parse_scenario_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto p = msg.find(": ", msg.find("parse error"));
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                     (p == std::string::npos ? msg : msg.substr(p + 2)));
  }
}

namespace {

std::string anchor_of(const std::string& op) {
  static const std::map<std::string, std::string> anchors{
      {"proj_dim", "projdim_A(M) = projdim_{H⁰(A)}(H⁰(A) ⊗ᴸ_A M)"},
      {"flat_dim", "flatdim_A(M) = flatdim_{H⁰(A)}(H⁰(A) ⊗ᴸ_A M)"},
      {"inj_dim", "injdim_A(M) = injdim_{H⁰(A)}(RHom_A(H⁰(A), M))"},
      {"proj_dim_by_definition", "projdim_A(M) via Ext vanishing against amplitude-zero test modules"},
      {"profile", "inf, sup and amp of H(M)"},
      {"depth", "seq.depth: longest sequence passing the Koszul-inf criterion"},
      {"regular_sequence", "a is A-regular iff inf(K(A;a)) = inf(A)"},
      {"local_cohomology", "RΓ_m̄(A) by graded local duality"},
      {"lcm", "amp(RΓ(A)) = amp(A) iff fpd(A) = dim H⁰(A) − amp(A)"},
      {"gorenstein", "A is Gorenstein iff injdim_A(A) < ∞"},
      {"dualizing", "injdim_A(R) = inf(R) + dim H⁰(A) and A ≅ RHom_A(R, R)"},
      {"small_finitistic", "fpd(A) = ffd(A) = fid(A) = seq.depth_A(A) − amp(A)"},
      {"fpd_bounds", "dim H⁰(A) − amp(A) ≤ FPD(A) ≤ dim H⁰(A)"},
      {"witness", "for 0 ≤ n ≤ dim H⁰(A) some M has sup(M) = 0, inf(M) ≥ inf(A), projdim_A(M) = n"},
      {"ffd_witness", "for 1 ≤ n ≤ dim H⁰(A) some M has flatdim_A(M) = n − 1"},
      {"hochschild", "HH_i(B/A) = HHⁱ(B/A) = 0 for i > dim(B ⊗_A B) when B is smooth over A"},
      {"ext", "Ext_A(M, N) in the requested window"},
      {"tor", "Tor^A(M, N) in the requested window"},
      {"gorenstein_bound", "projdim_A(M) ≤ dim H⁰(A) − amp(A) − inf(M) when A and H⁰(A) are Gorenstein"}};
  auto it = anchors.find(op);
  return it == anchors.end() ? "unknown operation" : it->second;
}


const std::set<std::string> kReferenceKeys{"ring", "base", "coefficients", "module", "modules", "source",
                                           "target", "of", "factors", "algebra"};

class Scenario {
 public:
  Scenario(const json& doc, const RunOptions& opt) : doc_(doc), opt_(opt) {}

  void declare() {
    for (const auto& key : doc_.items())
      if (!std::set<std::string>{"schema", "options", "rings", "dg_rings", "modules", "queries"}.count(key.key()))
        throw InputError("unknown scenario section '" + key.key() + "'");
    if (!doc_.contains("schema") || doc_["schema"] != kScenarioSchema)
      throw InputError(std::string("scenario schema must be \"") + kScenarioSchema + "\"");
    for (const auto& r : section("rings")) declare_ring(r);
    for (const auto& r : section("dg_rings")) declare_dg_ring(r);
    for (const auto& m : section("modules")) declare_module(m);
  }

  VerificationReport run() {
    VerificationReport rep;
    rep.options = opt_.echo();
    auto t0 = std::chrono::steady_clock::now();
    int index = 0;
    for (const auto& q : section("queries")) rep.checks.push_back(run_query(q, index++));
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }

 private:
  const json& doc_;
  RunOptions opt_;
  std::map<std::string, RingPtr> rings_;
  std::map<std::string, DGRingPtr> dg_;
  std::map<std::string, DGModule> mods_;
  std::set<std::string> names_;

  json section(const std::string& name) const {
    if (!doc_.contains(name)) return json::array();
    if (!doc_[name].is_array()) throw InputError("section '" + name + "' must be an array");
    return doc_[name];
  }

  static std::string str(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_string()) throw InputError(where + ": missing string field '" + key + "'");
    return j[key];
  }

  static int integer(const json& j, const std::string& key, const std::string& where, std::optional<int> dflt = {}) {
    if (!j.contains(key)) {
      if (dflt) return *dflt;
      throw InputError(where + ": missing integer field '" + key + "'");
    }
    if (!j[key].is_number_integer()) throw InputError(where + ": field '" + key + "' must be an integer");
    return j[key];
  }

  static std::vector<std::string> strings(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) return {};
    if (!j[key].is_array()) throw InputError(where + ": field '" + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& s : j[key]) {
      if (!s.is_string()) throw InputError(where + ": entries of '" + key + "' must be strings");
      out.push_back(s);
    }
    return out;
  }

  void claim(const std::string& name, const std::string& where) {
    if (name.empty()) throw InputError(where + ": empty name");
    if (!names_.insert(name).second) throw InputError(where + ": name '" + name + "' declared twice");
  }

  RingPtr ring(const std::string& name, const std::string& where) const {
    auto it = rings_.find(name);
    if (it == rings_.end()) throw InputError(where + ": ring '" + name + "' is not declared before use");
    return it->second;
  }

  DGRingPtr dg(const std::string& name, const std::string& where) const {
    auto it = dg_.find(name);
    if (it == dg_.end()) throw InputError(where + ": DG-ring '" + name + "' is not declared before use");
    return it->second;
  }

  const DGModule& mod(const std::string& name, const std::string& where) const {
    auto it = mods_.find(name);
    if (it == mods_.end()) throw InputError(where + ": module '" + name + "' is not declared before use");
    return it->second;
  }

  void declare_ring(const json& r) {
    std::string name = str(r, "name", "ring");
    std::string where = "ring '" + name + "'";
    claim(name, where);
    Field k = opt_.field_or_default();
    if (r.contains("field") && !opt_.field) k = Field::parse(str(r, "field", where));
    auto vars = strings(r, "vars", where);
    std::vector<int> weights(vars.size(), 1);
    if (r.contains("weights")) {
      weights = r["weights"].get<std::vector<int>>();
      if (weights.size() != vars.size()) throw InputError(where + ": one weight per variable is required");
    }
    rings_[name] = GradedRing::make(k, vars, weights, strings(r, "relations", where));
  }

  std::vector<Poly> parse_all(const GradedRing& R, const std::vector<std::string>& xs) const {
    std::vector<Poly> out;
    for (const auto& s : xs) out.push_back(R.parse(s));
    return out;
  }

  void declare_dg_ring(const json& r) {
    std::string name = str(r, "name", "DG-ring");
    std::string where = "DG-ring '" + name + "'";
    claim(name, where);
    std::string kind = str(r, "kind", where);
    DGRingPtr A;
    if (kind == "ring") {
      A = build_ring_dg(ring(str(r, "base", where), where));
    } else if (kind == "koszul") {
      RingPtr R = ring(str(r, "base", where), where);
      A = build_koszul_dg(R, parse_all(*R, strings(r, "sequence", where)));
    } else if (kind == "trivial_extension") {
      A = build_trivial_extension(ring(str(r, "base", where), where), ring(str(r, "coefficients", where), where),
                                  integer(r, "n", where));
    } else if (kind == "trivial_extension_module") {
      RingPtr R = ring(str(r, "base", where), where);
      A = build_trivial_extension_module(R, parse_all(*R, strings(r, "ideal", where)), integer(r, "n", where));
    } else if (kind == "product") {
      std::vector<DGRingPtr> fs;
      for (const auto& f : strings(r, "factors", where)) fs.push_back(dg(f, where));
      A = build_product_dg(fs);
    } else {
      throw InputError(where + ": unknown kind '" + kind + "'");
    }
    dg_[name] = A;
  }

  // A Koszul element is a string on a graded-local DG-ring, or one string per factor.
  std::vector<std::vector<Poly>> koszul_sequence(const DGRingPtr& A, const json& seq, const std::string& where) const {
    if (!seq.is_array()) throw InputError(where + ": 'sequence' must be an array");
    std::vector<std::vector<Poly>> out;
    for (const auto& e : seq) {
      std::vector<Poly> comps;
      if (e.is_string()) {
        if (A->nfactors() != 1) throw InputError(where + ": elements over a product need one entry per factor");
        comps.push_back(A->factors[0]->base().parse(e.get<std::string>()));
      } else if (e.is_array() && static_cast<int>(e.size()) == A->nfactors()) {
        for (int f = 0; f < A->nfactors(); ++f) comps.push_back(A->factors[f]->base().parse(e[f].get<std::string>()));
      } else {
        throw InputError(where + ": malformed Koszul element " + e.dump());
      }
      out.push_back(std::move(comps));
    }
    return out;
  }

  AElem element(const DGFactor& F, const json& coeffs, const std::string& where) const {
    AElem a = F.zero();
    if (!coeffs.is_object()) throw InputError(where + ": coefficients must be an object keyed by basis element");
    for (const auto& [b, v] : coeffs.items()) {
      int idx = -1;
      for (int i = 0; i < F.size(); ++i)
        if (F.basis(i).name == b) idx = i;
      if (idx < 0) throw InputError(where + ": unknown basis element '" + b + "'");
      a[idx] = F.base().parse(v.get<std::string>());
    }
    return a;
  }

  void declare_module(const json& m) {
    std::string name = str(m, "name", "module");
    std::string where = "module '" + name + "'";
    claim(name, where);
    std::string kind = str(m, "kind", where);
    DGModule M;
    if (kind == "shift") {
      M = shift_module(mod(str(m, "of", where), where), integer(m, "n", where), integer(m, "twist", where, 0));
    } else if (kind == "sum") {
      auto parts = strings(m, "of", where);
      if (parts.empty()) throw InputError(where + ": a sum needs at least one summand");
      M = mod(parts[0], where);
      for (std::size_t i = 1; i < parts.size(); ++i) M = direct_sum(M, mod(parts[i], where));
    } else {
      DGRingPtr A = dg(str(m, "ring", where), where);
      int factor = integer(m, "factor", where, 0);
      if (kind == "free") {
        M = free_dg_module(A, integer(m, "shift", where, 0), integer(m, "twist", where, 0));
      } else if (kind == "koszul") {
        if (!m.contains("sequence")) throw InputError(where + ": missing 'sequence'");
        M = koszul_dg_module(A, koszul_sequence(A, m["sequence"], where));
      } else if (kind == "residue_field") {
        M = residue_field_module(A, factor);
      } else if (kind == "h0") {
        M = h0_module(A);
      } else if (kind == "h0_quotient") {
        if (factor < 0 || factor >= A->nfactors()) throw InputError(where + ": factor out of range");
        M = h0_quotient_module(A, factor, parse_all(A->factors[factor]->base(), strings(m, "ideal", where)));
      } else if (kind == "restricted") {
        if (factor < 0 || factor >= A->nfactors()) throw InputError(where + ": factor out of range");
        const GradedRing& R = A->factors[factor]->base();
        PModule P;
        P.twists = m.at("twists").get<std::vector<int>>();
        for (const auto& rel : m.value("relations", json::array())) {
          Column c;
          for (const auto& e : rel) c.push_back(R.parse(e.get<std::string>()));
          P.rels.push_back(std::move(c));
        }
        M = restricted_module(A, factor, P, name);
      } else if (kind == "semifree") {
        if (factor < 0 || factor >= A->nfactors()) throw InputError(where + ": factor out of range");
        const DGFactor& F = *A->factors[factor];
        std::vector<SemifreeGen> gens;
        std::vector<std::vector<std::pair<int, AElem>>> d;
        for (const auto& g : m.at("generators")) {
          gens.push_back(SemifreeGen{integer(g, "cdeg", where), integer(g, "twist", where, 0)});
          std::vector<std::pair<int, AElem>> dg;
          for (const auto& t : g.value("d", json::array()))
            dg.emplace_back(integer(t, "gen", where), element(F, t.at("coefficients"), where));
          d.push_back(std::move(dg));
        }
        M = dg_module_from_presentation(A, factor, std::move(gens), std::move(d), name);
      } else {
        throw InputError(where + ": unknown kind '" + kind + "'");
      }
    }
    mods_[name] = std::move(M);
  }

  // Declarations reachable from a query, for a reproducing sub-scenario.
  json reproducer(const json& q) const {
    std::set<std::string> need;
    std::vector<std::string> todo;
    auto collect = [&](const json& j) {
      for (const auto& [k, v] : j.items()) {
        if (!kReferenceKeys.count(k)) continue;
        if (v.is_string()) todo.push_back(v);
        if (v.is_array())
          for (const auto& s : v)
            if (s.is_string()) todo.push_back(s);
      }
    };
    collect(q);
    std::map<std::string, json> decl;
    for (const char* sec : {"rings", "dg_rings", "modules"})
      for (const auto& d : section(sec)) decl[d.value("name", "")] = d;
    while (!todo.empty()) {
      std::string n = todo.back();
      todo.pop_back();
      if (!need.insert(n).second || !decl.count(n)) continue;
      collect(decl[n]);
    }
    json out{{"schema", kScenarioSchema}};
    if (doc_.contains("options")) out["options"] = doc_["options"];
    for (const char* sec : {"rings", "dg_rings", "modules"}) {
      json a = json::array();
      for (const auto& d : section(sec))
        if (need.count(d.value("name", ""))) a.push_back(d);
      if (!a.empty()) out[sec] = a;
    }
    out["queries"] = json::array({q});
    return out;
  }

  CheckResult run_query(const json& q, int index) {
    CheckResult c;
    c.id = q.value("id", "q" + std::to_string(index + 1));
    c.kind = q.value("op", "");
    c.anchor = anchor_of(c.kind);
    auto t0 = std::chrono::steady_clock::now();
    try {
      evaluate(q, c);
      if (q.contains("expect")) {
        c.expected = q["expect"];
        if (c.value != c.expected && c.status == Status::pass) {
          c.status = Status::fail;
          c.detail = "value " + c.value.dump() + " differs from the expected " + c.expected.dump();
        }
      }
    } catch (const CutoffError& e) {
      c.status = Status::indeterminate;
      c.detail = e.what();
    } catch (const InputError& e) {
      c.status = Status::error;
      c.detail = e.what();
    } catch (const std::logic_error& e) {
      c.status = Status::fail;
      c.detail = e.what();
    } catch (const std::exception& e) {
      c.status = Status::error;
      c.detail = e.what();
    }
    if (c.status != Status::pass) c.reproducer = reproducer(q);
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
  }

  void evaluate(const json& q, CheckResult& c) {
    const std::string& op = c.kind;
    std::string where = "query '" + c.id + "'";
    if (op == "proj_dim" || op == "flat_dim" || op == "inj_dim" || op == "proj_dim_by_definition") {
      std::string mn = str(q, "module", where);
      const DGModule& M = mod(mn, where);
      c.subject = op + "(" + mn + ")";
      DimensionReport r = op == "proj_dim"   ? proj_dim(M)
                          : op == "flat_dim" ? flat_dim(M)
                          : op == "inj_dim"  ? inj_dim(M, q.value("baer", false))
                                             : proj_dim_by_definition(M);
      c.value = to_json(r.value);
      c.certificate = to_json(r);
    } else if (op == "profile") {
      std::string mn = str(q, "module", where);
      c.subject = "cohomology of " + mn;
      c.value = to_json(mod(mn, where).profile());
      c.certificate = c.value;
    } else if (op == "depth") {
      if (q.contains("module")) {
        std::string mn = str(q, "module", where);
        const DGModule& M = mod(mn, where);
        c.subject = "seq.depth(" + mn + ")";
        DepthReport r = sequential_depth(M);
        c.value = r.depth;
        c.certificate = to_json(M.ring->factors[0]->base(), r);
      } else {
        std::string rn = str(q, "ring", where);
        DGRingPtr A = dg(rn, where);
        c.subject = "seq.depth(" + rn + ")";
        DepthReport r = sequential_depth(A);
        c.value = r.depth;
        c.certificate = to_json(A->factors[0]->base(), r);
      }
    } else if (op == "regular_sequence") {
      std::string rn = str(q, "ring", where);
      DGRingPtr A = dg(rn, where);
      c.subject = "regularity on " + rn;
      RegularityReport r = is_regular_sequence(A, koszul_sequence(A, q.at("sequence"), where));
      c.value = r.regular;
      c.certificate = to_json(r);
    } else if (op == "local_cohomology" || op == "lcm" || op == "gorenstein" || op == "dualizing" ||
               op == "small_finitistic" || op == "fpd_bounds") {
      std::string rn = str(q, "ring", where);
      DGRingPtr A = dg(rn, where);
      c.subject = op + "(" + rn + ")";
      if (op == "local_cohomology") {
        LocalCohomologyReport r = local_cohomology(A);
        c.value = r.amp();
        c.certificate = to_json(r);
      } else if (op == "lcm") {
        LocalCohomologyReport r = local_cohomology(A);
        c.value = r.amp() == A->amp();
        c.certificate = {{"local_cohomology", to_json(r)}, {"amp", A->amp()}};
      } else if (op == "gorenstein") {
        DimensionReport r = inj_dim(free_dg_module(A));
        c.value = r.value.is_finite();
        c.certificate = to_json(r);
      } else if (op == "dualizing") {
        DualizingReport r = dualizing_dg_module(A);
        c.value = to_json(r.injdim.value);
        c.certificate = to_json(r);
        if (!r.biduality) throw std::logic_error("biduality fails in the certified window");
      } else if (op == "small_finitistic") {
        FinitisticReport r = small_finitistic_dims(A);
        c.value = *r.fpd;
        c.certificate = to_json(r);
      } else {
        FinitisticReport r = fpd_bounds(A);
        c.value = {r.FPD.lo, r.FPD.hi};
        c.certificate = to_json(r);
      }
    } else if (op == "witness" || op == "ffd_witness") {
      std::string rn = str(q, "ring", where);
      DGRingPtr A = dg(rn, where);
      int n = integer(q, "n", where);
      c.subject = op + "(" + rn + ", " + std::to_string(n) + ")";
      if (op == "witness") {
        WitnessRecipe r = bass_witness_recipe(A, n);
        c.certificate = to_json(A->factors[r.factor]->base(), r);
        if (!r.available) {
          c.status = Status::skipped;
          c.detail = r.reason;
          return;
        }
        c.value = r.witness->proj_dim;
        if (!r.verified) throw std::logic_error("witness does not reach projective dimension " + std::to_string(n));
      } else {
        DGModule M = ffd_witness(A, n);
        DimensionReport r = flat_dim(M);
        c.value = to_json(r.value);
        c.certificate = {{"module", M.label}, {"flat_dim", to_json(r)}};
      }
    } else if (op == "hochschild") {
      std::string bn = str(q, "base", where), an = str(q, "algebra", where);
      c.subject = "HH(" + an + "/" + bn + ")";
      HochschildReport r = hochschild_table(ring(bn, where), ring(an, where), integer(q, "range", where, 4));
      c.value = r.proj_dim;
      c.certificate = to_json(r);
      c.certificate["vanishing"] = hochschild_vanishing_check(r);
      if (!c.certificate["vanishing"].get<bool>()) throw std::logic_error("Hochschild vanishing fails");
    } else if (op == "ext" || op == "tor") {
      std::string sn = str(q, "source", where), tn = str(q, "target", where);
      const DGModule& X = mod(sn, where);
      const DGModule& M = mod(tn, where);
      int factor = integer(q, "factor", where, 0);
      auto [lo, hi] = opt_.window_or_default();
      c.subject = (op == "ext" ? "RHom(" : "tensor(") + sn + ", " + tn + ")";
      Complex C = op == "ext" ? rhom(X, M, factor, hi) : derived_tensor(X, M, factor, lo);
      CohomologyProfile p = cohomology_profile(C, lo, hi);
      json degrees = json::array();
      for (const auto& [i, H] : p.H) degrees.push_back(op == "ext" ? i : -i);
      c.value = degrees;
      c.certificate = {{"window", {lo, hi}}, {"profile", to_json(p)}};
    } else if (op == "gorenstein_bound") {
      std::string rn = str(q, "ring", where);
      std::vector<DGModule> corpus;
      for (const auto& n : strings(q, "modules", where)) corpus.push_back(mod(n, where));
      c.subject = "sharpened bound over " + rn;
      GorensteinBoundReport r = gorenstein_projdim_bound_check(dg(rn, where), corpus);
      c.value = static_cast<int>(r.entries.size());
      c.certificate = to_json(r);
    } else {
      throw InputError(where + ": unknown query '" + op + "'");
    }
  }
};

}  // namespace

VerificationReport run_scenario(const json& scenario, const RunOptions& given) {
  if (!scenario.is_object()) throw InputError("scenario must be a JSON object");
  RunOptions opt = given;
  if (scenario.contains("options")) {
    const json& o = scenario["options"];
    if (!opt.field && o.contains("field")) opt.field = Field::parse(o["field"].get<std::string>());
    if (!opt.cutoff && o.contains("cutoff")) opt.cutoff = o["cutoff"].get<int>();
    if (!opt.window && o.contains("window")) opt.window = parse_window(o["window"].get<std::string>());
  }
  if (opt.cutoff && (*opt.cutoff < 1 || *opt.cutoff > 1000000)) throw InputError("cutoff must lie in [1, 1000000]");
  GeneratorBudgetScope budget(opt.cutoff.value_or(kMaxGenerators));
  Scenario s(scenario, opt);
  try {
    s.declare();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed declaration: ") + e.what());
  }
  return s.run();
}

VerificationReport run_scenario_file(const std::string& path, const RunOptions& opt) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scenario file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return run_scenario(parse_scenario_text(buf.str(), path), opt);
}

}  // namespace findim
