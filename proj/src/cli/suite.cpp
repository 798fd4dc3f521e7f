#include <chrono>
#include <functional>
#include <random>

#include "findim/cli.hpp"
#include "findim/corpus.hpp"

namespace findim {

namespace {

struct Ctx {
  Field k;
  int seed;
  std::mt19937 rng(unsigned salt) const { return std::mt19937(static_cast<unsigned>(seed) * 7919u + salt); }
};

using Body = std::function<void(const Ctx&, CheckResult&)>;

struct Entry {
  SuiteCheck info;
  Body body;
};

void require(bool ok, CheckResult& c, const std::string& what, json instance = nullptr) {
  if (ok || c.status == Status::fail) return;
  c.status = Status::fail;
  c.detail = what;
  c.reproducer = {{"instance", std::move(instance)}};
}

json instance(const DGRingPtr& A, const DGModule& M) { return {{"ring", A->label}, {"module", M.label}}; }

std::vector<std::vector<Poly>> seq_of(const DGRingPtr& A, const std::vector<std::vector<std::string>>& elems) {
  std::vector<std::vector<Poly>> out;
  for (const auto& e : elems) {
    std::vector<Poly> comps;
    for (int f = 0; f < A->nfactors(); ++f) comps.push_back(A->factors[f]->base().parse(e[f]));
    out.push_back(std::move(comps));
  }
  return out;
}

// Restriction of M to one factor, as a module over that factor.
DGModule on_factor(const DGModule& M, int f) {
  DGModule N;
  N.ring = factor_ring(M.ring, f);
  N.label = M.label;
  N.parts.push_back(M.parts[f]);
  return N;
}

void koszul_projdim(const Ctx& x, CheckResult& c) {
  struct Case {
    DGRingPtr A;
    std::vector<std::vector<std::string>> elems;
  };
  auto P = fixture_polynomial(x.k), K = fixture_koszul(x.k), T = fixture_trivial_extension(x.k);
  std::vector<Case> cases{{P, {{"x"}}},
                          {P, {{"x"}, {"y"}}},
                          {P, {{"x"}, {"y"}, {"x+y"}}},
                          {K, {{"y"}}},
                          {K, {{"x"}, {"y"}}},
                          {K, {{"y"}, {"x*y"}, {"y^2"}}},
                          {T, {{"x", "0"}}},
                          {T, {{"x", "0"}, {"x^2", "0"}}},
                          {T, {{"x", "0"}, {"0", "0"}, {"x^3", "0"}}}};
  c.value = json::array();
  for (const auto& cs : cases) {
    DGModule M = koszul_dg_module(cs.A, seq_of(cs.A, cs.elems));
    DimValue p = proj_dim(M).value;
    int l = static_cast<int>(cs.elems.size());
    c.value.push_back({{"module", M.label}, {"ring", cs.A->label}, {"length", l}, {"proj_dim", to_json(p)}});
    require(p == DimValue::finite(l), c, "projdim " + p.str() + " != " + std::to_string(l), instance(cs.A, M));
  }
  c.certificate = c.value;
}

void koszul_window(const Ctx& x, CheckResult& c) {
  auto rng = x.rng(2);
  std::vector<DGRingPtr> rings{fixture_polynomial(x.k), fixture_koszul(x.k), fixture_koszul3(x.k)};
  c.value = json::array();
  for (int t = 0; t < 9; ++t) {
    const DGRingPtr& A = rings[t % 3];
    DGModule M = random_module(A, rng);
    std::vector<Poly> pool = default_depth_pool(A->factors[0]->base());
    int l = 1 + t % 2;
    std::vector<std::vector<Poly>> a;
    for (int i = 0; i < l; ++i) a.push_back({pool[std::uniform_int_distribution<int>(0, pool.size() - 1)(rng)]});
    DGModule K = koszul_dg_module(A, a);
    CohomologyProfile pm = M.profile();
    CohomologyProfile tp = cohomology_profile(derived_tensor(K, M, 0, pm.inf - l - 2));
    CohomologyProfile hp = cohomology_profile(rhom(K, M, 0, pm.sup + l + 2));
    c.value.push_back({{"koszul", K.label},
                       {"module", M.label},
                       {"inf_tensor", tp.zero ? json(nullptr) : json(tp.inf)},
                       {"sup_rhom", hp.zero ? json(nullptr) : json(hp.sup)},
                       {"inf", pm.inf},
                       {"sup", pm.sup}});
    require(tp.zero || tp.inf >= pm.inf - l, c, "tensor inf below inf(M) - l", instance(A, M));
    require(hp.zero || hp.sup <= pm.sup + l, c, "RHom sup above sup(M) + l", instance(A, M));
  }
  c.certificate = c.value;
}

void small_finitistic(const Ctx& x, CheckResult& c) {
  c.value = json::object();
  json cert = json::array();
  for (const auto& [fx, expected] : small_finitistic_fixtures(x.k)) {
    FinitisticReport r = small_finitistic_dims(fx.A);
    c.value[fx.name] = *r.fpd;
    cert.push_back(to_json(r));
    require(r.fpd == expected && r.ffd == expected && r.fid == expected, c,
            "small finitistic dimensions of " + fx.name + " differ from " + std::to_string(expected),
            {{"ring", fx.A->label}});
    require(r.fpd_witness && r.fpd_witness->value() == expected, c, "Koszul witness misses the value",
            {{"ring", fx.A->label}});
    require(!r.fid_witness_value || *r.fid_witness_value == expected, c, "injective witness misses the value",
            {{"ring", fx.A->label}});
    require(r.depth->depth - r.amp == expected, c, "seq.depth - amp differs", {{"ring", fx.A->label}});
  }
  c.certificate = cert;
}

void fpd_interval(const Ctx& x, CheckResult& c) {
  auto G = fixture_koszul3(x.k);
  FinitisticReport g = fpd_bounds(G);
  WitnessRecipe w = bass_witness_recipe(G, 2);
  auto T = fixture_trivial_extension(x.k);
  FinitisticReport t = fpd_bounds(T);
  WitnessRecipe v = bass_witness_recipe(T, 1);
  c.value = {{"gorenstein", {{"FPD", {g.FPD.lo, g.FPD.hi}}, {"witness", w.description}}},
             {"trivial_extension", {{"FPD", {t.FPD.lo, t.FPD.hi}}, {"witness", v.witness ? v.witness->label : ""}}}};
  c.certificate = {{"gorenstein", to_json(g)},
                   {"gorenstein_witness", to_json(G->factors[0]->base(), w)},
                   {"trivial_extension", to_json(t)},
                   {"trivial_extension_witness", to_json(T->factors[0]->base(), v)}};
  require(g.FPD.lo == 1 && g.FPD.hi == 1 && g.gorenstein_case, c, "Gorenstein collapse to 1 fails",
          {{"ring", G->label}});
  require(w.verified && w.description == "K(A; y, z)" && w.witness->value() == 1, c,
          "witness K(A; y, z) does not attain 1", {{"ring", G->label}});
  require(t.FPD.lo == 1 && t.FPD.hi == 1 && t.witness_case, c, "witness collapse to 1 fails", {{"ring", T->label}});
  require(v.verified && v.witness->inf == 0 && v.witness->value() == 1 && v.witness->label.rfind("K(A; x)", 0) == 0,
          c, "residue field witness on k[x] does not attain 1", {{"ring", T->label}});
}

DGRingPtr gorenstein_family(const Field& k, int d, int n) {
  std::vector<std::string> vars{"x", "y", "z", "w"};
  vars.resize(d + 1);
  auto B = GradedRing::make(k, vars, std::vector<int>(vars.size(), 1), {});
  std::vector<Poly> seq{B->parse("x")};
  std::string m = "x";
  for (int i = 0; i < n; ++i) {
    m += "*y";
    seq.push_back(B->parse(m));
  }
  return build_koszul_dg(B, seq);
}

DGRingPtr trivial_family(const Field& k, int d, int n) {
  std::vector<std::string> vars{"x", "y", "z"};
  vars.resize(d);
  auto B = GradedRing::make(k, vars, std::vector<int>(vars.size(), 1), {});
  return build_trivial_extension(B, GradedRing::make(k, {}, {}, {}), n);
}

void families(const Ctx& x, CheckResult& c, bool gorenstein) {
  c.value = json::array();
  json cert = json::array();
  for (int d = 1; d <= 2; ++d)
    for (int n = 1; n <= 2; ++n) {
      DGRingPtr A = gorenstein ? gorenstein_family(x.k, d, n) : trivial_family(x.k, d, n);
      FinitisticReport r = fpd_bounds(A);
      int want = gorenstein ? d - n : d;
      c.value.push_back({{"d", d}, {"n", n}, {"ring", A->label}, {"FPD", {r.FPD.lo, r.FPD.hi}}});
      cert.push_back(to_json(r));
      bool shape = A->h0_dim() == d && A->amp() == n;
      bool flag = gorenstein ? r.gorenstein_case : r.witness_case;
      require(shape && flag && r.FPD.collapsed() && r.FPD.lo == want, c,
              "FPD(" + A->label + ") is not " + std::to_string(want), {{"ring", A->label}, {"d", d}, {"n", n}});
    }
  c.certificate = cert;
}

struct CorpusEntry {
  DGRingPtr A;
  DGModule M;
  DimValue pd;
};

// Randomized finite-flat-dimension modules across the property families.
std::vector<CorpusEntry> finite_corpus(const Ctx& x, int count) {
  auto rng = x.rng(4);
  auto fams = property_families(x.k);
  std::vector<CorpusEntry> out;
  for (int attempt = 0; static_cast<int>(out.size()) < count && attempt < 6 * count; ++attempt) {
    const DGRingPtr& A = fams[attempt % fams.size()].A;
    DGModule M = random_module(A, rng);
    if (!flat_dim(M).value.is_finite()) continue;
    out.push_back({A, M, proj_dim(M).value});
  }
  return out;
}

void global_bound(const Ctx& x, CheckResult& c) {
  auto corpus = finite_corpus(x, 50);
  c.value = {{"modules", corpus.size()}};
  json cert = json::array();
  require(corpus.size() == 50, c, "corpus has fewer than 50 finite-flat-dimension modules");
  for (const auto& e : corpus) {
    int inf = e.M.inf();
    cert.push_back({{"ring", e.A->label}, {"module", e.M.label}, {"proj_dim", to_json(e.pd)}, {"inf", inf}});
    require(e.pd.is_finite() && e.pd.value <= e.A->h0_dim() - inf, c, "projdim exceeds dim H^0(A) - inf(M)",
            instance(e.A, e.M));
  }
  c.certificate = cert;
}

void auslander_buchsbaum(const Ctx& x, CheckResult& c) {
  auto corpus = finite_corpus(x, 50);
  json cert = json::array();
  int checked = 0;
  for (const auto& e : corpus)
    for (int f = 0; f < e.A->nfactors(); ++f) {
      DGModule N = on_factor(e.M, f);
      if (N.is_zero()) continue;
      DGRingPtr Af = N.ring;
      DimValue p = proj_dim(N).value;
      if (!p.is_finite()) continue;
      int depth = sequential_depth(Af).depth;
      int bound = depth - N.inf() - Af->amp();
      ++checked;
      cert.push_back({{"ring", Af->label}, {"module", N.label}, {"proj_dim", p.value}, {"bound", bound}});
      require(p.value <= bound, c, "projdim exceeds seq.depth - inf - amp", instance(Af, N));
    }
  c.value = {{"checked", checked}};
  c.certificate = cert;
}

void definition_oracle(const Ctx& x, CheckResult& c) {
  auto rng = x.rng(6);
  std::vector<DGRingPtr> rings{fixture_polynomial(x.k), fixture_koszul(x.k), fixture_nonreduced(x.k),
                               fixture_trivial_extension(x.k)};
  json cert = json::array();
  int agree = 0;
  for (int t = 0; t < 25; ++t) {
    const DGRingPtr& A = rings[t % rings.size()];
    DGModule M = random_module(A, rng);
    DimValue a = proj_dim(M).value, b = proj_dim_by_definition(M).value;
    cert.push_back({{"ring", A->label}, {"module", M.label}, {"reduction", to_json(a)}, {"definition", to_json(b)}});
    agree += a == b;
    require(a == b, c, "reduction gives " + a.str() + ", definition gives " + b.str(), instance(A, M));
  }
  c.value = {{"instances", 25}, {"agree", agree}};
  c.certificate = cert;
}

void flat_equals_proj(const Ctx& x, CheckResult& c) {
  auto rng = x.rng(8);
  auto fams = property_families(x.k);
  json cert = json::array();
  for (int t = 0; t < 12; ++t) {
    const DGRingPtr& A = fams[t % fams.size()].A;
    DGModule M = random_module(A, rng);
    DimValue p = proj_dim(M).value, f = flat_dim(M).value;
    cert.push_back({{"module", M.label}, {"ring", A->label}, {"proj_dim", to_json(p)}, {"flat_dim", to_json(f)}});
    require(p == f, c, "flat and projective dimension differ", instance(A, M));
  }
  c.value = {{"instances", 12}};
  c.certificate = cert;
}

void dualizing(const Ctx& x, CheckResult& c) {
  auto rng = x.rng(10);
  json cert = json::array();
  c.value = json::object();
  for (const DGRingPtr& A : {fixture_polynomial(x.k), fixture_koszul(x.k), fixture_koszul3(x.k)}) {
    DualizingReport D = dualizing_dg_module(A);
    int dim = A->h0_dim();
    c.value[A->label] = {{"inf", D.inf}, {"injdim", to_json(D.injdim.value)}};
    json entry{{"ring", A->label}, {"report", to_json(D)}, {"modules", json::array()}};
    require(D.inf == -dim, c, "dualizing module not normalized", {{"ring", A->label}});
    require(D.biduality, c, "biduality fails", {{"ring", A->label}});
    require(D.injdim.value == DimValue::finite(D.inf + dim), c, "injdim(R) != inf(R) + dim H^0(A)",
            {{"ring", A->label}});
    for (int t = 0; t < 3; ++t) {
      DGModule M = random_module(A, rng);
      int inf = M.inf();
      CohomologyProfile E = cohomology_profile(rhom(D.R, M, 0, M.sup() - D.inf + 4));
      require(!E.zero && E.inf <= inf - D.inf, c, "inf RHom(R, M) > inf(M) - inf(R)", instance(A, M));
      json m{{"module", M.label}, {"inf_rhom", E.zero ? json(nullptr) : json(E.inf)}};
      if (flat_dim(M).value.is_finite()) {
        CohomologyProfile T = cohomology_profile(derived_tensor(D.R, M, 0, D.inf + inf - 2));
        require(!T.zero && T.inf >= D.inf + inf, c, "inf(R tensor M) < inf(R) + inf(M)", instance(A, M));
        m["inf_tensor"] = T.zero ? json(nullptr) : json(T.inf);
      }
      entry["modules"].push_back(m);
    }
    cert.push_back(entry);
  }
  c.certificate = cert;
}

void lcm_equivalence(const Ctx& x, CheckResult& c) {
  auto fixtures = small_finitistic_fixtures(x.k);
  fixtures.push_back({{"k[x,y] ⋉ (k[x,y]/(x))[1]", fixture_depth_drop(x.k)}, 0});
  c.value = json::object();
  json cert = json::array();
  bool designed_false = false;
  for (const auto& [fx, _] : fixtures) {
    bool lcm = is_local_cohen_macaulay(fx.A);
    FinitisticReport r = small_finitistic_dims(fx.A);
    bool formula = *r.fpd == r.dim - r.amp;
    c.value[fx.name] = lcm;
    cert.push_back({{"ring", fx.A->label},
                    {"local_cohomology", to_json(local_cohomology(fx.A))},
                    {"fpd", *r.fpd},
                    {"dim", r.dim},
                    {"amp", r.amp}});
    require(lcm == formula, c, "local-Cohen-Macaulay test disagrees with fpd = dim - amp", {{"ring", fx.A->label}});
    if (fx.A->kind == DGKind::trivial_extension) designed_false = !lcm;
  }
  require(designed_false, c, "the depth-drop trivial extension is not detected");
  c.certificate = cert;
}

void hochschild(const Ctx& x, CheckResult& c) {
  auto k = GradedRing::make(x.k, {}, {}, {});
  auto B1 = GradedRing::make(x.k, {"x"}, {1}, {});
  auto B2 = GradedRing::make(x.k, {"x", "y"}, {1, 1}, {});
  HochschildReport h1 = hochschild_table(k, B1, 4), h2 = hochschild_table(k, B2, 5);
  c.value = {{"k[x]", {{"proj_dim", h1.proj_dim}, {"envelope_dim", h1.envelope_dim}}},
             {"k[x,y]", {{"proj_dim", h2.proj_dim}, {"envelope_dim", h2.envelope_dim}}}};
  c.certificate = {{"k[x]", to_json(h1)}, {"k[x,y]", to_json(h2)}};
  require(hochschild_vanishing_check(h1) && hochschild_vanishing_check(h2), c, "vanishing above dim(B ⊗ B) fails");
  require(h1.proj_dim == 1 && h2.proj_dim == 2, c, "diagonal resolution lengths differ from 1 and 2");
  // HH_1(k[x]/k) is free of rank one on dx, in internal degree 1.
  require(h1.HH_lower.count(1) && h1.HH_lower.at(1) == std::vector<long>{0, 1, 1, 1, 1}, c,
          "HH_1(k[x]/k) is not k[x](-1)");
}

void betti_presentations(const Ctx& x, CheckResult& c) {
  auto rng = x.rng(12);
  auto R = GradedRing::make(x.k, {"x", "y", "z"}, {1, 1, 1}, {});
  auto S = GradedRing::make(x.k, {"x", "y"}, {1, 1}, {"x^2"});
  auto col = [](const GradedRing& T, std::vector<std::string> e) {
    Column out;
    for (const auto& s : e) out.push_back(T.parse(s));
    return out;
  };
  std::vector<std::pair<RingPtr, PModule>> mods{
      {R, PModule{{0}, {col(*R, {"x"}), col(*R, {"y"}), col(*R, {"z"})}}},
      {R, PModule{{0}, {col(*R, {"x*y"}), col(*R, {"y*z"}), col(*R, {"x*z"})}}},
      {R, PModule{{0, 0}, {col(*R, {"x", "y"}), col(*R, {"z", "0"})}}},
      {S, PModule{{0}, {col(*S, {"x*y"})}}},
      {S, PModule{{0}, {col(*S, {"y^2"})}}}};
  json cert = json::array();
  for (int t = 0; t < 10; ++t) {
    const auto& [ring, M] = mods[t % mods.size()];
    PModule P = redundant_presentation(*ring, M, rng);
    auto a = minimal_free_resolution(ring, M, 5).betti();
    auto b = minimal_free_resolution(ring, P, 5).betti();
    cert.push_back({{"ring", ring->describe()}, {"generators", P.rank()}, {"relations", P.rels.size()}, {"betti", b}});
    require(a == b, c, "Betti numbers depend on the presentation", {{"ring", ring->describe()}, {"trial", t}});
  }
  c.value = {{"presentations", 10}};
  c.certificate = cert;
}

void sharpened_bound(const Ctx& x, CheckResult& c) {
  auto rng = x.rng(14);
  auto A = fixture_koszul(x.k);
  const GradedRing& R = A->factors[0]->base();
  DGModule K = koszul_dg_module(A, {{R.parse("y")}});
  std::vector<DGModule> corpus{K, free_dg_module(A), shift_module(K, 3)};
  for (int t = 0; t < 6; ++t) corpus.push_back(random_module(A, rng));
  GorensteinBoundReport r = gorenstein_projdim_bound_check(A, corpus);
  c.value = {{"checked", r.entries.size()}, {"skipped", r.skipped}};
  c.certificate = to_json(r);
  require(r.entries.size() >= 3 && r.entries[0].proj_dim == 1 && r.entries[0].bound == 1, c,
          "K(A; y) does not meet the bound with equality");
}

void witnesses(const Ctx& x, CheckResult& c) {
  json cert = json::array();
  c.value = json::array();
  for (const DGRingPtr& A : {fixture_koszul(x.k), fixture_koszul3(x.k), fixture_trivial_extension(x.k)}) {
    for (int n = 0; n <= A->h0_dim(); ++n) {
      WitnessRecipe r = bass_witness_recipe(A, n);
      cert.push_back(to_json(A->factors[r.factor]->base(), r));
      c.value.push_back({{"ring", A->label}, {"n", n}, {"verified", r.verified}});
      require(r.verified, c, "witness for n = " + std::to_string(n) + " not verified", {{"ring", A->label}, {"n", n}});
      if (n >= 1) {
        DimValue fd = flat_dim(ffd_witness(A, n)).value;
        require(fd == DimValue::finite(n - 1), c, "flat dimension witness misses n - 1",
                {{"ring", A->label}, {"n", n}});
      }
    }
  }
  c.certificate = cert;
}

void examples(const Ctx& x, CheckResult& c) {
  auto P = fixture_polynomial(x.k), K = fixture_koszul(x.k), Q = fixture_nonreduced(x.k);
  auto seq = [](const DGRingPtr& A, std::vector<std::string> xs) {
    std::vector<std::vector<Poly>> out;
    for (const auto& s : xs) out.push_back({A->factors[0]->base().parse(s)});
    return out;
  };
  bool r1 = is_regular_sequence(P, seq(P, {"x", "y"})).regular;
  bool r2 = is_regular_sequence(K, seq(K, {"y"})).regular;
  bool r3 = is_regular_sequence(Q, seq(Q, {"x"})).regular;
  int d1 = sequential_depth(P).depth, d2 = sequential_depth(K).depth, d3 = sequential_depth(Q).depth;
  int a1 = local_cohomology(P).amp(), a2 = local_cohomology(Q).amp(), a3 = local_cohomology(K).amp();
  bool g1 = is_gorenstein(P), g2 = is_gorenstein(K), g3 = is_gorenstein(Q);
  auto R1 = GradedRing::make(x.k, {"x"}, {1}, {"x^2"});
  DimValue inf_pd = proj_dim(h0_module(build_koszul_dg(R1, {R1->parse("x")}))).value;
  c.value = {{"regular", {r1, r2, r3}},
             {"depth", {d1, d2, d3}},
             {"local_cohomology_amp", {a1, a2, a3}},
             {"gorenstein", {g1, g2, g3}},
             {"projdim_H0_nonregular_koszul", to_json(inf_pd)}};
  c.certificate = c.value;
  require(r1 && r2 && !r3, c, "regular sequence examples");
  require(d1 == 2 && d2 == 1 && d3 == 0, c, "sequential depth examples");
  require(a1 == 0 && a2 == 1 && a3 == 1, c, "local cohomology amplitude examples");
  require(g1 && g2 && !g3, c, "Gorenstein examples");
  require(inf_pd.is_infinite(), c, "H^0 over K(k[x]/(x^2); x) should have infinite projective dimension");
}

const std::vector<Entry>& suite() {
  static const std::vector<Entry> entries{
      {{"koszul.projdim", "projdim_A(K(A;a)) = ℓ(a) for a proper ideal",
        "Koszul DG-modules of length 1..3 over k[x,y], K(k[x,y]; x, xy) and (k[x] x k) ⋉ k[1]"},
       koszul_projdim},
      {{"koszul.window", "inf(K(A;a) ⊗ᴸ M) ≥ inf(M) − ℓ(a) and sup(RHom(K(A;a),N)) ≤ sup(N) + ℓ(a)",
        "seeded random modules and Koszul sequences of length 1 and 2"},
       koszul_window},
      {{"finitistic.small", "fpd(A) = ffd(A) = fid(A) = seq.depth_A(A) − amp(A)",
        "k[x,y] -> 2, K(k[x,y]; x, xy) -> 0, K(k[x,y,z]; x, xy) -> 1, k[x,y]/(x^2, xy) -> 0"},
       small_finitistic},
      {{"finitistic.interval", "dim H⁰(A) − amp(A) ≤ FPD(A) ≤ dim H⁰(A); FPD(A) = dim H⁰(A) − amp(A) for Gorenstein A, H⁰(A)",
        "Gorenstein collapse on K(k[x,y,z]; x, xy), witness collapse on (k[x] x k) ⋉ k[1]"},
       fpd_interval},
      {{"families.gorenstein", "FPD(A) = dim H⁰(A) − amp(A) for K(B; b_1..b_{n+k}), B Gorenstein, b_1..b_k regular",
        "d, n in {1, 2}"},
       [](const Ctx& x, CheckResult& c) { families(x, c, true); }},
      {{"families.trivial-extension", "FPD(A′) = dim H⁰(A′) for A′ = (B × k) ⋉ k[n]", "d, n in {1, 2}"},
       [](const Ctx& x, CheckResult& c) { families(x, c, false); }},
      {{"bounds.global", "projdim_A(M) ≤ dim H⁰(A) − inf(M) for finite flat dimension",
        "50 seeded random modules across three DG-ring families"},
       global_bound},
      {{"bounds.auslander-buchsbaum", "projdim_A(M) ≤ seq.depth_A(A) − inf(M) − amp(A)",
        "the same corpus, factor by factor on products"},
       auslander_buchsbaum},
      {{"oracle.definition", "projdim_A(M) = projdim_{H⁰(A)}(H⁰(A) ⊗ᴸ_A M), against Ext vanishing over amplitude-zero test modules",
        "25 seeded random instances"},
       definition_oracle},
      {{"flat.equals-proj", "projdim_A(M) = flatdim_A(M) for finitely generated cohomology",
        "12 seeded random instances"},
       flat_equals_proj},
      {{"dualizing", "injdim_A(R) = inf(R) + dim H⁰(A); inf RHom(R,M) ≤ inf(M) − inf(R); inf(R ⊗ᴸ M) ≥ inf(R) + inf(M)",
        "Gorenstein fixtures with seeded random modules"},
       dualizing},
      {{"lcm.equivalence", "amp(RΓ(A)) = amp(A) iff fpd(A) = dim H⁰(A) − amp(A)",
        "small finitistic fixtures and the depth-drop trivial extension"},
       lcm_equivalence},
      {{"gorenstein.sharpened", "projdim_A(M) ≤ dim H⁰(A) − amp(A) − inf(M) when A and H⁰(A) are Gorenstein",
        "K(k[x,y]; x, xy) with K(A; y), A, K(A; y)[3] and seeded random modules"},
       sharpened_bound},
      {{"witness.construction", "for 0 ≤ n ≤ dim H⁰(A) some M has sup(M) = 0, inf(M) ≥ inf(A), projdim_A(M) = n",
        "recipes for every n, and flat dimension witnesses of flatdim n − 1"},
       witnesses},
      {{"hochschild", "HH_i(B/A) = HHⁱ(B/A) = 0 for i > dim(B ⊗_A B) when B is smooth over A",
        "B = k[x] and k[x,y] over k"},
       hochschild},
      {{"determinism.betti", "Betti numbers of a minimal free resolution do not depend on the presentation",
        "10 seeded redundant presentations"},
       betti_presentations},
      {{"examples.basic", "regularity, depth, local cohomology and Gorenstein examples",
        "fixed fixtures"},
       examples}};
  return entries;
}

CheckResult run_entry(const Entry& e, const Ctx& x) {
  CheckResult c;
  c.id = e.info.id;
  c.kind = "builtin";
  c.subject = e.info.description;
  c.anchor = e.info.anchor;
  auto t0 = std::chrono::steady_clock::now();
  try {
    e.body(x, c);
  } catch (const CutoffError& err) {
    c.status = Status::indeterminate;
    c.detail = err.what();
  } catch (const std::exception& err) {
    c.status = Status::fail;
    c.detail = err.what();
  }
  if (c.status != Status::pass) {
    json r = c.reproducer.is_null() ? json::object() : c.reproducer;
    r["command"] = "findim verify --filter " + c.id + " --seed " + std::to_string(x.seed);
    c.reproducer = r;
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

}  // namespace

std::vector<SuiteCheck> builtin_checks() {
  std::vector<SuiteCheck> out;
  for (const auto& e : suite()) out.push_back(e.info);
  return out;
}

VerificationReport verify_builtin_suite(const RunOptions& opt) {
  GeneratorBudgetScope budget(opt.cutoff.value_or(kMaxGenerators));
  Ctx x{opt.field_or_default(), opt.seed};
  VerificationReport rep;
  rep.options = opt.echo();
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& e : suite())
    if (e.info.id.find(opt.filter) != std::string::npos) rep.checks.push_back(run_entry(e, x));
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string explain(const std::string& id, const RunOptions& opt) {
  for (const auto& e : suite()) {
    if (e.info.id != id) continue;
    GeneratorBudgetScope budget(opt.cutoff.value_or(kMaxGenerators));
    CheckResult c = run_entry(e, Ctx{opt.field_or_default(), opt.seed});
    std::string s = "check: " + c.id + "\nanchor: " + c.anchor + "\ninstances: " + c.subject +
                    "\nstatus: " + to_string(c.status) + "\ndigest: " + c.digest() + "\n";
    if (!c.detail.empty()) s += "detail: " + c.detail + "\n";
    s += "certificate:\n" + c.certificate.dump(2) + "\n";
    return s;
  }
  throw InputError("unknown check '" + id + "'");
}

}  // namespace findim
