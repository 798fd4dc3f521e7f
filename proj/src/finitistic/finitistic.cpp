#include "findim/finitistic.hpp"

#include <set>
#include <stdexcept>

namespace findim {

namespace {

Witness make_witness(std::string label, DGModule M) {
  Witness w;
  w.label = std::move(label);
  DimValue p = proj_dim(M).value;
  if (!p.is_finite()) throw std::logic_error("witness " + w.label + " has projective dimension " + p.str());
  w.proj_dim = p.value;
  CohomologyProfile prof = M.profile();
  w.inf = prof.inf;
  w.sup = prof.sup;
  w.M = std::move(M);
  return w;
}

std::vector<std::vector<Poly>> as_sequence(const std::vector<Poly>& a) {
  std::vector<std::vector<Poly>> out;
  for (const auto& p : a) out.push_back({p});
  return out;
}

std::string join(const GradedRing& R, const std::vector<Poly>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + R.str(a[i]);
  return s;
}

}  // namespace

DGRingPtr h0_ring(const DGRingPtr& A) {
  std::vector<DGRingPtr> parts;
  for (const auto& f : A->factors) parts.push_back(build_ring_dg(f->h0()));
  return build_product_dg(parts);
}

FinitisticReport small_finitistic_dims(const DGRingPtr& A) {
  FinitisticReport rep;
  rep.dim = A->h0_dim();
  rep.amp = A->amp();
  DepthReport depth = sequential_depth(A);
  int value = depth.depth - rep.amp;
  rep.fpd = rep.ffd = rep.fid = value;
  const GradedRing& R = A->factors[0]->base();
  DGModule K = depth.sequence.empty() ? free_dg_module(A) : koszul_dg_module(A, as_sequence(depth.sequence));
  rep.fpd_witness = make_witness(depth.sequence.empty() ? "A" : "K(A; " + join(R, depth.sequence) + ")", K);
  if (rep.fpd_witness->value() != value)
    rep.notes.push_back("Koszul witness attains " + std::to_string(rep.fpd_witness->value()) + ", not " +
                        std::to_string(value));
  DimValue fd = flat_dim(K).value;
  if (!(fd == DimValue::finite(rep.fpd_witness->proj_dim))) rep.notes.push_back("witness flat dimension " + fd.str());
  DimensionReport self = inj_dim(free_dg_module(A));
  if (self.value.is_finite()) {
    rep.fid_witness = "A";
    rep.fid_witness_value = self.value.value;
  } else {
    try {
      DualizingReport D = dualizing_dg_module(A);
      if (D.injdim.value.is_finite()) {
        rep.fid_witness = "dualizing module";
        rep.fid_witness_value = D.injdim.value.value - D.R.sup();
      }
    } catch (const InputError& e) {
      rep.notes.push_back(std::string("no module of finite injective dimension computed: ") + e.what());
    }
  }
  if (rep.fid_witness_value && *rep.fid_witness_value != value)
    rep.notes.push_back("injective witness attains " + std::to_string(*rep.fid_witness_value));
  rep.depth = std::move(depth);
  return rep;
}

FinitisticReport fpd_bounds(const DGRingPtr& A) {
  FinitisticReport rep;
  rep.dim = A->h0_dim();
  rep.amp = A->amp();
  rep.FPD = Interval{rep.dim - rep.amp, rep.dim};
  rep.FFD = Interval{rep.dim - rep.amp - 1, rep.dim};
  rep.gorenstein_case = A->is_local() && is_gorenstein(A) && is_gorenstein(h0_ring(A));
  if (rep.gorenstein_case) {
    rep.FPD.hi = rep.FPD.lo;
    rep.notes.push_back("A and H^0(A) Gorenstein: FPD = dim H^0(A) - amp(A)");
  }
  WitnessRecipe recipe = bass_witness_recipe(A, rep.dim);
  if (recipe.witness) rep.witnesses.push_back(*recipe.witness);
  else rep.notes.push_back("witness for n = " + std::to_string(rep.dim) + ": " + recipe.reason);
  for (const auto& w : rep.witnesses) {
    if (w.value() > rep.dim) throw std::logic_error("witness " + w.label + " exceeds the upper bound");
    if (w.value() == rep.dim && !rep.witness_case) {
      rep.witness_case = true;
      rep.FPD.lo = rep.dim;
      rep.notes.push_back("witness " + w.label + " attains projdim + inf = dim H^0(A)");
    }
  }
  if (rep.FPD.lo > rep.FPD.hi) throw std::logic_error("Gorenstein and witness collapses disagree");
  return rep;
}

GorensteinBoundReport gorenstein_projdim_bound_check(const DGRingPtr& A, const std::vector<DGModule>& corpus) {
  if (!A->is_local()) throw InputError("the sharpened bound requires a graded-local DG-ring");
  if (!is_gorenstein(A)) throw InputError(A->label + " is not Gorenstein");
  if (!is_gorenstein(h0_ring(A))) throw InputError("H^0(" + A->label + ") is not Gorenstein");
  GorensteinBoundReport rep;
  int dim = A->h0_dim(), amp = A->amp();
  for (const auto& M : corpus) {
    if (M.is_zero() || !flat_dim(M).value.is_finite()) {
      ++rep.skipped;
      continue;
    }
    GorensteinBoundEntry e;
    e.label = M.label;
    e.proj_dim = proj_dim(M).value.value;
    e.inf = M.inf();
    e.bound = dim - amp - e.inf;
    e.ok = e.proj_dim <= e.bound;
    if (!e.ok)
      throw std::logic_error("projdim " + std::to_string(e.proj_dim) + " of " + e.label + " exceeds " +
                             std::to_string(e.bound));
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

WitnessRecipe bass_witness_recipe(const DGRingPtr& A, int n) {
  if (n < 0 || n > A->h0_dim())
    throw InputError("witness length " + std::to_string(n) + " outside [0, dim H^0(A)]");
  WitnessRecipe r;
  r.n = n;
  if (n == 0) {
    r.available = true;
    r.localization = "s = 1";
    r.description = "A";
    r.witness = make_witness("A", free_dg_module(A));
    r.verified = r.witness->proj_dim == 0;
    return r;
  }
  for (int f = 0; f < A->nfactors(); ++f) {
    const DGFactor& F = *A->factors[f];
    if (F.is_zero() || F.h0_dim() < n) continue;
    DGRingPtr Af = factor_ring(A, f);
    DepthReport depth = sequential_depth(Af);
    if (depth.depth < n) continue;
    const GradedRing& R = F.base();
    std::vector<Poly> seq(depth.sequence.begin(), depth.sequence.begin() + n);
    r.available = true;
    r.factor = f;
    r.sequence.assign(seq.begin(), seq.end() - 1);
    r.s = seq.back();
    std::set<int> vars;
    for (const auto& p : r.sequence)
      for (const auto& t : p)
        for (int v = 0; v < R.nvars(); ++v)
          if (t.mono.exp[v]) vars.insert(v);
    for (int v : vars) r.prime.push_back(R.poly().names()[v]);
    r.localization = A->nfactors() == 1 ? "s = 1" : "idempotent factor " + std::to_string(f + 1);
    r.localization += ", with A_s replaced by K(A; " + R.str(*r.s) + ")";
    r.description = "K(A; " + join(R, seq) + ")";
    DGModule M = extend_by_zero(A, f, koszul_dg_module(Af, as_sequence(seq)));
    r.witness = make_witness(r.description + (A->nfactors() > 1 ? " on factor " + std::to_string(f + 1) : ""),
                             std::move(M));
    r.verified = r.witness->proj_dim == n && r.witness->sup == 0 && r.witness->inf >= A->inf();
    return r;
  }
  r.reason = "recipe unavailable at desk scale: no factor has a regular sequence of length " + std::to_string(n) +
             " in the search pool";
  return r;
}

DGModule ffd_witness(const DGRingPtr& A, int n) {
  if (n < 1 || n > A->h0_dim()) throw InputError("witness length " + std::to_string(n) + " outside [1, dim H^0(A)]");
  if (n == 1) return free_dg_module(A);
  WitnessRecipe r = bass_witness_recipe(A, n - 1);
  if (!r.witness) throw InputError(r.reason);
  return r.witness->M;
}

namespace {

Poly remap(const Poly& p, const std::vector<int>& to) {
  Poly out;
  for (const auto& t : p) {
    Term u{t.coef, Monomial{}};
    u.mono.deg = t.mono.deg;
    for (std::size_t v = 0; v < to.size(); ++v) u.mono.exp[to[v]] = t.mono.exp[v];
    out.push_back(std::move(u));
  }
  return out;
}

bool uses_only(const Poly& p, int lo, int hi) {
  for (const auto& t : p)
    for (int v = 0; v < kMaxVars; ++v)
      if (t.mono.exp[v] && (v < lo || v >= hi)) return false;
  return true;
}

std::vector<long> hilbert_range(const GradedRing& E, const PModule& M) { return hilbert_values(E, M, 0, 4); }

}  // namespace

HochschildReport hochschild_table(const RingPtr& A, const RingPtr& B, int range) {
  int m = A->nvars(), nb = B->nvars(), c = nb - m;
  if (c < 0 || A->field() != B->field()) throw InputError("B is not an algebra over A");
  for (int v = 0; v < m; ++v)
    if (A->poly().names()[v] != B->poly().names()[v] || A->poly().weights()[v] != B->poly().weights()[v])
      throw InputError("the first variables of B must be those of A");
  if (m + 2 * c > kMaxVars) throw InputError("enveloping ring needs more than " + std::to_string(kMaxVars) + " variables");
  std::vector<Poly> base_rels, extra_rels;
  for (const auto& g : B->relations()) {
    if (uses_only(g, 0, m)) base_rels.push_back(g);
    else if (uses_only(g, m, nb)) extra_rels.push_back(g);
    else throw InputError("B is not flat over A in the implemented sense: relation " + B->str(g) + " mixes variables");
  }
  RingPtr Ab = GradedRing::make(A->poly_ptr(), base_rels);
  for (const auto& g : base_rels)
    if (!A->is_zero(g)) throw InputError("relation " + B->str(g) + " of B does not hold in A");
  for (const auto& g : A->relations())
    if (!Ab->is_zero(g)) throw InputError("relation " + A->str(g) + " of A does not hold in B");

  std::vector<std::string> names = B->poly().names();
  std::vector<int> weights = B->poly().weights();
  for (int j = 0; j < c; ++j) {
    names.push_back(names[m + j] + "'");
    weights.push_back(weights[m + j]);
  }
  auto P = std::make_shared<const PolyRing>(B->field(), names, weights);
  std::vector<int> first(nb), second(nb);
  for (int v = 0; v < nb; ++v) {
    first[v] = v;
    second[v] = v < m ? v : v + c;
  }
  std::vector<Poly> rels = base_rels;
  for (const auto& g : extra_rels) {
    rels.push_back(remap(g, first));
    rels.push_back(remap(g, second));
  }
  HochschildReport rep;
  rep.E = GradedRing::make(P, rels);
  const GradedRing& E = *rep.E;
  rep.envelope = E.describe();
  rep.envelope_dim = E.krull_dimension();
  rep.range = range;
  PModule diag = PModule::free({0});
  for (int j = 0; j < c; ++j) {
    Poly y = poly_monomial(E.field(), Scalar(1), E.poly().var(m + j));
    Poly y2 = poly_monomial(E.field(), Scalar(1), E.poly().var(m + c + j));
    diag.rels.push_back(Column{poly_sub(E.field(), y, y2)});
  }
  ResolutionCertificate res = minimal_free_resolution(rep.E, diag, std::max(range, rep.envelope_dim) + 2);
  rep.smooth = res.terminated;
  rep.proj_dim = res.terminated ? res.length : -1;
  rep.betti = res.betti();
  Complex N = module_complex(rep.E, diag);
  for (const auto& [i, H] : tor_table(res, N, 0, range))
    if (!is_zero_module(E, H)) rep.HH_lower[i] = hilbert_range(E, H);
  for (const auto& [i, H] : ext_table(res, N, 0, range))
    if (!is_zero_module(E, H)) rep.HH_upper[i] = hilbert_range(E, H);
  for (int d = 0; d <= 4; ++d) rep.B_hilbert.push_back(B->hilbert(d));
  return rep;
}

bool hochschild_vanishing_check(const HochschildReport& r) {
  if (!r.smooth || r.proj_dim > r.envelope_dim) return false;
  for (const auto* table : {&r.HH_lower, &r.HH_upper})
    for (const auto& [i, h] : *table)
      if (i > r.envelope_dim) return false;
  auto at = [](const std::map<int, std::vector<long>>& t) { return t.count(0) ? t.at(0) : std::vector<long>{}; };
  return at(r.HH_lower) == r.B_hilbert && at(r.HH_upper) == r.B_hilbert;
}

}  // namespace findim
