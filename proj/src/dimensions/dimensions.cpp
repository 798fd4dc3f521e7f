#include "findim/dimensions.hpp"

#include <algorithm>
#include <functional>

namespace findim {

std::string DimValue::str() const {
  switch (kind) {
    case Kind::finite: return std::to_string(value);
    case Kind::infinite: return "infinity";
    case Kind::minus_infinity: return "-infinity";
  }
  return "?";
}

DimValue max(const DimValue& a, const DimValue& b) {
  if (a.kind == DimValue::Kind::infinite || b.kind == DimValue::Kind::infinite) return DimValue::infinite();
  if (a.kind == DimValue::Kind::minus_infinity) return b;
  if (b.kind == DimValue::Kind::minus_infinity) return a;
  return DimValue::finite(std::max(a.value, b.value));
}

const char* to_string(DimKind k) {
  switch (k) {
    case DimKind::proj: return "proj";
    case DimKind::flat: return "flat";
    case DimKind::inj: return "inj";
  }
  return "?";
}

namespace {

CohomologyProfile part_profile(const FactorModule& part) {
  if (part.comps.empty()) return CohomologyProfile{};
  if (part.semifree && part.semifree->certified_lo)
    return cohomology_profile(part.comps.C, *part.semifree->certified_lo + 1, part.comps.hi());
  return cohomology_profile(part.comps.C);
}

bool nonzero_cohomology(const Complex& C, int c) {
  PModule H = cohomology(C, c);
  return H.rank() > 0 && !is_zero_module(*C.ring, H);
}

Poly variable(const GradedRing& R, int i) { return poly_monomial(R.field(), Scalar(1), R.poly().var(i)); }

// Degrees beyond the finite-value bound that are inspected before a
// vanishing tail is accepted.
int tail_length(const CohomologyProfile& p) { return p.sup - p.inf + 2; }

std::string ideal_name(const GradedRing& R, const std::vector<Poly>& I) {
  std::string s = "(";
  for (std::size_t i = 0; i < I.size(); ++i) s += (i ? ", " : "") + R.str(I[i]);
  return s + ")";
}

}  // namespace

std::vector<std::vector<Poly>> test_ideals(const GradedRing& R) {
  std::vector<std::vector<Poly>> out;
  int v = R.nvars();
  if (v <= 4) {
    for (const auto& S : subsets_by_size(v)) {
      if (S.empty() || static_cast<int>(S.size()) == v) continue;
      std::vector<Poly> I;
      for (int i : S) I.push_back(variable(R, i));
      out.push_back(std::move(I));
    }
  } else {
    for (int i = 0; i < v; ++i) out.push_back({variable(R, i)});
  }
  std::vector<Poly> m;
  for (int i = 0; i < v; ++i) m.push_back(variable(R, i));
  out.push_back(std::move(m));
  return out;
}

DimensionReport proj_dim(const DGModule& M) {
  DimensionReport rep;
  rep.kind = DimKind::proj;
  rep.trace.push_back("reduction: H^0(A) ⊗^L_A M over H^0(A)");
  rep.trace.push_back("Betti numbers: ranks of the minimal model of the reduction");
  for (int f = 0; f < static_cast<int>(M.parts.size()); ++f) {
    CohomologyProfile prof = part_profile(M.parts[f]);
    if (prof.zero) continue;
    const DGFactor& A = *M.ring->factors[f];
    FactorCertificate cert;
    cert.factor = f;
    cert.threshold = A.h0_dim() - prof.inf - A.amp();
    cert.cutoff = -(cert.threshold + tail_length(prof));
    FactorModule r = resolve_part(M.parts[f], cert.cutoff - 1);
    cert.terminated = !r.semifree->certified_lo;
    Complex X = base_change_h0(*r.semifree);
    Complex Y = minimize(X);
    int top = INT_MIN;
    for (const auto& [c, P] : Y.comp) {
      if (c < cert.cutoff || P.rank() == 0) continue;
      cert.numbers[c] = P.rank();
      top = std::max(top, -c);
    }
    if (top > cert.threshold) {
      cert.value = DimValue::infinite();
      cert.rule = "Betti number in degree " + std::to_string(-top) + " beyond the Auslander-Buchsbaum bound " +
                  std::to_string(cert.threshold) + " = dim H^0(A) - inf(M) - amp(A)";
    } else {
      cert.value = DimValue::finite(top);
      cert.rule = cert.terminated ? "terminated semifree resolution"
                                  : "Betti numbers vanish from degree " + std::to_string(-cert.threshold - 1) +
                                        " through the cutoff " + std::to_string(cert.cutoff);
    }
    rep.value = max(rep.value, cert.value);
    rep.factors.push_back(std::move(cert));
  }
  return rep;
}

DimensionReport flat_dim(const DGModule& M) {
  DimensionReport rep;
  rep.kind = DimKind::flat;
  rep.trace.push_back("Tor against cyclic test modules H^0(A)/I");
  for (int f = 0; f < static_cast<int>(M.parts.size()); ++f) {
    CohomologyProfile prof = part_profile(M.parts[f]);
    if (prof.zero) continue;
    const DGFactor& A = *M.ring->factors[f];
    const GradedRing& R = A.base();
    FactorCertificate cert;
    cert.factor = f;
    cert.threshold = A.h0_dim() - prof.inf - A.amp();
    cert.cutoff = -(cert.threshold + tail_length(prof));
    cert.terminated = true;
    int top = INT_MIN;
    auto ideals = test_ideals(R);
    for (std::size_t t = 0; t < ideals.size(); ++t) {
      DGModule N = h0_quotient_module(M.ring, f, ideals[t]);
      if (N.is_zero()) continue;
      Complex C = derived_tensor(N, M, f, cert.cutoff);
      int s = INT_MIN;
      for (int c = cert.cutoff; c <= prof.sup; ++c)
        if (nonzero_cohomology(C, c)) s = std::max(s, -c);
      cert.numbers[static_cast<int>(t)] = s == INT_MIN ? -1 : s;
      rep.trace.push_back("Tor vanishing above degree " + std::to_string(s) + " for H^0(A)/" + ideal_name(R, ideals[t]));
      top = std::max(top, s);
    }
    if (top > cert.threshold) {
      cert.value = DimValue::infinite();
      cert.rule = "Tor_" + std::to_string(top) + " nonzero beyond the bound " + std::to_string(cert.threshold);
    } else {
      cert.value = DimValue::finite(top);
      cert.rule = "Tor vanishes from degree " + std::to_string(cert.threshold + 1) + " through " +
                  std::to_string(-cert.cutoff);
    }
    rep.value = max(rep.value, cert.value);
    rep.factors.push_back(std::move(cert));
  }
  return rep;
}

DimensionReport inj_dim(const DGModule& M, bool baer) {
  DimensionReport rep;
  rep.kind = DimKind::inj;
  rep.trace.push_back("coreduction: RHom_A(H^0(A), M) over H^0(A)");
  rep.trace.push_back("Bass numbers mu_i = length Ext^i_A(k, M) = length Ext^i_{H^0(A)}(k, RHom_A(H^0(A), M))");
  for (int f = 0; f < static_cast<int>(M.parts.size()); ++f) {
    CohomologyProfile prof = part_profile(M.parts[f]);
    if (prof.zero) continue;
    const DGFactor& A = *M.ring->factors[f];
    const GradedRing& R = A.base();
    FactorCertificate cert;
    cert.factor = f;
    cert.threshold = A.h0_dim() - A.amp() + prof.sup;
    cert.cutoff = cert.threshold + tail_length(prof);
    Complex C = rhom(residue_field_module(M.ring, f), M, f, cert.cutoff);
    int top = INT_MIN;
    for (int i = prof.inf; i <= cert.cutoff; ++i) {
      PModule H = cohomology(C, i);
      if (H.rank() == 0) continue;
      long mu = SubmoduleGB(R, H.twists, H.rels).length();
      if (mu == 0) continue;
      cert.numbers[i] = mu;
      top = std::max(top, i);
    }
    if (top > cert.threshold) {
      cert.value = DimValue::infinite();
      cert.rule = "Bass number mu_" + std::to_string(top) + " nonzero beyond the bound " +
                  std::to_string(cert.threshold) + " = dim H^0(A) - amp(A) + sup(M)";
    } else {
      cert.value = top == INT_MIN ? DimValue::minus_infinity() : DimValue::finite(top);
      cert.rule = "Bass numbers vanish from " + std::to_string(cert.threshold + 1) + " through the cutoff " +
                  std::to_string(cert.cutoff);
    }
    if (baer) {
      int family = INT_MIN;
      std::vector<std::vector<Poly>> ideals = test_ideals(R);
      if (!R.relations().empty()) ideals.push_back(R.relations());
      for (const auto& I : ideals) {
        DGModule N = h0_quotient_module(M.ring, f, I);
        if (N.is_zero()) continue;
        Complex E = rhom(N, M, f, cert.cutoff);
        for (int i = prof.inf; i <= cert.cutoff; ++i)
          if (nonzero_cohomology(E, i)) family = std::max(family, i);
      }
      bool agrees = cert.value.is_infinite() ? family > cert.threshold : family == top;
      rep.trace.push_back("Baer family: top nonvanishing Ext^i(H^0(A)/I, M) is " + std::to_string(family) +
                          (agrees ? ", agreeing with the Bass numbers" : ", disagreeing with the Bass numbers"));
    }
    rep.value = max(rep.value, cert.value);
    rep.factors.push_back(std::move(cert));
  }
  return rep;
}

DimensionReport proj_dim_by_definition(const DGModule& M) {
  DimensionReport rep;
  rep.kind = DimKind::proj;
  rep.trace.push_back("definition: least n with Ext^i_A(M, N) = 0 for i > n, N = H^0(A)/I");
  for (int f = 0; f < static_cast<int>(M.parts.size()); ++f) {
    CohomologyProfile prof = part_profile(M.parts[f]);
    if (prof.zero) continue;
    const DGFactor& A = *M.ring->factors[f];
    const GradedRing& R = A.base();
    FactorCertificate cert;
    cert.factor = f;
    cert.threshold = A.h0_dim() - prof.inf - A.amp();
    cert.cutoff = cert.threshold + tail_length(prof);
    int top = INT_MIN;
    auto ideals = test_ideals(R);
    ideals.insert(ideals.begin(), std::vector<Poly>{});
    for (std::size_t t = 0; t < ideals.size(); ++t) {
      DGModule N = h0_quotient_module(M.ring, f, ideals[t]);
      if (N.is_zero()) continue;
      Complex E = rhom(M, N, f, cert.cutoff);
      int s = INT_MIN;
      for (int i = -prof.sup; i <= cert.cutoff; ++i)
        if (nonzero_cohomology(E, i)) s = std::max(s, i);
      cert.numbers[static_cast<int>(t)] = s == INT_MIN ? -1 : s;
      top = std::max(top, s);
    }
    cert.value = top > cert.threshold ? DimValue::infinite() : DimValue::finite(top);
    cert.rule = top > cert.threshold ? "Ext nonzero beyond the bound" : "Ext vanishes through the cutoff";
    rep.value = max(rep.value, cert.value);
    rep.factors.push_back(std::move(cert));
  }
  return rep;
}

namespace {

int koszul_inf(const DGRingPtr& A, const std::vector<std::vector<Poly>>& seq) {
  return koszul_dg_module(A, seq).profile().inf;
}

int koszul_inf(const DGModule& M, const std::vector<std::vector<Poly>>& seq) {
  DGModule K = koszul_dg_module(M.ring, seq);
  int inf = INT_MAX;
  for (std::size_t f = 0; f < M.parts.size(); ++f) {
    if (M.parts[f].comps.empty()) continue;
    CohomologyProfile p = cohomology_profile(tensor_complex(*K.parts[f].semifree, M.parts[f].comps));
    if (!p.zero) inf = std::min(inf, p.inf);
  }
  return inf;
}

template <class Target>
RegularityReport regularity(const Target& X, int inf_X, const std::vector<std::vector<Poly>>& seq) {
  RegularityReport rep;
  rep.inf_A = inf_X;
  rep.regular = true;
  for (std::size_t j = 1; j <= seq.size(); ++j) {
    std::vector<std::vector<Poly>> prefix(seq.begin(), seq.begin() + j);
    int v = koszul_inf(X, prefix);
    rep.prefix_inf.push_back(v);
    if (v != inf_X && rep.regular) {
      rep.regular = false;
      rep.first_bad = static_cast<int>(j) - 1;
    }
  }
  return rep;
}

}  // namespace

RegularityReport is_regular_sequence(const DGRingPtr& A, const std::vector<std::vector<Poly>>& seq) {
  return regularity(A, A->inf(), seq);
}

RegularityReport is_regular_sequence(const DGModule& M, const std::vector<std::vector<Poly>>& seq) {
  return regularity(M, M.profile().inf, seq);
}

std::vector<Poly> default_depth_pool(const GradedRing& R) {
  std::vector<Poly> pool;
  const Field& k = R.field();
  int v = R.nvars();
  const auto& w = R.poly().weights();
  for (int i = 0; i < v; ++i) pool.push_back(variable(R, i));
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      if (w[i] == w[j]) pool.push_back(poly_add(k, variable(R, i), variable(R, j)));
  for (int i = 0; i < v; ++i)
    for (int j = i; j < v; ++j)
      if (w[i] + w[j] <= 2) pool.push_back(poly_mul(k, variable(R, i), variable(R, j)));
  return pool;
}

namespace {

template <class Target>
DepthReport depth_search(const Target& X, int inf_X, const GradedRing& R, int limit) {
  constexpr long kNodeLimit = 5000;
  DepthReport rep;
  rep.pool = default_depth_pool(R);
  std::vector<Poly> best, cur;
  long nodes = 0;
  bool complete = true;
  std::function<bool(std::size_t)> dfs = [&](std::size_t start) {
    if (cur.size() > best.size()) best = cur;
    if (static_cast<int>(best.size()) >= limit) return true;
    for (std::size_t i = start; i < rep.pool.size(); ++i) {
      if (++nodes > kNodeLimit) {
        complete = false;
        return true;
      }
      cur.push_back(rep.pool[i]);
      std::vector<std::vector<Poly>> seq;
      for (const auto& p : cur) seq.push_back({p});
      bool ok = false;
      try {
        ok = koszul_inf(X, seq) == inf_X;
      } catch (const InputError&) {
        ok = false;
      }
      if (ok && dfs(i + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  dfs(0);
  rep.depth = static_cast<int>(best.size());
  rep.sequence = best;
  rep.exhaustive = complete || rep.depth >= limit;
  return rep;
}

void require_local(const DGRingPtr& A, const char* what) {
  if (!A->is_local()) throw InputError(std::string(what) + " requires a graded-local DG-ring");
}

}  // namespace

DepthReport sequential_depth(const DGRingPtr& A) {
  require_local(A, "sequential depth");
  return depth_search(A, A->inf(), A->factors[0]->base(), std::max(0, A->h0_dim()));
}

DepthReport sequential_depth(const DGModule& M) {
  require_local(M.ring, "sequential depth");
  return depth_search(M, M.profile().inf, M.ring->factors[0]->base(), std::max(0, M.ring->h0_dim()));
}

LocalCohomologyReport local_cohomology(const Complex& X) {
  const GradedRing& R = *X.ring;
  RingPtr P = GradedRing::make(R.poly_ptr(), {});
  LocalCohomologyReport rep;
  rep.ambient_dim = P->nvars();
  if (X.empty()) return rep;
  auto AP = build_ring_dg(P);
  DGComponents T;
  T.A = AP->factors[0];
  T.C.ring = P;
  T.act.resize(1);
  for (const auto& [c, M] : X.comp) {
    PModule N = M;
    for (int i = 0; i < M.rank(); ++i)
      for (const auto& f : R.gb()) {
        Column col(M.rank());
        col[i] = f;
        N.rels.push_back(std::move(col));
      }
    T.C.comp[c] = std::move(N);
    std::vector<Column> id;
    for (int i = 0; i < M.rank(); ++i) id.push_back(unit_column(P->field(), M.rank(), i));
    T.act[0][c] = std::move(id);
  }
  T.C.d = X.d;
  DGModule XP;
  XP.ring = AP;
  XP.label = "X";
  XP.parts.push_back(FactorModule{std::move(T), std::nullopt});
  int v = rep.ambient_dim;
  int hi = v - X.lo() + 1;
  Complex E = rhom(XP, free_dg_module(AP), 0, hi);
  for (int j = -X.hi(); j <= hi; ++j) {
    PModule H = cohomology(E, j);
    if (H.rank() == 0) continue;
    int d = SubmoduleGB(*P, H.twists, H.rels).dimension();
    if (d < 0) continue;
    rep.ext_dims[j] = d;
    rep.degrees.push_back(v - j);
  }
  std::sort(rep.degrees.begin(), rep.degrees.end());
  return rep;
}

LocalCohomologyReport local_cohomology(const DGRingPtr& A) {
  require_local(A, "local cohomology");
  return local_cohomology(A->factors[0]->complex());
}

bool is_local_cohen_macaulay(const DGRingPtr& A) { return local_cohomology(A).amp() == A->amp(); }

DualizingReport dualizing_dg_module(const DGRingPtr& A) {
  require_local(A, "dualizing DG-module");
  const FactorPtr& Fp = A->factors[0];
  const DGFactor& F = *Fp;
  const GradedRing& R = F.base();
  const Field& k = R.field();
  if (!R.is_polynomial()) throw InputError("dualizing DG-module requires a polynomial base ring");
  for (int b = 0; b < F.size(); ++b)
    if (!F.basis(b).ann.empty()) throw InputError("dualizing DG-module requires A free over its base ring");
  DGComponents Aself = free_dg_module(A).parts[0].comps;
  DGComponents D;
  D.A = Fp;
  D.C.ring = F.base_ptr();
  D.act.resize(F.size());
  auto sign = [](long e) { return e % 2 == 0 ? 1 : -1; };
  for (const auto& [c, P] : Aself.C.comp) {
    PModule Q;
    for (int t : P.twists) Q.twists.push_back(-t);
    D.C.comp[-c] = std::move(Q);
  }
  for (const auto& [c, P] : D.C.comp) {
    int n = c;
    if (!D.C.comp.count(n + 1)) continue;
    // d^n: D^n -> D^{n+1} from d_A: A^{-n-1} -> A^{-n}.
    auto dA = Aself.C.diff(-n - 1);
    std::vector<Column> cols(P.rank(), zero_column(D.rank(n + 1)));
    for (int bp = 0; bp < D.rank(n + 1); ++bp)
      for (int b = 0; b < P.rank(); ++b)
        if (!dA[bp][b].empty()) cols[b][bp] = sign(n) > 0 ? poly_neg(k, dA[bp][b]) : dA[bp][b];
    D.C.d[n] = std::move(cols);
  }
  for (int a = 0; a < F.size(); ++a) {
    int ca = F.basis(a).cdeg;
    for (const auto& [c, P] : D.C.comp) {
      int n = c;
      int rows = D.rank(n + ca);
      std::vector<Column> cols(P.rank(), zero_column(rows));
      if (rows > 0) {
        // (a phi)(x) = (-1)^{|a| n} phi(a x) for x in A^{-n-|a|}.
        auto act = Aself.action(a, -n - ca);
        for (int x = 0; x < rows; ++x)
          for (int b = 0; b < P.rank(); ++b)
            if (!act[x][b].empty())
              cols[b][x] = sign(static_cast<long>(ca) * n) > 0 ? act[x][b] : poly_neg(k, act[x][b]);
      }
      D.act[a][n] = std::move(cols);
    }
  }
  DualizingReport rep;
  CohomologyProfile p = cohomology_profile(D.C);
  int dim = A->h0_dim();
  rep.shift = p.inf + dim;
  int weight = 0;
  for (int w : R.poly().weights()) weight += w;
  rep.twist = -weight;
  DGModule Rm;
  Rm.ring = A;
  Rm.label = "dualizing module of " + A->label;
  Rm.parts.push_back(FactorModule{shift_components(D, rep.shift, rep.twist), std::nullopt});
  rep.R = Rm;
  rep.inf = Rm.profile().inf;
  rep.injdim = inj_dim(Rm);
  int amp = A->amp();
  rep.window_lo = -amp - 1;
  rep.window_hi = 1;
  Complex B = rhom(Rm, Rm, 0, rep.window_hi);
  const Complex& AC = Aself.C;
  rep.biduality = true;
  for (int c = rep.window_lo; c <= 0 && rep.biduality; ++c)
    if (cohomology_hilbert(B, c, -2, 8) != cohomology_hilbert(AC, c, -2, 8)) rep.biduality = false;
  return rep;
}

bool is_gorenstein(const DGRingPtr& A) { return inj_dim(free_dg_module(A)).value.is_finite(); }

}  // namespace findim
