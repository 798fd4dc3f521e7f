#include "findim/engine.hpp"

#include <algorithm>
#include <atomic>

namespace findim {

namespace {

Column neg_column(const Field& k, Column c) {
  for (auto& f : c) f = poly_neg(k, f);
  return c;
}

// cone^c = F^{c+1} + T^c with d(p, m) = (-dp, Phi p + dm).
struct ConeDegree {
  PModule module;
  int split = 0;  // rank of the F part
};

ConeDegree cone_module(const DGComponents& Fx, const DGComponents& T, int c) {
  const PModule& a = Fx.at(c + 1);
  const PModule& b = T.at(c);
  ConeDegree out;
  out.split = a.rank();
  out.module.twists = a.twists;
  out.module.twists.insert(out.module.twists.end(), b.twists.begin(), b.twists.end());
  int n = out.module.rank();
  for (const auto& r : a.rels) {
    Column x(n);
    std::copy(r.begin(), r.end(), x.begin());
    out.module.rels.push_back(std::move(x));
  }
  for (const auto& r : b.rels) {
    Column x(n);
    std::copy(r.begin(), r.end(), x.begin() + a.rank());
    out.module.rels.push_back(std::move(x));
  }
  return out;
}

std::vector<Column> cone_differential(const GradedRing& R, const DGComponents& Fx,
                                      const std::map<int, std::vector<Column>>& Phi, const DGComponents& T, int c) {
  const Field& k = R.field();
  int fr = Fx.rank(c + 2);
  int rows = fr + T.rank(c + 1);
  std::vector<Column> cols;
  auto dF = Fx.C.diff(c + 1);
  auto phi = Phi.find(c + 1);
  for (int j = 0; j < Fx.rank(c + 1); ++j) {
    Column x(rows);
    for (int i = 0; i < fr; ++i) x[i] = poly_neg(k, dF[j][i]);
    if (phi != Phi.end())
      for (std::size_t i = 0; i < phi->second[j].size(); ++i) x[fr + i] = phi->second[j][i];
    cols.push_back(std::move(x));
  }
  auto dT = T.C.diff(c);
  for (int j = 0; j < T.rank(c); ++j) {
    Column x(rows);
    for (std::size_t i = 0; i < dT[j].size(); ++i) x[fr + i] = dT[j][i];
    cols.push_back(std::move(x));
  }
  return cols;
}

// Adds minimal generators of H^c(cone(F -> T)) as degree-c generators of F.
int kill_degree(SemifreeModule& F, SemifreeMap& phi, const DGComponents& T, int c) {
  const DGFactor& A = *F.A;
  const GradedRing& R = A.base();
  const Field& k = R.field();
  DGComponents Fx = expand(F, c - 1, c + 2);
  auto Phi = map_components(Fx, F, phi, T);
  ConeDegree here = cone_module(Fx, T, c);
  if (here.module.rank() == 0) return 0;
  ConeDegree next = cone_module(Fx, T, c + 1);
  std::vector<Column> Z;
  if (next.module.rank() == 0) {
    for (int i = 0; i < here.module.rank(); ++i) Z.push_back(unit_column(k, here.module.rank(), i));
  } else {
    Z = kernel(R, here.module.twists, cone_differential(R, Fx, Phi, T, c), next.module.twists, next.module.rels);
  }
  if (Z.empty()) return 0;
  std::vector<Column> base = here.module.rels;
  if (cone_module(Fx, T, c - 1).module.rank() > 0)
    for (auto& col : cone_differential(R, Fx, Phi, T, c - 1)) base.push_back(std::move(col));
  std::vector<int> chosen = minimal_subset(R, here.module.twists, Z, base);
  for (int i : chosen) {
    const Column& z = Z[i];
    std::map<int, AElem> parts;
    const auto& lay = Fx.layout[c + 1];
    for (int r = 0; r < here.split; ++r) {
      if (z[r].empty()) continue;
      auto [g, b] = lay[r];
      auto it = parts.try_emplace(g, A.zero()).first;
      it->second[b] = poly_add(k, it->second[b], z[r]);
    }
    std::vector<std::pair<int, AElem>> dh;
    for (auto& [g, a] : parts) dh.push_back({g, A.reduce(a)});
    Column m(z.begin() + here.split, z.end());
    int twist = -column_degree(here.module.twists, z);
    F.add_generator(SemifreeGen{c, twist}, std::move(dh));
    phi.phi.push_back(neg_column(k, m));
  }
  return static_cast<int>(chosen.size());
}

}  // namespace

namespace {
std::atomic<int> budget{kMaxGenerators};
}  // namespace

int generator_budget() { return budget.load(); }

void set_generator_budget(int n) {
  if (n < 1) throw InputError("generator budget must be positive");
  budget.store(n);
}

SemifreeResolution resolve(const DGComponents& T, int window, int max_generators) {
  if (max_generators <= 0) max_generators = generator_budget();
  SemifreeResolution out;
  out.F.A = T.A;
  out.window = window;
  if (T.empty()) {
    out.terminated = true;
    return out;
  }
  int lo = T.lo(), hi = T.hi();
  int min_cdeg = T.A->min_cdeg();
  for (int c = hi;; --c) {
    if (c < lo && (out.F.gens.empty() || c + 1 < out.F.min_gen() + min_cdeg)) {
      out.terminated = true;
      break;
    }
    if (c < window) break;
    int added = kill_degree(out.F, out.phi, T, c);
    out.stages.push_back(EngineStage{c, added});
    if (out.F.ngens() > max_generators)
      throw CutoffError("window " + std::to_string(window) + " unreachable: generator limit " +
                       std::to_string(max_generators) + " exceeded after " + std::to_string(out.stages.size()) +
                       " stages (degree " + std::to_string(c) + ")");
  }
  if (!out.terminated) out.F.certified_lo = window;
  return out;
}

SppjStage sppj_step(const DGModule& M, int factor, int index) {
  if (factor < 0 || factor >= static_cast<int>(M.parts.size())) throw InputError("factor index out of range");
  const DGComponents& T = M.parts[factor].comps;
  CohomologyProfile p = cohomology_profile(T.C);
  if (p.zero) throw InputError("sppj step on a zero module");
  SppjStage st;
  st.index = index;
  st.sup = p.sup;
  st.target = shift_components(T, p.sup);
  st.P.A = T.A;
  kill_degree(st.P, st.f, st.target, 0);
  st.N = shift_components(dg_cone(st.P, st.f, st.target), -1);
  return st;
}

namespace {

}  // namespace

FactorModule resolve_part(const FactorModule& part, int lo) {
  if (part.semifree && !part.semifree->certified_lo) return part;
  SemifreeResolution res = resolve(part.comps, lo);
  FactorModule out;
  if (res.terminated) {
    out.comps = expand(res.F);
  } else {
    int hi = res.F.gens.empty() ? lo : res.F.max_gen();
    out.comps = expand(res.F, lo, std::max(lo, hi));
  }
  out.semifree = std::move(res.F);
  return out;
}

namespace {

const FactorModule& part_of(const DGModule& M, int factor) {
  if (factor < 0 || factor >= static_cast<int>(M.parts.size())) throw InputError("factor index out of range");
  return M.parts[factor];
}

int lo_of(const DGComponents& X) { return X.empty() ? 0 : X.lo(); }
int hi_of(const DGComponents& X) { return X.empty() ? 0 : X.hi(); }

Complex truncate_below(Complex C, int lo) {
  for (auto it = C.comp.begin(); it != C.comp.end();) it = it->first < lo ? C.comp.erase(it) : std::next(it);
  for (auto it = C.d.begin(); it != C.d.end();) it = it->first < lo ? C.d.erase(it) : std::next(it);
  return C;
}

Complex truncate_above(Complex C, int hi) {
  for (auto it = C.comp.begin(); it != C.comp.end();) it = it->first > hi ? C.comp.erase(it) : std::next(it);
  for (auto it = C.d.begin(); it != C.d.end();) it = it->first >= hi ? C.d.erase(it) : std::next(it);
  return C;
}

}  // namespace

DGModule semifree_resolution(const DGModule& M, int lo) {
  DGModule out;
  out.ring = M.ring;
  out.label = "semifree(" + M.label + ")";
  for (const auto& part : M.parts) out.parts.push_back(resolve_part(part, lo));
  return out;
}

Complex base_change_h0(const SemifreeModule& F) {
  const DGFactor& A = *F.A;
  RingPtr S = A.h0();
  Complex X;
  X.ring = S;
  std::map<int, std::vector<int>> index;
  std::vector<int> pos(F.ngens());
  for (int g = 0; g < F.ngens(); ++g) {
    int c = F.gens[g].cdeg;
    pos[g] = static_cast<int>(index[c].size());
    index[c].push_back(g);
    X.comp[c].twists.push_back(F.gens[g].twist);
  }
  for (const auto& [c, list] : index) {
    if (!index.count(c + 1)) continue;
    std::vector<Column> cols;
    for (int g : list) {
      Column col(index.at(c + 1).size());
      for (const auto& [j, alpha] : F.d[g])
        if (!alpha[0].empty()) col[pos[j]] = S->normal_form(poly_add(S->field(), col[pos[j]], alpha[0]));
      cols.push_back(std::move(col));
    }
    X.d[c] = std::move(cols);
  }
  return X;
}

Complex reduce_to_h0(const DGModule& M, int factor, int lo) {
  FactorModule r = resolve_part(part_of(M, factor), lo - 1);
  Complex X = base_change_h0(*r.semifree);
  return r.semifree->certified_lo ? truncate_below(std::move(X), lo - 1) : X;
}

Complex rhom(const DGModule& X, const DGModule& M, int factor, int hi) {
  const DGComponents& T = part_of(M, factor).comps;
  FactorModule r = resolve_part(part_of(X, factor), lo_of(T) - hi - 2);
  Complex H = hom_complex(*r.semifree, T);
  return r.semifree->certified_lo ? truncate_above(std::move(H), hi + 1) : H;
}

Complex coreduce_to_h0(const DGModule& M, int factor, int hi) { return rhom(h0_module(M.ring), M, factor, hi); }

Complex derived_tensor(const DGModule& X, const DGModule& M, int factor, int lo) {
  const DGComponents& T = part_of(M, factor).comps;
  FactorModule r = resolve_part(part_of(X, factor), lo - hi_of(T) - 1);
  Complex C = tensor_complex(*r.semifree, T);
  return r.semifree->certified_lo ? truncate_below(std::move(C), lo - 1) : C;
}

}  // namespace findim
