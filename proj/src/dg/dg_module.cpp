#include <algorithm>

#include "findim/dg.hpp"

namespace findim {

namespace {

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

Column apply_rows(const GradedRing& R, const std::vector<Column>& cols, const Column& v, int rows) {
  if (cols.empty() || rows == 0) return zero_column(rows);
  return apply(R, cols, v);
}

Column signed_column(const Field& k, Column c, int sign) {
  if (sign < 0)
    for (auto& f : c) f = poly_neg(k, f);
  return c;
}

Poly signed_poly(const Field& k, const Poly& f, int sign) { return sign < 0 ? poly_neg(k, f) : f; }

// Stacks column blocks placed at row offsets into one column of length rows.
void place(const Field& k, Column& out, int offset, const Column& block) {
  for (std::size_t i = 0; i < block.size(); ++i)
    if (!block[i].empty()) out[offset + i] = poly_add(k, out[offset + i], block[i]);
}

DGComponents empty_components(const FactorPtr& A) {
  DGComponents X;
  X.A = A;
  X.C.ring = A->base_ptr();
  X.act.resize(A->size());
  return X;
}

}  // namespace

int SemifreeModule::min_gen() const {
  int v = INT_MAX;
  for (const auto& g : gens) v = std::min(v, g.cdeg);
  return gens.empty() ? 0 : v;
}

int SemifreeModule::max_gen() const {
  int v = INT_MIN;
  for (const auto& g : gens) v = std::max(v, g.cdeg);
  return gens.empty() ? 0 : v;
}

int SemifreeModule::add_generator(SemifreeGen g, std::vector<std::pair<int, AElem>> dg) {
  int j = ngens();
  for (const auto& [i, a] : dg)
    if (i < 0 || i >= j) throw InputError("semifree differential must refer to earlier generators");
  gens.push_back(g);
  d.push_back(std::move(dg));
  return j;
}

std::vector<Column> DGComponents::action(int b, int c) const {
  auto it = act[b].find(c);
  if (it != act[b].end()) return it->second;
  return std::vector<Column>(rank(c), zero_column(rank(c + A->basis(b).cdeg)));
}

DGComponents expand(const SemifreeModule& F, int lo, int hi) {
  const DGFactor& A = *F.A;
  const GradedRing& R = A.base();
  const Field& k = R.field();
  DGComponents X = empty_components(F.A);
  std::map<int, std::map<std::pair<int, int>, int>> pos;
  for (int c = lo; c <= hi; ++c) {
    std::vector<std::pair<int, int>> lay;
    for (int g = 0; g < F.ngens(); ++g)
      for (int b = 0; b < A.size(); ++b)
        if (F.gens[g].cdeg + A.basis(b).cdeg == c) lay.push_back({g, b});
    if (lay.empty()) continue;
    PModule M;
    for (const auto& [g, b] : lay) {
      pos[c][{g, b}] = M.rank();
      M.twists.push_back(F.gens[g].twist - A.basis(b).tdeg);
    }
    for (const auto& [g, b] : lay)
      for (const auto& f : A.basis(b).ann) {
        Column col(M.rank());
        col[pos[c][{g, b}]] = R.normal_form(f);
        if (!col[pos[c][{g, b}]].empty()) M.rels.push_back(std::move(col));
      }
    X.C.comp[c] = std::move(M);
    X.layout[c] = std::move(lay);
  }
  for (int c = lo; c < hi; ++c) {
    if (!X.layout.count(c)) continue;
    int rows = X.rank(c + 1);
    std::vector<Column> cols;
    for (const auto& [g, b] : X.layout[c]) {
      Column col(rows);
      const AElem& db = A.diff(b);
      for (int t = 0; t < A.size(); ++t)
        if (!db[t].empty()) place(k, col, pos[c + 1].at({g, t}), Column{db[t]});
      int sb = parity_sign(A.basis(b).cdeg);
      for (const auto& [i, alpha] : F.d[g])
        for (int b2 = 0; b2 < A.size(); ++b2) {
          if (alpha[b2].empty()) continue;
          const BasisProduct& p = A.mult(b, b2);
          if (p.sign == 0) continue;
          place(k, col, pos[c + 1].at({i, p.index}), Column{signed_poly(k, alpha[b2], sb * p.sign)});
        }
      for (std::size_t r = 0; r < X.layout[c + 1].size(); ++r)
        col[r] = A.coef_ring(X.layout[c + 1][r].second).normal_form(col[r]);
      cols.push_back(std::move(col));
    }
    X.C.d[c] = std::move(cols);
  }
  for (int a = 0; a < A.size(); ++a) {
    int ca = A.basis(a).cdeg;
    for (int c = lo; c <= hi; ++c) {
      if (!X.layout.count(c) || c + ca < lo || c + ca > hi) continue;
      int rows = X.rank(c + ca);
      std::vector<Column> cols;
      for (const auto& [g, b] : X.layout[c]) {
        Column col(rows);
        const BasisProduct& p = A.mult(a, b);
        if (p.sign != 0) col[pos[c + ca].at({g, p.index})] = poly_constant(k, Scalar(p.sign));
        cols.push_back(std::move(col));
      }
      X.act[a][c] = std::move(cols);
    }
  }
  return X;
}

DGComponents expand(const SemifreeModule& F) {
  if (F.gens.empty()) return empty_components(F.A);
  return expand(F, F.min_gen() + F.A->min_cdeg(), F.max_gen());
}

std::string verify_dg_module(const DGComponents& M) {
  try {
    validate_complex(M.C);
  } catch (const InputError& e) {
    return e.what();
  }
  const DGFactor& A = *M.A;
  const GradedRing& R = A.base();
  const Field& k = R.field();
  auto equal_in = [&](int c, const Column& x, const Column& y) {
    Column diff = column_add(k, x, signed_column(k, y, -1));
    if (column_is_zero(column_normal_form(R, diff))) return true;
    const PModule& P = M.at(c);
    return !P.rels.empty() && submodule_contains(R, P.twists, P.rels, diff);
  };
  for (int a = 0; a < A.size(); ++a) {
    int ca = A.basis(a).cdeg;
    for (const auto& [c, cols] : M.act[a]) {
      int n = M.rank(c);
      if (n == 0) continue;
      const PModule& tgt = M.at(c + ca);
      for (const auto& r : M.at(c).rels)
        if (!equal_in(c + ca, apply_rows(R, cols, r, tgt.rank()), zero_column(tgt.rank())))
          return "action of " + A.basis(a).name + " does not respect relations in degree " + std::to_string(c);
      bool have_next = M.act[a].count(c + 1) && M.C.d.count(c) && M.C.d.count(c + ca);
      const AElem& da = A.diff(a);
      for (int t = 0; t < A.size() && have_next; ++t)
        if (!da[t].empty() && !M.act[t].count(c)) have_next = false;
      for (int x = 0; x < n; ++x) {
        Column ex = unit_column(k, n, x);
        if (have_next && M.rank(c + ca + 1) > 0) {
          Column lhs = apply_rows(R, M.C.d.at(c + ca), apply_rows(R, cols, ex, tgt.rank()), M.rank(c + ca + 1));
          Column rhs = zero_column(M.rank(c + ca + 1));
          for (int t = 0; t < A.size(); ++t)
            if (!da[t].empty())
              rhs = column_add(k, rhs, column_scale(R, apply_rows(R, M.act[t].at(c), ex, M.rank(c + ca + 1)), da[t]));
          Column adx = apply_rows(R, M.act[a].at(c + 1), apply_rows(R, M.C.d.at(c), ex, M.rank(c + 1)),
                                  M.rank(c + ca + 1));
          rhs = column_add(k, rhs, signed_column(k, adx, parity_sign(ca)));
          if (!equal_in(c + ca + 1, lhs, rhs))
            return "Leibniz rule fails for " + A.basis(a).name + " in degree " + std::to_string(c);
        }
        for (int b = 0; b < A.size(); ++b) {
          int cb = A.basis(b).cdeg;
          const BasisProduct& p = A.mult(a, b);
          if (!M.act[b].count(c) || !M.act[a].count(c + cb)) continue;
          if (p.sign != 0 && !M.act[p.index].count(c)) continue;
          int rows = M.rank(c + ca + cb);
          Column lhs = apply_rows(R, M.act[a].at(c + cb), apply_rows(R, M.act[b].at(c), ex, M.rank(c + cb)), rows);
          Column rhs = p.sign == 0 ? zero_column(rows)
                                   : signed_column(k, apply_rows(R, M.act[p.index].at(c), ex, rows), p.sign);
          if (!equal_in(c + ca + cb, lhs, rhs))
            return "action is not associative for " + A.basis(a).name + ", " + A.basis(b).name;
        }
      }
    }
  }
  return "";
}

CohomologyProfile DGModule::profile() const {
  CohomologyProfile out;
  for (const auto& part : parts) {
    if (part.comps.empty() || part.comps.A->is_zero()) continue;
    CohomologyProfile p = part.semifree && part.semifree->certified_lo
                              ? cohomology_profile(part.comps.C, *part.semifree->certified_lo + 1, part.comps.hi())
                              : cohomology_profile(part.comps.C);
    if (p.zero) continue;
    out.zero = false;
    out.sup = std::max(out.sup, p.sup);
    out.inf = std::min(out.inf, p.inf);
    if (parts.size() == 1) out.H = std::move(p.H);
  }
  return out;
}

bool DGModule::is_zero() const { return profile().zero; }

namespace {

std::vector<std::pair<int, AElem>> check_semifree(const DGFactor& A, const std::vector<SemifreeGen>& gens, int j,
                                                  std::vector<std::pair<int, AElem>> dj) {
  for (auto& [i, alpha] : dj) {
    if (i < 0 || i >= j) throw InputError("d(g" + std::to_string(j) + ") must involve earlier generators only");
    if (static_cast<int>(alpha.size()) != A.size())
      throw InputError("coefficient of d(g" + std::to_string(j) + ") has the wrong number of basis components");
    alpha = A.reduce(alpha);
    for (int b = 0; b < A.size(); ++b) {
      if (alpha[b].empty()) continue;
      if (gens[i].cdeg + A.basis(b).cdeg != gens[j].cdeg + 1)
        throw InputError("d(g" + std::to_string(j) + ") is not of cohomological degree " +
                         std::to_string(gens[j].cdeg + 1));
      if (!is_homogeneous(alpha[b]) ||
          leading_degree(alpha[b]) + A.basis(b).tdeg - gens[i].twist != -gens[j].twist)
        throw InputError("d(g" + std::to_string(j) + ") is not homogeneous of internal degree " +
                         std::to_string(-gens[j].twist));
    }
  }
  return dj;
}

FactorModule semifree_part(SemifreeModule F) {
  FactorModule part;
  part.comps = expand(F);
  part.semifree = std::move(F);
  return part;
}

FactorModule empty_part(const FactorPtr& A) {
  FactorModule part;
  part.comps = empty_components(A);
  SemifreeModule F;
  F.A = A;
  part.semifree = std::move(F);
  return part;
}

FactorModule restricted_part(const FactorPtr& Ap, const PModule& M) {
  const DGFactor& A = *Ap;
  const GradedRing& R = A.base();
  for (const auto& r : M.rels) {
    if (static_cast<int>(r.size()) != M.rank()) throw InputError("relation has the wrong length");
    if (!column_is_homogeneous(M.twists, r)) throw InputError("relation is not homogeneous");
  }
  FactorModule part;
  part.comps = empty_components(Ap);
  if (M.rank() == 0) return part;
  PModule N = M;
  for (auto& r : N.rels) r = column_normal_form(R, r);
  for (int b = 0; b < A.size(); ++b)
    if (A.basis(b).cdeg == -1 && !A.diff(b)[0].empty())
      for (int i = 0; i < N.rank(); ++i) {
        Column col(N.rank());
        col[i] = A.diff(b)[0];
        N.rels.push_back(std::move(col));
      }
  part.comps.C.comp[0] = N;
  std::vector<Column> id;
  for (int i = 0; i < N.rank(); ++i) id.push_back(unit_column(R.field(), N.rank(), i));
  part.comps.act[0][0] = std::move(id);
  return part;
}

void check_factor(const DGRingPtr& A, int factor) {
  if (factor < 0 || factor >= A->nfactors())
    throw InputError("factor index " + std::to_string(factor) + " out of range");
}

}  // namespace

DGModule dg_module_from_presentation(DGRingPtr A, int factor, std::vector<SemifreeGen> gens,
                                     std::vector<std::vector<std::pair<int, AElem>>> d, std::string label) {
  check_factor(A, factor);
  if (d.size() != gens.size()) throw InputError("one differential per generator is required");
  SemifreeModule F;
  F.A = A->factors[factor];
  for (std::size_t j = 0; j < gens.size(); ++j) {
    F.gens.push_back(gens[j]);
    F.d.push_back(check_semifree(*F.A, F.gens, static_cast<int>(j), std::move(d[j])));
  }
  FactorModule part = semifree_part(std::move(F));
  validate_complex(part.comps.C);
  DGModule M;
  M.ring = A;
  M.label = label.empty() ? "semifree module" : std::move(label);
  for (int f = 0; f < A->nfactors(); ++f) M.parts.push_back(f == factor ? part : empty_part(A->factors[f]));
  return M;
}

DGModule extend_by_zero(const DGRingPtr& A, int factor, const DGModule& M) {
  check_factor(A, factor);
  if (M.parts.size() != 1 || M.parts[0].comps.A != A->factors[factor])
    throw InputError("module does not live on factor " + std::to_string(factor + 1));
  DGModule out;
  out.ring = A;
  out.label = M.label;
  if (A->nfactors() > 1) out.label += " on factor " + std::to_string(factor + 1);
  for (int f = 0; f < A->nfactors(); ++f) out.parts.push_back(f == factor ? M.parts[0] : empty_part(A->factors[f]));
  return out;
}

DGModule free_dg_module(DGRingPtr A, int shift, int twist) {
  DGModule M;
  M.ring = A;
  M.label = "A";
  if (shift) M.label += "[" + std::to_string(shift) + "]";
  if (twist) M.label += "(" + std::to_string(twist) + ")";
  for (const auto& f : A->factors) {
    SemifreeModule F;
    F.A = f;
    F.add_generator(SemifreeGen{-shift, twist}, {});
    M.parts.push_back(semifree_part(std::move(F)));
  }
  return M;
}

DGModule koszul_dg_module(DGRingPtr A, const std::vector<std::vector<Poly>>& seq) {
  int l = static_cast<int>(seq.size());
  if (l > 6) throw InputError("Koszul modules support at most 6 elements");
  std::vector<int> deg(l, 0);
  for (int i = 0; i < l; ++i) {
    if (static_cast<int>(seq[i].size()) != A->nfactors())
      throw InputError("Koszul element " + std::to_string(i + 1) + " needs one component per factor");
    bool seen = false;
    for (int f = 0; f < A->nfactors(); ++f) {
      const Poly& p = seq[i][f];
      if (p.empty()) continue;
      if (!is_homogeneous(p)) throw InputError("Koszul element " + std::to_string(i + 1) + " is not homogeneous");
      if (seen && leading_degree(p) != deg[i])
        throw InputError("Koszul element " + std::to_string(i + 1) + " has components of different degrees");
      deg[i] = leading_degree(p);
      seen = true;
    }
  }
  bool proper = false;
  for (int f = 0; f < A->nfactors(); ++f) {
    const DGFactor& Af = *A->factors[f];
    if (Af.is_zero()) continue;
    std::vector<Poly> I;
    for (int i = 0; i < l; ++i) I.push_back(seq[i][f]);
    if (!Af.h0()->quotient(I)->is_zero_ring()) proper = true;
  }
  if (!proper) throw InputError("Koszul sequence generates the unit ideal of H^0");
  auto subsets = subsets_by_size(l);
  DGModule M;
  M.ring = A;
  M.label = "K(A; ";
  for (int i = 0; i < l; ++i) {
    if (i) M.label += ", ";
    std::string s;
    for (int f = 0; f < A->nfactors(); ++f) {
      if (f) s += ", ";
      s += A->factors[f]->base().str(seq[i][f]);
    }
    M.label += A->nfactors() > 1 ? "(" + s + ")" : s;
  }
  M.label += ")";
  for (int f = 0; f < A->nfactors(); ++f) {
    const DGFactor& Af = *A->factors[f];
    SemifreeModule F;
    F.A = A->factors[f];
    std::map<std::vector<int>, int> index;
    for (const auto& S : subsets) {
      int tw = 0;
      for (int s : S) tw -= deg[s];
      std::vector<std::pair<int, AElem>> dS;
      for (std::size_t t = 0; t < S.size(); ++t) {
        if (seq[S[t]][f].empty()) continue;
        std::vector<int> T = S;
        T.erase(T.begin() + t);
        dS.push_back({index.at(T), Af.scalar(signed_poly(Af.base().field(), seq[S[t]][f], parity_sign(t)))});
      }
      index[S] = F.add_generator(SemifreeGen{-static_cast<int>(S.size()), tw}, std::move(dS));
    }
    M.parts.push_back(semifree_part(std::move(F)));
  }
  return M;
}

DGModule restricted_module(DGRingPtr A, int factor, const PModule& N, std::string label) {
  check_factor(A, factor);
  DGModule M;
  M.ring = A;
  M.label = label.empty() ? "H^0-module" : std::move(label);
  for (int f = 0; f < A->nfactors(); ++f) {
    if (f == factor) {
      M.parts.push_back(restricted_part(A->factors[f], N));
    } else {
      FactorModule part;
      part.comps = empty_components(A->factors[f]);
      M.parts.push_back(std::move(part));
    }
  }
  return M;
}

DGModule h0_module(DGRingPtr A) {
  DGModule M;
  M.ring = A;
  M.label = "H^0(A)";
  for (const auto& f : A->factors) M.parts.push_back(restricted_part(f, PModule::free({0})));
  return M;
}

DGModule residue_field_module(DGRingPtr A, int factor) {
  check_factor(A, factor);
  const GradedRing& R = A->factors[factor]->base();
  PModule k = PModule::free({0});
  for (int v = 0; v < R.nvars(); ++v) k.rels.push_back(Column{poly_monomial(R.field(), Scalar(1), R.poly().var(v))});
  std::string label = "k";
  if (A->nfactors() > 1) label += " on factor " + std::to_string(factor + 1);
  return restricted_module(A, factor, k, label);
}

DGModule h0_quotient_module(DGRingPtr A, int factor, const std::vector<Poly>& I) {
  check_factor(A, factor);
  const GradedRing& R = A->factors[factor]->base();
  PModule Q = PModule::free({0});
  std::string label = "H^0(A)/(";
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (!is_homogeneous(I[i])) throw InputError("ideal generator " + R.str(I[i]) + " is not homogeneous");
    Q.rels.push_back(Column{I[i]});
    label += (i ? ", " : "") + R.str(I[i]);
  }
  return restricted_module(A, factor, Q, label + ")");
}

SemifreeModule shift_semifree(const SemifreeModule& F, int n, int twist) {
  const DGFactor& A = *F.A;
  const Field& k = A.base().field();
  SemifreeModule G;
  G.A = F.A;
  if (F.certified_lo) G.certified_lo = *F.certified_lo - n;
  for (int j = 0; j < F.ngens(); ++j) {
    std::vector<std::pair<int, AElem>> dj;
    for (const auto& [i, alpha] : F.d[j]) {
      AElem beta = alpha;
      for (int b = 0; b < A.size(); ++b)
        beta[b] = signed_poly(k, alpha[b], parity_sign(n) * parity_sign(static_cast<long>(n) * A.basis(b).cdeg));
      dj.push_back({i, std::move(beta)});
    }
    G.gens.push_back(SemifreeGen{F.gens[j].cdeg - n, F.gens[j].twist + twist});
    G.d.push_back(std::move(dj));
  }
  return G;
}

DGComponents shift_components(const DGComponents& M, int n, int twist) {
  const DGFactor& A = *M.A;
  const Field& k = A.base().field();
  DGComponents X = empty_components(M.A);
  X.C = shift_complex(M.C, n);
  for (auto& [c, P] : X.C.comp)
    for (auto& t : P.twists) t += twist;
  for (int a = 0; a < A.size(); ++a) {
    int s = parity_sign(static_cast<long>(n) * A.basis(a).cdeg);
    for (const auto& [c, cols] : M.act[a]) {
      std::vector<Column> nc;
      for (const auto& col : cols) nc.push_back(signed_column(k, col, s));
      X.act[a][c - n] = std::move(nc);
    }
  }
  for (const auto& [c, lay] : M.layout) X.layout[c - n] = lay;
  return X;
}

DGModule shift_module(const DGModule& M, int n, int twist) {
  DGModule out;
  out.ring = M.ring;
  out.label = M.label;
  if (n) out.label = "(" + out.label + ")[" + std::to_string(n) + "]";
  if (twist) out.label = "(" + out.label + ")(" + std::to_string(twist) + ")";
  for (const auto& part : M.parts) {
    if (part.semifree && !part.semifree->certified_lo) {
      out.parts.push_back(semifree_part(shift_semifree(*part.semifree, n, twist)));
    } else {
      FactorModule p;
      p.comps = shift_components(part.comps, n, twist);
      if (part.semifree) p.semifree = shift_semifree(*part.semifree, n, twist);
      out.parts.push_back(std::move(p));
    }
  }
  return out;
}

DGComponents direct_sum(const DGComponents& M, const DGComponents& N) {
  const DGFactor& A = *M.A;
  DGComponents X = empty_components(M.A);
  X.C = direct_sum(M.C, N.C);
  for (int a = 0; a < A.size(); ++a) {
    int ca = A.basis(a).cdeg;
    std::vector<int> degrees;
    for (const auto& [c, cols] : M.act[a]) degrees.push_back(c);
    for (const auto& [c, cols] : N.act[a]) degrees.push_back(c);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (int c : degrees) {
      int rows = X.rank(c + ca), mrows = M.rank(c + ca);
      std::vector<Column> cols;
      for (const auto& col : M.action(a, c)) {
        Column x(rows);
        place(A.base().field(), x, 0, col);
        cols.push_back(std::move(x));
      }
      for (const auto& col : N.action(a, c)) {
        Column x(rows);
        place(A.base().field(), x, mrows, col);
        cols.push_back(std::move(x));
      }
      X.act[a][c] = std::move(cols);
    }
  }
  return X;
}

DGModule direct_sum(const DGModule& M, const DGModule& N) {
  if (M.ring != N.ring) throw InputError("direct sum of modules over different DG-rings");
  DGModule out;
  out.ring = M.ring;
  out.label = M.label + " + " + N.label;
  for (std::size_t f = 0; f < M.parts.size(); ++f) {
    const FactorModule& a = M.parts[f];
    const FactorModule& b = N.parts[f];
    FactorModule p;
    if (a.semifree && b.semifree) {
      SemifreeModule F = *a.semifree;
      int off = F.ngens();
      for (int j = 0; j < b.semifree->ngens(); ++j) {
        std::vector<std::pair<int, AElem>> dj;
        for (const auto& [i, alpha] : b.semifree->d[j]) dj.push_back({i + off, alpha});
        F.gens.push_back(b.semifree->gens[j]);
        F.d.push_back(std::move(dj));
      }
      if (a.semifree->certified_lo || b.semifree->certified_lo)
        F.certified_lo = std::max(a.semifree->certified_lo.value_or(INT_MIN), b.semifree->certified_lo.value_or(INT_MIN));
      if (!F.certified_lo) {
        out.parts.push_back(semifree_part(std::move(F)));
        continue;
      }
      p.semifree = std::move(F);
    }
    p.comps = direct_sum(a.comps, b.comps);
    out.parts.push_back(std::move(p));
  }
  return out;
}

std::map<int, std::vector<Column>> map_components(const DGComponents& Fx, const SemifreeModule& F,
                                                  const SemifreeMap& f, const DGComponents& T) {
  const GradedRing& R = F.A->base();
  std::map<int, std::vector<Column>> out;
  for (const auto& [c, lay] : Fx.layout) {
    int rows = T.rank(c);
    std::vector<Column> cols;
    for (const auto& [g, b] : lay) {
      int cg = F.gens[g].cdeg;
      if (rows == 0 || T.rank(cg) == 0) {
        cols.push_back(zero_column(rows));
      } else {
        cols.push_back(apply_rows(R, T.action(b, cg), f.phi[g], rows));
      }
    }
    out[c] = std::move(cols);
  }
  return out;
}

DGComponents dg_cone(const SemifreeModule& F, const SemifreeMap& f, const DGComponents& T) {
  const DGFactor& A = *F.A;
  const GradedRing& R = A.base();
  const Field& k = R.field();
  DGComponents Fx = expand(F);
  auto Phi = map_components(Fx, F, f, T);
  DGComponents X = empty_components(F.A);
  std::vector<int> degrees;
  for (const auto& [c, P] : Fx.C.comp) degrees.push_back(c - 1);
  for (const auto& [c, P] : T.C.comp) degrees.push_back(c);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (int c : degrees) {
    const PModule& a = Fx.at(c + 1);
    const PModule& b = T.at(c);
    PModule s{a.twists, {}};
    s.twists.insert(s.twists.end(), b.twists.begin(), b.twists.end());
    for (const auto& r : a.rels) {
      Column x(s.rank());
      place(k, x, 0, r);
      s.rels.push_back(std::move(x));
    }
    for (const auto& r : b.rels) {
      Column x(s.rank());
      place(k, x, a.rank(), r);
      s.rels.push_back(std::move(x));
    }
    if (s.rank() > 0) X.C.comp[c] = std::move(s);
  }
  for (int c : degrees) {
    if (X.rank(c) == 0 || X.rank(c + 1) == 0) continue;
    int fr = Fx.rank(c + 2), rows = X.rank(c + 1);
    std::vector<Column> cols;
    auto dF = Fx.C.diff(c + 1);
    for (int j = 0; j < Fx.rank(c + 1); ++j) {
      Column x(rows);
      place(k, x, 0, signed_column(k, dF[j], -1));
      if (Phi.count(c + 1)) place(k, x, fr, Phi.at(c + 1)[j]);
      cols.push_back(std::move(x));
    }
    auto dT = T.C.diff(c);
    for (int j = 0; j < T.rank(c); ++j) {
      Column x(rows);
      place(k, x, fr, dT[j]);
      cols.push_back(std::move(x));
    }
    X.C.d[c] = std::move(cols);
  }
  for (int a = 0; a < A.size(); ++a) {
    int ca = A.basis(a).cdeg;
    for (int c : degrees) {
      if (X.rank(c) == 0) continue;
      int rows = X.rank(c + ca), fr = Fx.rank(c + 1 + ca);
      std::vector<Column> cols;
      for (const auto& col : Fx.action(a, c + 1)) {
        Column x(rows);
        place(k, x, 0, signed_column(k, col, parity_sign(ca)));
        cols.push_back(std::move(x));
      }
      for (const auto& col : T.action(a, c)) {
        Column x(rows);
        place(k, x, fr, col);
        cols.push_back(std::move(x));
      }
      X.act[a][c] = std::move(cols);
    }
  }
  return X;
}

Complex hom_complex(const SemifreeModule& F, const DGComponents& T) {
  const DGFactor& A = *F.A;
  const GradedRing& R = A.base();
  const Field& k = R.field();
  Complex H;
  H.ring = A.base_ptr();
  if (F.gens.empty() || T.empty()) return H;
  int lo = T.lo() - F.max_gen(), hi = T.hi() - F.min_gen();
  std::map<int, std::vector<int>> offset;  // offset[n][g], -1 when the block is zero
  for (int n = lo; n <= hi + 1; ++n) {
    PModule P;
    offset[n].assign(F.ngens(), -1);
    for (int g = 0; g < F.ngens(); ++g) {
      const PModule& Tc = T.at(F.gens[g].cdeg + n);
      if (Tc.rank() == 0) continue;
      int off = P.rank();
      offset[n][g] = off;
      for (int t : Tc.twists) P.twists.push_back(t - F.gens[g].twist);
      for (const auto& r : Tc.rels) {
        Column x(Tc.rank() + off);
        place(k, x, off, r);
        P.rels.push_back(std::move(x));
      }
    }
    for (auto& r : P.rels) r.resize(P.rank());
    if (P.rank() > 0) H.comp[n] = std::move(P);
  }
  for (int n = lo; n <= hi; ++n) {
    int rows = H.rank(n + 1);
    if (H.rank(n) == 0 || rows == 0) continue;
    std::vector<Column> cols(H.rank(n), zero_column(rows));
    for (int j = 0; j < F.ngens(); ++j) {
      int oj = offset[n][j];
      if (oj < 0) continue;
      int cj = F.gens[j].cdeg + n;
      auto dT = T.C.diff(cj);
      int og = offset[n + 1][j];
      if (og >= 0)
        for (int x = 0; x < T.rank(cj); ++x) place(k, cols[oj + x], og, dT[x]);
    }
    for (int g = 0; g < F.ngens(); ++g) {
      int og = offset[n + 1][g];
      if (og < 0) continue;
      for (const auto& [j, alpha] : F.d[g]) {
        int oj = offset[n][j];
        if (oj < 0) continue;
        int cj = F.gens[j].cdeg + n;
        for (int b = 0; b < A.size(); ++b) {
          if (alpha[b].empty()) continue;
          int s = -parity_sign(n) * parity_sign(static_cast<long>(n) * A.basis(b).cdeg);
          auto act = T.action(b, cj);
          for (int x = 0; x < T.rank(cj); ++x)
            place(k, cols[oj + x], og, column_scale(R, act[x], signed_poly(k, alpha[b], s)));
        }
      }
    }
    for (auto& col : cols) col = column_normal_form(R, col);
    H.d[n] = std::move(cols);
  }
  return H;
}

Complex tensor_complex(const SemifreeModule& F, const DGComponents& T) {
  const DGFactor& A = *F.A;
  const GradedRing& R = A.base();
  const Field& k = R.field();
  Complex X;
  X.ring = A.base_ptr();
  if (F.gens.empty() || T.empty()) return X;
  int lo = T.lo() + F.min_gen(), hi = T.hi() + F.max_gen();
  std::map<int, std::vector<int>> offset;
  for (int n = lo; n <= hi + 1; ++n) {
    PModule P;
    offset[n].assign(F.ngens(), -1);
    for (int g = 0; g < F.ngens(); ++g) {
      const PModule& Tc = T.at(n - F.gens[g].cdeg);
      if (Tc.rank() == 0) continue;
      int off = P.rank();
      offset[n][g] = off;
      for (int t : Tc.twists) P.twists.push_back(t + F.gens[g].twist);
      for (const auto& r : Tc.rels) {
        Column x(Tc.rank() + off);
        place(k, x, off, r);
        P.rels.push_back(std::move(x));
      }
    }
    for (auto& r : P.rels) r.resize(P.rank());
    if (P.rank() > 0) X.comp[n] = std::move(P);
  }
  for (int n = lo; n <= hi; ++n) {
    int rows = X.rank(n + 1);
    if (X.rank(n) == 0 || rows == 0) continue;
    std::vector<Column> cols(X.rank(n), zero_column(rows));
    for (int g = 0; g < F.ngens(); ++g) {
      int og = offset[n][g];
      if (og < 0) continue;
      int cg = F.gens[g].cdeg, tc = n - cg;
      int on = offset[n + 1][g];
      if (on >= 0) {
        auto dT = T.C.diff(tc);
        for (int x = 0; x < T.rank(tc); ++x) place(k, cols[og + x], on, signed_column(k, dT[x], parity_sign(cg)));
      }
      for (const auto& [j, alpha] : F.d[g]) {
        int oj = offset[n + 1][j];
        if (oj < 0) continue;
        for (int b = 0; b < A.size(); ++b) {
          if (alpha[b].empty()) continue;
          int s = parity_sign(static_cast<long>(A.basis(b).cdeg) * F.gens[j].cdeg);
          auto act = T.action(b, tc);
          for (int x = 0; x < T.rank(tc); ++x)
            place(k, cols[og + x], oj, column_scale(R, act[x], signed_poly(k, alpha[b], s)));
        }
      }
    }
    for (auto& col : cols) col = column_normal_form(R, col);
    X.d[n] = std::move(cols);
  }
  return X;
}

Complex residue_tensor(const SemifreeModule& F) {
  const GradedRing& R = F.A->base();
  std::vector<Poly> vars;
  for (int v = 0; v < R.nvars(); ++v) vars.push_back(poly_monomial(R.field(), Scalar(1), R.poly().var(v)));
  RingPtr kr = R.quotient(vars);
  Complex X;
  X.ring = kr;
  std::map<int, std::vector<int>> index;  // generators per degree
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
      for (const auto& [j, alpha] : F.d[g]) {
        Poly v = kr->normal_form(alpha[0]);
        if (!v.empty()) col[pos[j]] = poly_add(R.field(), col[pos[j]], v);
      }
      cols.push_back(std::move(col));
    }
    X.d[c] = std::move(cols);
  }
  return X;
}

}  // namespace findim
