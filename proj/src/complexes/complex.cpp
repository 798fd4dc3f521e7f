#include <algorithm>
#include <stdexcept>

#include "findim/complexes.hpp"

namespace findim {

namespace {

const PModule kEmptyModule{};

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

const PModule& Complex::at(int c) const {
  auto it = comp.find(c);
  return it == comp.end() ? kEmptyModule : it->second;
}

std::vector<Column> Complex::diff(int c) const {
  auto it = d.find(c);
  if (it != d.end()) return it->second;
  return std::vector<Column>(rank(c), zero_column(rank(c + 1)));
}

bool Complex::is_free() const {
  for (const auto& [c, M] : comp)
    if (!M.rels.empty()) return false;
  return true;
}

bool Complex::empty() const {
  for (const auto& [c, M] : comp)
    if (M.rank() > 0) return false;
  return true;
}

int Complex::lo() const {
  for (const auto& [c, M] : comp)
    if (M.rank() > 0) return c;
  return 0;
}

int Complex::hi() const {
  for (auto it = comp.rbegin(); it != comp.rend(); ++it)
    if (it->second.rank() > 0) return it->first;
  return -1;
}

void validate_complex(const Complex& C) {
  const GradedRing& R = *C.ring;
  for (const auto& [c, cols] : C.d) {
    const PModule& src = C.at(c);
    const PModule& tgt = C.at(c + 1);
    if (static_cast<int>(cols.size()) != src.rank())
      throw InputError("differential in degree " + std::to_string(c) + " has the wrong number of columns");
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (static_cast<int>(cols[j].size()) != tgt.rank())
        throw InputError("differential in degree " + std::to_string(c) + " has the wrong number of rows");
      for (int i = 0; i < tgt.rank(); ++i) {
        const Poly& f = cols[j][i];
        if (f.empty()) continue;
        if (!is_homogeneous(f) || leading_degree(f) != tgt.twists[i] - src.twists[j])
          throw InputError("differential in degree " + std::to_string(c) + ": entry (" + std::to_string(i) + "," +
                           std::to_string(j) + ") = " + R.str(f) + " is not homogeneous of degree " +
                           std::to_string(tgt.twists[i] - src.twists[j]));
      }
    }
    if (!src.rels.empty() && tgt.rank() > 0) {
      SubmoduleGB gb(R, tgt.twists, tgt.rels);
      for (const auto& r : src.rels)
        if (!gb.contains(apply(R, cols, r)))
          throw InputError("differential in degree " + std::to_string(c) + " does not respect relations");
    }
  }
  for (const auto& [c, cols] : C.d) {
    auto next = C.d.find(c + 1);
    if (next == C.d.end() || cols.empty()) continue;
    const PModule& tgt = C.at(c + 2);
    std::unique_ptr<SubmoduleGB> gb;
    if (!tgt.rels.empty()) gb = std::make_unique<SubmoduleGB>(R, tgt.twists, tgt.rels);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      Column dd = apply(R, next->second, cols[j]);
      if (gb ? gb->contains(dd) : column_is_zero(dd)) continue;
      for (std::size_t i = 0; i < dd.size(); ++i)
        if (!dd[i].empty())
          throw InputError("d^2 != 0 at degree " + std::to_string(c) + ": entry (" + std::to_string(i) + "," +
                           std::to_string(j) + ") of d^" + std::to_string(c + 1) + " d^" + std::to_string(c) +
                           " is " + R.str(dd[i]));
    }
  }
}

Complex make_complex(RingPtr ring, const std::map<int, std::vector<int>>& components,
                     const std::map<int, GradedMatrix>& differentials) {
  Complex C;
  C.ring = ring;
  for (const auto& [c, tw] : components) C.comp[c] = PModule::free(tw);
  for (const auto& [c, m] : differentials) {
    if (m.src != C.at(c).twists || m.tgt != C.at(c + 1).twists)
      throw InputError("differential in degree " + std::to_string(c) + " does not match the component twists");
    std::vector<Column> cols;
    for (const auto& col : m.cols) cols.push_back(column_normal_form(*ring, col));
    C.d[c] = std::move(cols);
  }
  validate_complex(C);
  return C;
}

Complex shift_complex(const Complex& C, int n) {
  Complex out;
  out.ring = C.ring;
  const Field& k = C.ring->field();
  for (const auto& [c, M] : C.comp) out.comp[c - n] = M;
  for (const auto& [c, cols] : C.d) {
    std::vector<Column> nc = cols;
    if (n % 2 != 0)
      for (auto& col : nc)
        for (auto& f : col) f = poly_neg(k, f);
    out.d[c - n] = std::move(nc);
  }
  return out;
}

Complex direct_sum(const Complex& A, const Complex& B) {
  Complex out;
  out.ring = A.ring;
  std::vector<int> degrees;
  for (const auto& [c, M] : A.comp) degrees.push_back(c);
  for (const auto& [c, M] : B.comp) degrees.push_back(c);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (int c : degrees) {
    const PModule& a = A.at(c);
    const PModule& b = B.at(c);
    PModule s{a.twists, {}};
    s.twists.insert(s.twists.end(), b.twists.begin(), b.twists.end());
    for (auto r : a.rels) {
      r.resize(s.rank());
      s.rels.push_back(std::move(r));
    }
    for (const auto& r : b.rels) {
      Column c2(a.rank());
      c2.insert(c2.end(), r.begin(), r.end());
      s.rels.push_back(std::move(c2));
    }
    out.comp[c] = std::move(s);
  }
  for (int c : degrees) {
    auto da = A.diff(c), db = B.diff(c);
    int ta = A.rank(c + 1), tb = B.rank(c + 1);
    std::vector<Column> cols;
    for (auto& col : da) {
      col.resize(ta + tb);
      cols.push_back(std::move(col));
    }
    for (auto& col : db) {
      Column c2(ta);
      c2.insert(c2.end(), col.begin(), col.end());
      cols.push_back(std::move(c2));
    }
    if (!cols.empty()) out.d[c] = std::move(cols);
  }
  return out;
}

Complex mapping_cone(const Complex& C, const Complex& D, const ChainMap& f) {
  const GradedRing& R = *C.ring;
  const Field& k = R.field();
  int lo = std::min(C.lo() - 1, D.lo()), hi = std::max(C.hi() - 1, D.hi());
  for (int c = lo; c <= hi + 1; ++c) {
    auto it = f.f.find(c);
    std::vector<Column> fc =
        it != f.f.end() ? it->second : std::vector<Column>(C.rank(c), zero_column(D.rank(c)));
    if (static_cast<int>(fc.size()) != C.rank(c)) throw InputError("chain map has the wrong shape in degree " + std::to_string(c));
    auto itn = f.f.find(c + 1);
    std::vector<Column> fn =
        itn != f.f.end() ? itn->second : std::vector<Column>(C.rank(c + 1), zero_column(D.rank(c + 1)));
    std::vector<Column> dc = C.diff(c), dd = D.diff(c);
    const PModule& tgt = D.at(c + 1);
    SubmoduleGB gb(R, tgt.twists, tgt.rels);
    for (int j = 0; j < C.rank(c); ++j) {
      Column lhs = apply(R, dd, fc[j]);
      Column rhs = C.rank(c + 1) ? apply(R, fn, dc[j]) : zero_column(D.rank(c + 1));
      Column diff = column_add(k, lhs, [&] {
        Column n = rhs;
        for (auto& p : n) p = poly_neg(k, p);
        return n;
      }());
      if (D.rank(c + 1) && !gb.contains(diff))
        throw InputError("not a chain map: square at degree " + std::to_string(c) + " fails on generator " +
                         std::to_string(j));
    }
  }
  Complex out;
  out.ring = C.ring;
  for (int c = lo; c <= hi; ++c) {
    const PModule& a = C.at(c + 1);
    const PModule& b = D.at(c);
    PModule s{a.twists, {}};
    s.twists.insert(s.twists.end(), b.twists.begin(), b.twists.end());
    for (auto r : a.rels) {
      r.resize(s.rank());
      s.rels.push_back(std::move(r));
    }
    for (const auto& r : b.rels) {
      Column c2(a.rank());
      c2.insert(c2.end(), r.begin(), r.end());
      s.rels.push_back(std::move(c2));
    }
    if (s.rank()) out.comp[c] = std::move(s);
  }
  for (int c = lo; c <= hi; ++c) {
    int na = C.rank(c + 1), nb = D.rank(c);
    int ta = C.rank(c + 2), tb = D.rank(c + 1);
    if (na + nb == 0 || ta + tb == 0) continue;
    auto dc = C.diff(c + 1);
    auto dd = D.diff(c);
    auto it = f.f.find(c + 1);
    std::vector<Column> fc = it != f.f.end() ? it->second : std::vector<Column>(na, zero_column(tb));
    std::vector<Column> cols;
    for (int j = 0; j < na; ++j) {
      Column col;
      for (const auto& p : dc[j]) col.push_back(poly_neg(k, p));
      col.resize(ta);
      col.insert(col.end(), fc[j].begin(), fc[j].end());
      cols.push_back(std::move(col));
    }
    for (int j = 0; j < nb; ++j) {
      Column col(ta);
      col.insert(col.end(), dd[j].begin(), dd[j].end());
      cols.push_back(std::move(col));
    }
    out.d[c] = std::move(cols);
  }
  return out;
}

PModule cohomology(const Complex& C, int c) {
  const GradedRing& R = *C.ring;
  const PModule& M = C.at(c);
  if (M.rank() == 0 || R.is_zero_ring()) return PModule{};
  const PModule& N = C.at(c + 1);
  std::vector<Column> Z = kernel(R, M.twists, C.diff(c), N.twists, N.rels);
  std::vector<Column> B = M.rels;
  if (C.rank(c - 1)) {
    auto din = C.diff(c - 1);
    B.insert(B.end(), din.begin(), din.end());
  }
  return subquotient(R, M.twists, Z, B);
}

CohomologyProfile cohomology_profile(const Complex& C, int lo, int hi) {
  CohomologyProfile p;
  for (int c = lo; c <= hi; ++c) {
    PModule H = cohomology(C, c);
    if (H.rank() == 0) continue;
    p.H[c] = std::move(H);
    p.zero = false;
    p.sup = std::max(p.sup, c);
    p.inf = std::min(p.inf, c);
  }
  return p;
}

CohomologyProfile cohomology_profile(const Complex& C) {
  if (C.empty()) return CohomologyProfile{};
  return cohomology_profile(C, C.lo(), C.hi());
}

std::vector<long> cohomology_hilbert(const Complex& C, int c, int lo, int hi) {
  return hilbert_values(*C.ring, cohomology(C, c), lo, hi);
}

Complex hom_complex(const Complex& C, const Complex& D) {
  if (!C.is_free()) throw InputError("hom_complex: the source complex must be free");
  if (!C.ring->same_ring(*D.ring)) throw InputError("hom_complex: ring mismatch");
  const GradedRing& R = *C.ring;
  const Field& k = R.field();
  Complex out;
  out.ring = C.ring;
  if (C.empty() || D.empty()) return out;
  struct Block {
    int p, g, offset;
  };
  std::map<int, std::vector<Block>> blocks;
  for (int n = D.lo() - C.hi(); n <= D.hi() - C.lo(); ++n) {
    PModule M;
    for (int p = C.lo(); p <= C.hi(); ++p) {
      const PModule& Dq = D.at(p + n);
      if (Dq.rank() == 0) continue;
      for (int g = 0; g < C.rank(p); ++g) {
        int off = M.rank();
        blocks[n].push_back(Block{p, g, off});
        for (int t : Dq.twists) M.twists.push_back(t - C.at(p).twists[g]);
        for (const auto& r : Dq.rels) {
          Column col(off);
          col.insert(col.end(), r.begin(), r.end());
          M.rels.push_back(std::move(col));
        }
      }
    }
    for (auto& r : M.rels) r.resize(M.rank());
    if (M.rank()) out.comp[n] = std::move(M);
  }
  for (auto& [n, src_blocks] : blocks) {
    auto tit = blocks.find(n + 1);
    if (tit == blocks.end()) continue;
    int trank = out.rank(n + 1);
    std::map<std::pair<int, int>, int> toff;
    for (const auto& b : tit->second) toff[{b.p, b.g}] = b.offset;
    std::vector<Column> cols(out.rank(n), zero_column(trank));
    long sign = (n % 2 == 0) ? -1 : 1;
    for (const auto& b : src_blocks) {
      int q = b.p + n;
      // d_D phi: same block index (p, g).
      auto it = toff.find({b.p, b.g});
      if (it != toff.end()) {
        auto dd = D.diff(q);
        for (int j = 0; j < D.rank(q); ++j)
          for (int i = 0; i < D.rank(q + 1); ++i) cols[b.offset + j][it->second + i] = dd[j][i];
      }
      // -(-1)^n phi d_C: phi on C^p feeds blocks (p - 1, g') through d_C(g').
      if (C.rank(b.p - 1)) {
        auto dc = C.diff(b.p - 1);
        for (int g2 = 0; g2 < C.rank(b.p - 1); ++g2) {
          const Poly& c = dc[g2][b.g];
          if (c.empty()) continue;
          auto it2 = toff.find({b.p - 1, g2});
          if (it2 == toff.end()) continue;
          Poly sc = poly_scale(k, c, k.from_int(sign));
          for (int j = 0; j < D.rank(q); ++j) {
            Poly& e = cols[b.offset + j][it2->second + j];
            e = poly_add(k, e, sc);
          }
        }
      }
    }
    out.d[n] = std::move(cols);
  }
  return out;
}

Complex tensor_complex(const Complex& C, const Complex& D) {
  if (!C.is_free()) throw InputError("tensor_complex: the first complex must be free");
  if (!C.ring->same_ring(*D.ring)) throw InputError("tensor_complex: ring mismatch");
  const Field& k = C.ring->field();
  Complex out;
  out.ring = C.ring;
  if (C.empty() || D.empty()) return out;
  struct Block {
    int p, g, offset;
  };
  std::map<int, std::vector<Block>> blocks;
  for (int n = C.lo() + D.lo(); n <= C.hi() + D.hi(); ++n) {
    PModule M;
    for (int p = C.lo(); p <= C.hi(); ++p) {
      const PModule& Dq = D.at(n - p);
      if (Dq.rank() == 0) continue;
      for (int g = 0; g < C.rank(p); ++g) {
        int off = M.rank();
        blocks[n].push_back(Block{p, g, off});
        for (int t : Dq.twists) M.twists.push_back(t + C.at(p).twists[g]);
        for (const auto& r : Dq.rels) {
          Column col(off);
          col.insert(col.end(), r.begin(), r.end());
          M.rels.push_back(std::move(col));
        }
      }
    }
    for (auto& r : M.rels) r.resize(M.rank());
    if (M.rank()) out.comp[n] = std::move(M);
  }
  for (auto& [n, src_blocks] : blocks) {
    auto tit = blocks.find(n + 1);
    if (tit == blocks.end()) continue;
    int trank = out.rank(n + 1);
    std::map<std::pair<int, int>, int> toff;
    for (const auto& b : tit->second) toff[{b.p, b.g}] = b.offset;
    std::vector<Column> cols(out.rank(n), zero_column(trank));
    for (const auto& b : src_blocks) {
      int q = n - b.p;
      auto it = toff.find({b.p, b.g});
      if (it != toff.end()) {
        auto dd = D.diff(q);
        bool neg = (b.p % 2 != 0);
        for (int j = 0; j < D.rank(q); ++j)
          for (int i = 0; i < D.rank(q + 1); ++i)
            cols[b.offset + j][it->second + i] = neg ? poly_neg(k, dd[j][i]) : dd[j][i];
      }
      if (C.rank(b.p + 1)) {
        auto dc = C.diff(b.p);
        for (int g2 = 0; g2 < C.rank(b.p + 1); ++g2) {
          const Poly& c = dc[b.g][g2];
          if (c.empty()) continue;
          auto it2 = toff.find({b.p + 1, g2});
          if (it2 == toff.end()) continue;
          for (int j = 0; j < D.rank(q); ++j) {
            Poly& e = cols[b.offset + j][it2->second + j];
            e = poly_add(k, e, c);
          }
        }
      }
    }
    out.d[n] = std::move(cols);
  }
  return out;
}

Complex koszul_complex(RingPtr ring, const std::vector<Poly>& a) {
  const GradedRing& R = *ring;
  const Field& k = R.field();
  int l = static_cast<int>(a.size());
  std::vector<int> deg(l);
  std::vector<Poly> an(l);
  for (int i = 0; i < l; ++i) {
    if (!is_homogeneous(a[i])) throw InputError("Koszul element " + R.str(a[i]) + " is not homogeneous");
    an[i] = R.normal_form(a[i]);
    deg[i] = a[i].empty() ? 0 : leading_degree(a[i]);
  }
  Complex C;
  C.ring = ring;
  std::vector<std::vector<std::vector<int>>> subsets(l + 1);
  std::vector<std::map<std::vector<int>, int>> index(l + 1);
  for (int s = 0; s <= l; ++s) {
    subsets[s] = subsets_of_size(l, s);
    PModule M;
    for (std::size_t j = 0; j < subsets[s].size(); ++j) {
      int dsum = 0;
      for (int i : subsets[s][j]) dsum += deg[i];
      M.twists.push_back(-dsum);
      index[s][subsets[s][j]] = static_cast<int>(j);
    }
    C.comp[-s] = std::move(M);
  }
  for (int s = 1; s <= l; ++s) {
    std::vector<Column> cols;
    for (const auto& S : subsets[s]) {
      Column col(subsets[s - 1].size());
      for (int t = 0; t < s; ++t) {
        std::vector<int> T = S;
        T.erase(T.begin() + t);
        Poly term = (t % 2 == 0) ? an[S[t]] : poly_neg(k, an[S[t]]);
        Poly& e = col[index[s - 1][T]];
        e = poly_add(k, e, term);
      }
      cols.push_back(std::move(col));
    }
    C.d[-s] = std::move(cols);
  }
  return C;
}

Complex module_complex(RingPtr ring, const PModule& M) {
  Complex C;
  C.ring = std::move(ring);
  if (M.rank()) C.comp[0] = M;
  return C;
}

Complex minimize(const Complex& C) {
  if (!C.is_free()) throw InputError("minimize: complex is not free");
  const GradedRing& R = *C.ring;
  const Field& k = R.field();
  Complex X = C;
  for (auto& [c, cols] : X.d)
    for (auto& col : cols) col = column_normal_form(R, col);
  for (;;) {
    bool found = false;
    for (auto& [c, cols] : X.d) {
      int pj = -1, pr = -1;
      for (std::size_t j = 0; j < cols.size() && pj < 0; ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i)
          if (!cols[j][i].empty() && cols[j][i].front().mono.deg == 0) {
            pj = static_cast<int>(j);
            pr = static_cast<int>(i);
            break;
          }
      if (pj < 0) continue;
      found = true;
      const int cc = c;
      Column pivot = cols[pj];
      Scalar uinv = k.inv(pivot[pr].front().coef);
      std::vector<Column> next;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(j) == pj) continue;
        Column col = cols[j];
        if (!col[pr].empty()) column_axpy(R, col, poly_scale(k, col[pr], k.neg(uinv)), pivot);
        col.erase(col.begin() + pr);
        next.push_back(std::move(col));
      }
      cols = std::move(next);
      auto prev = X.d.find(cc - 1);
      if (prev != X.d.end())
        for (auto& col : prev->second) col.erase(col.begin() + pj);
      auto nxt = X.d.find(cc + 1);
      if (nxt != X.d.end()) nxt->second.erase(nxt->second.begin() + pr);
      X.comp[cc].twists.erase(X.comp[cc].twists.begin() + pj);
      X.comp[cc + 1].twists.erase(X.comp[cc + 1].twists.begin() + pr);
      break;
    }
    if (!found) break;
  }
  for (auto it = X.comp.begin(); it != X.comp.end();) {
    if (it->second.rank() == 0) {
      X.d.erase(it->first);
      it = X.comp.erase(it);
    } else {
      ++it;
    }
  }
  for (auto it = X.d.begin(); it != X.d.end();) {
    if (X.rank(it->first + 1) == 0 || it->second.empty()) {
      it = X.d.erase(it);
    } else {
      ++it;
    }
  }
  return X;
}

std::vector<int> ResolutionCertificate::betti() const {
  std::vector<int> b;
  for (const auto& t : twists) b.push_back(static_cast<int>(t.size()));
  return b;
}

Complex ResolutionCertificate::as_complex(RingPtr ring) const {
  Complex C;
  C.ring = std::move(ring);
  for (std::size_t i = 0; i < twists.size(); ++i)
    if (!twists[i].empty()) C.comp[top - static_cast<int>(i)] = PModule::free(twists[i]);
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (!maps[i].cols.empty() && !maps[i].tgt.empty()) C.d[top - static_cast<int>(i) - 1] = maps[i].cols;
  return C;
}

ResolutionCertificate minimal_free_resolution(RingPtr ring, const PModule& M, int cutoff) {
  if (cutoff < 0) throw InputError("resolution cutoff must be nonnegative");
  const GradedRing& R = *ring;
  ResolutionCertificate cert;
  cert.cutoff = cutoff;
  PModule m = minimal_presentation(R, M);
  if (m.rank() == 0) {
    cert.terminated = true;
    return cert;
  }
  cert.twists.push_back(m.twists);
  cert.length = 0;
  std::vector<Column> rel = m.rels;
  int i = 0;
  for (;;) {
    if (rel.empty()) {
      cert.terminated = true;
      break;
    }
    if (i + 1 > cutoff) break;
    std::vector<int> tw;
    for (const auto& c : rel) tw.push_back(-column_degree(cert.twists[i], c));
    cert.maps.push_back(GradedMatrix{tw, cert.twists[i], rel});
    cert.twists.push_back(tw);
    ++i;
    cert.length = i;
    rel = kernel(R, tw, rel, cert.twists[i - 1]);
  }
  return cert;
}

ResolutionCertificate minimal_free_resolution(const Complex& C) {
  Complex X = minimize(C);
  ResolutionCertificate cert;
  cert.terminated = true;
  if (X.empty()) return cert;
  cert.top = X.hi();
  int lo = X.lo();
  cert.cutoff = cert.top - lo;
  for (int c = cert.top; c >= lo; --c) cert.twists.push_back(X.at(c).twists);
  for (int c = cert.top - 1; c >= lo; --c) {
    GradedMatrix m{X.at(c).twists, X.at(c + 1).twists, X.diff(c)};
    cert.maps.push_back(std::move(m));
  }
  cert.length = cert.top - lo;
  return cert;
}

namespace {

int known_bottom(const ResolutionCertificate& F) {
  return F.terminated ? INT_MIN : F.top - static_cast<int>(F.twists.size()) + 1;
}

}  // namespace

std::map<int, PModule> ext_table(const ResolutionCertificate& FM, const Complex& N, int lo, int hi) {
  std::map<int, PModule> out;
  if (FM.length < 0 || N.empty()) return out;
  int need = N.lo() - hi - 1;
  if (need < known_bottom(FM))
    throw InputError("resolution cutoff insufficient for Ext^" + std::to_string(hi) + ": need cutoff " +
                     std::to_string(FM.top - need));
  Complex H = hom_complex(FM.as_complex(N.ring), N);
  for (int i = lo; i <= hi; ++i) {
    PModule E = cohomology(H, i);
    if (E.rank()) out[i] = std::move(E);
  }
  return out;
}

std::map<int, PModule> tor_table(const ResolutionCertificate& FM, const Complex& N, int lo, int hi) {
  std::map<int, PModule> out;
  if (FM.length < 0 || N.empty()) return out;
  int need = -hi - 1 - N.hi();
  if (need < known_bottom(FM))
    throw InputError("resolution cutoff insufficient for Tor_" + std::to_string(hi) + ": need cutoff " +
                     std::to_string(FM.top - need));
  Complex T = tensor_complex(FM.as_complex(N.ring), N);
  for (int i = lo; i <= hi; ++i) {
    PModule E = cohomology(T, -i);
    if (E.rank()) out[i] = std::move(E);
  }
  return out;
}

}  // namespace findim
