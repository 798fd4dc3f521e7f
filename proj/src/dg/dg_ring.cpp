#include <algorithm>
#include <functional>

#include "findim/dg.hpp"

namespace findim {

namespace {

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

std::vector<std::vector<int>> subsets_by_size(int n) {
  std::vector<std::vector<int>> out;
  for (int size = 0; size <= n; ++size) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
      }
      for (int i = start; i < n; ++i) {
        cur.push_back(i);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

namespace {

std::string join_polys(const GradedRing& R, const std::vector<Poly>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += R.str(v[i]);
  }
  return s;
}

}  // namespace

const char* to_string(DGKind k) {
  switch (k) {
    case DGKind::ring: return "ring";
    case DGKind::koszul: return "koszul";
    case DGKind::trivial_extension: return "trivial-extension";
    case DGKind::product: return "product";
  }
  return "?";
}

DGFactor::DGFactor(RingPtr base, std::vector<BasisElement> basis, std::vector<std::vector<BasisProduct>> mult,
                   std::vector<AElem> diff, std::string label)
    : base_(std::move(base)), basis_(std::move(basis)), mult_(std::move(mult)), diff_(std::move(diff)),
      label_(std::move(label)) {
  if (basis_.empty() || basis_[0].cdeg != 0 || basis_[0].tdeg != 0 || !basis_[0].ann.empty())
    throw InputError("DG-ring basis must start with the unit");
  for (std::size_t b = 1; b < basis_.size(); ++b)
    if (basis_[b].cdeg >= 0) throw InputError("DG-ring is not non-positive: basis element " + basis_[b].name);
  for (const auto& e : basis_) {
    coef_rings_.push_back(e.ann.empty() ? base_ : base_->quotient(e.ann));
    min_cdeg_ = std::min(min_cdeg_, e.cdeg);
  }
  for (std::size_t b = 0; b < diff_.size(); ++b) diff_[b] = reduce(diff_[b]);

  std::vector<Poly> h0_rel;
  for (std::size_t b = 0; b < basis_.size(); ++b)
    if (basis_[b].cdeg == -1 && !diff_[b][0].empty()) h0_rel.push_back(diff_[b][0]);
  h0_ = h0_rel.empty() ? base_ : base_->quotient(h0_rel);

  complex_.ring = base_;
  std::map<int, std::vector<int>> by_degree;
  for (std::size_t b = 0; b < basis_.size(); ++b) by_degree[basis_[b].cdeg].push_back(static_cast<int>(b));
  std::map<int, std::map<int, int>> pos;
  for (const auto& [c, list] : by_degree) {
    PModule M;
    for (int b : list) {
      pos[c][b] = M.rank();
      M.twists.push_back(-basis_[b].tdeg);
    }
    for (int b : list)
      for (const auto& f : basis_[b].ann) {
        Column col(M.rank());
        col[pos[c][b]] = base_->normal_form(f);
        if (!col[pos[c][b]].empty()) M.rels.push_back(std::move(col));
      }
    complex_.comp[c] = std::move(M);
  }
  for (const auto& [c, list] : by_degree) {
    if (!by_degree.count(c + 1)) continue;
    std::vector<Column> cols;
    for (int b : list) {
      Column col(complex_.rank(c + 1));
      for (std::size_t t = 0; t < basis_.size(); ++t)
        if (!diff_[b][t].empty()) col[pos[c + 1][static_cast<int>(t)]] = diff_[b][t];
      cols.push_back(std::move(col));
    }
    complex_.d[c] = std::move(cols);
  }
  if (!base_->is_zero_ring()) profile_ = cohomology_profile(complex_);
}

AElem DGFactor::unit() const {
  AElem x = zero();
  x[0] = poly_constant(base_->field(), Scalar(1));
  return x;
}

AElem DGFactor::scalar(const Poly& r) const {
  AElem x = zero();
  x[0] = base_->normal_form(r);
  return x;
}

AElem DGFactor::reduce(const AElem& x) const {
  AElem out(basis_.size());
  for (std::size_t b = 0; b < basis_.size() && b < x.size(); ++b) out[b] = coef_rings_[b]->normal_form(x[b]);
  return out;
}

AElem DGFactor::add(const AElem& x, const AElem& y) const {
  AElem out(basis_.size());
  for (std::size_t b = 0; b < basis_.size(); ++b) out[b] = poly_add(base_->field(), x[b], y[b]);
  return reduce(out);
}

AElem DGFactor::mul(const AElem& x, const AElem& y) const {
  const Field& k = base_->field();
  AElem out(basis_.size());
  for (std::size_t a = 0; a < basis_.size(); ++a) {
    if (x[a].empty()) continue;
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      if (y[b].empty()) continue;
      const BasisProduct& p = mult_[a][b];
      if (p.sign == 0) continue;
      Poly t = poly_mul(k, x[a], y[b]);
      if (p.sign < 0) t = poly_neg(k, t);
      out[p.index] = poly_add(k, out[p.index], t);
    }
  }
  return reduce(out);
}

AElem DGFactor::d(const AElem& x) const {
  const Field& k = base_->field();
  AElem out(basis_.size());
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    if (x[b].empty()) continue;
    for (std::size_t t = 0; t < basis_.size(); ++t)
      if (!diff_[b][t].empty()) out[t] = poly_add(k, out[t], poly_mul(k, x[b], diff_[b][t]));
  }
  return reduce(out);
}

bool DGFactor::is_zero(const AElem& x) const {
  AElem r = reduce(x);
  for (const auto& f : r)
    if (!f.empty()) return false;
  return true;
}

std::string DGFactor::verify_structure() const {
  const Field& k = base_->field();
  int n = size();
  auto basis_elem = [&](int b) {
    AElem x = zero();
    x[b] = poly_constant(k, Scalar(1));
    return x;
  };
  auto neg = [&](AElem x) {
    for (auto& f : x) f = poly_neg(k, f);
    return x;
  };
  for (int a = 0; a < n; ++a) {
    for (int t = 0; t < n; ++t) {
      const Poly& r = diff_[a][t];
      if (r.empty()) continue;
      if (basis_[t].cdeg != basis_[a].cdeg + 1 || !is_homogeneous(r) ||
          leading_degree(r) + basis_[t].tdeg != basis_[a].tdeg)
        return "differential of " + basis_[a].name + " is not homogeneous";
    }
    for (const auto& f : basis_[a].ann) {
      AElem fa = zero();
      fa[0] = f;
      if (!is_zero(mul(fa, d(basis_elem(a))))) return "annihilator of " + basis_[a].name + " does not kill its differential";
    }
    if (!is_zero(d(d(basis_elem(a))))) return "d^2 != 0 on " + basis_[a].name;
    for (int b = 0; b < n; ++b) {
      const BasisProduct& p = mult_[a][b];
      const BasisProduct& q = mult_[b][a];
      int s = parity_sign(static_cast<long>(basis_[a].cdeg) * basis_[b].cdeg);
      if (p.sign != s * q.sign || (p.sign != 0 && p.index != q.index))
        return "multiplication is not graded-commutative on " + basis_[a].name + ", " + basis_[b].name;
      if (p.sign != 0) {
        const BasisElement& e = basis_[p.index];
        if (e.cdeg != basis_[a].cdeg + basis_[b].cdeg || e.tdeg != basis_[a].tdeg + basis_[b].tdeg)
          return "product " + basis_[a].name + "*" + basis_[b].name + " has the wrong degree";
        for (const auto& f : basis_[a].ann)
          if (!coef_rings_[p.index]->normal_form(f).empty())
            return "annihilator of " + basis_[a].name + " does not kill " + e.name;
      }
      if (a == b && basis_[a].cdeg % 2 != 0 && p.sign != 0) return "odd element " + basis_[a].name + " squares to nonzero";
      AElem xa = basis_elem(a), xb = basis_elem(b);
      AElem lhs = d(mul(xa, xb));
      AElem rhs = add(mul(d(xa), xb), basis_[a].cdeg % 2 == 0 ? mul(xa, d(xb)) : neg(mul(xa, d(xb))));
      if (!is_zero(add(lhs, neg(rhs)))) return "Leibniz rule fails on " + basis_[a].name + ", " + basis_[b].name;
      for (int c = 0; c < n; ++c) {
        AElem xc = basis_elem(c);
        if (!is_zero(add(mul(mul(xa, xb), xc), neg(mul(xa, mul(xb, xc))))))
          return "multiplication is not associative on " + basis_[a].name + ", " + basis_[b].name + ", " + basis_[c].name;
      }
    }
  }
  return "";
}

int DGRing::h0_dim() const {
  int d = -1;
  for (const auto& f : factors)
    if (!f->is_zero()) d = std::max(d, f->h0_dim());
  return d;
}

int DGRing::inf() const {
  int v = INT_MAX;
  for (const auto& f : factors)
    if (!f->is_zero() && !f->profile().zero) v = std::min(v, f->profile().inf);
  return v;
}

int DGRing::sup() const {
  int v = INT_MIN;
  for (const auto& f : factors)
    if (!f->is_zero() && !f->profile().zero) v = std::max(v, f->profile().sup);
  return v;
}

int DGRing::amp() const {
  int s = sup(), i = inf();
  return s == INT_MIN ? 0 : s - i;
}

FactorPtr ring_factor(RingPtr R) {
  std::vector<BasisElement> basis{BasisElement{"1", 0, 0, {}}};
  std::vector<std::vector<BasisProduct>> mult{{BasisProduct{1, 0}}};
  std::vector<AElem> diff{AElem(1)};
  std::string label = R->describe();
  return std::make_shared<const DGFactor>(std::move(R), basis, mult, diff, label);
}

FactorPtr koszul_factor(RingPtr R, const std::vector<Poly>& a) {
  const GradedRing& ring = *R;
  const Field& k = ring.field();
  int l = static_cast<int>(a.size());
  if (l > 6) throw InputError("Koszul DG-rings support at most 6 elements");
  std::vector<int> deg(l);
  std::vector<Poly> an(l);
  for (int i = 0; i < l; ++i) {
    if (!is_homogeneous(a[i])) throw InputError("Koszul element " + ring.str(a[i]) + " is not homogeneous");
    an[i] = ring.normal_form(a[i]);
    deg[i] = a[i].empty() ? 0 : leading_degree(a[i]);
  }
  auto subsets = subsets_by_size(l);
  std::map<std::vector<int>, int> index;
  std::vector<BasisElement> basis;
  for (const auto& S : subsets) {
    index[S] = static_cast<int>(basis.size());
    BasisElement e;
    e.cdeg = -static_cast<int>(S.size());
    for (int i : S) {
      e.tdeg += deg[i];
      e.name += "e" + std::to_string(i + 1);
    }
    if (S.empty()) e.name = "1";
    basis.push_back(std::move(e));
  }
  int n = static_cast<int>(basis.size());
  std::vector<std::vector<BasisProduct>> mult(n, std::vector<BasisProduct>(n));
  for (const auto& S : subsets)
    for (const auto& T : subsets) {
      std::vector<int> U;
      bool overlap = false;
      for (int s : S)
        if (std::find(T.begin(), T.end(), s) != T.end()) overlap = true;
      if (overlap) continue;
      int inversions = 0;
      for (int s : S)
        for (int t : T)
          if (s > t) ++inversions;
      U = S;
      U.insert(U.end(), T.begin(), T.end());
      std::sort(U.begin(), U.end());
      mult[index[S]][index[T]] = BasisProduct{parity_sign(inversions), index[U]};
    }
  std::vector<AElem> diff(n, AElem(n));
  for (const auto& S : subsets)
    for (std::size_t t = 0; t < S.size(); ++t) {
      std::vector<int> T = S;
      T.erase(T.begin() + t);
      Poly term = (t % 2 == 0) ? an[S[t]] : poly_neg(k, an[S[t]]);
      Poly& e = diff[index[S]][index[T]];
      e = poly_add(k, e, term);
    }
  std::string label = "K(" + ring.describe() + "; " + join_polys(ring, a) + ")";
  return std::make_shared<const DGFactor>(std::move(R), basis, mult, diff, label);
}

FactorPtr trivial_extension_factor(RingPtr R, const std::vector<Poly>& I, int n, int twist) {
  if (n <= 0) throw InputError("trivial extension shift must be positive");
  std::vector<Poly> ann = groebner_basis(*R, I);
  std::vector<BasisElement> basis{BasisElement{"1", 0, 0, {}}, BasisElement{"eps", -n, twist, ann}};
  std::vector<std::vector<BasisProduct>> mult{{BasisProduct{1, 0}, BasisProduct{1, 1}},
                                              {BasisProduct{1, 1}, BasisProduct{0, -1}}};
  std::vector<AElem> diff{AElem(2), AElem(2)};
  std::string label = R->describe() + " ⋉ (" + R->describe() + (I.empty() ? "" : "/(" + join_polys(*R, I) + ")") +
                      ")[" + std::to_string(n) + "]";
  return std::make_shared<const DGFactor>(std::move(R), basis, mult, diff, label);
}

namespace {

DGRingPtr single(DGKind kind, FactorPtr f) {
  auto r = std::make_shared<DGRing>();
  r->kind = kind;
  r->label = f->label();
  r->factors.push_back(std::move(f));
  std::string err = r->factors[0]->verify_structure();
  if (!err.empty()) throw InputError("invalid DG-ring " + r->label + ": " + err);
  return r;
}

}  // namespace

DGRingPtr build_ring_dg(RingPtr R) { return single(DGKind::ring, ring_factor(std::move(R))); }

DGRingPtr build_koszul_dg(RingPtr base, const std::vector<Poly>& sequence) {
  RingPtr h0 = base->quotient(sequence);
  if (h0->is_zero_ring() && !base->is_zero_ring()) throw InputError("Koszul sequence generates the unit ideal");
  return single(DGKind::koszul, koszul_factor(std::move(base), sequence));
}

DGRingPtr build_trivial_extension(RingPtr B, RingPtr C, int n) {
  if (n <= 0) throw InputError("trivial extension shift must be positive");
  if (B->field() != C->field()) throw InputError("trivial extension factors must share a field");
  auto r = std::make_shared<DGRing>();
  r->kind = DGKind::trivial_extension;
  r->factors.push_back(ring_factor(B));
  r->factors.push_back(trivial_extension_factor(C, {}, n));
  r->label = "(" + B->describe() + " × " + C->describe() + ") ⋉ " + C->describe() + "[" + std::to_string(n) + "]";
  for (const auto& f : r->factors) {
    std::string err = f->verify_structure();
    if (!err.empty()) throw InputError("invalid DG-ring " + r->label + ": " + err);
  }
  return r;
}

DGRingPtr build_trivial_extension_module(RingPtr R, const std::vector<Poly>& I, int n) {
  return single(DGKind::trivial_extension, trivial_extension_factor(std::move(R), I, n));
}

DGRingPtr factor_ring(const DGRingPtr& A, int factor) {
  if (factor < 0 || factor >= A->nfactors()) throw InputError("factor index out of range");
  if (A->nfactors() == 1) return A;
  auto r = std::make_shared<DGRing>();
  const FactorPtr& f = A->factors[factor];
  if (f->size() == 1)
    r->kind = DGKind::ring;
  else
    r->kind = f->basis(1).name == "eps" ? DGKind::trivial_extension : DGKind::koszul;
  r->label = f->label();
  r->factors.push_back(f);
  return r;
}

DGRingPtr build_product_dg(const std::vector<DGRingPtr>& factors) {
  if (factors.empty()) throw InputError("product of an empty factor list");
  if (factors.size() == 1) return factors[0];
  auto r = std::make_shared<DGRing>();
  r->kind = DGKind::product;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i]->factors.front()->base().field() != factors[0]->factors.front()->base().field())
      throw InputError("product factors must share a field");
    if (i) r->label += " × ";
    r->label += factors[i]->factors.size() > 1 ? "(" + factors[i]->label + ")" : factors[i]->label;
    for (const auto& f : factors[i]->factors) r->factors.push_back(f);
  }
  return r;
}

}  // namespace findim
