#include "findim/groebner.hpp"

#include <algorithm>

namespace findim {

ModuleOrder::ModuleOrder(std::vector<int> gen_degrees, std::vector<int> blocks)
    : gdeg_(std::move(gen_degrees)), block_(std::move(blocks)) {
  if (!block_.empty() && block_.size() != gdeg_.size()) throw std::logic_error("block vector size mismatch");
}

int ModuleOrder::compare(const VTerm& a, const VTerm& b) const {
  int ba = block(a.comp), bb = block(b.comp);
  if (ba != bb) return ba > bb ? 1 : -1;
  int da = degree(a), db = degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.mono.exp[i] != b.mono.exp[i]) return a.mono.exp[i] < b.mono.exp[i] ? 1 : -1;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

void vec_sort(const ModuleOrder& ord, Vec& v) {
  std::sort(v.begin(), v.end(), [&](const VTerm& a, const VTerm& b) { return ord.compare(a, b) > 0; });
}

Vec vec_from_column(const ModuleOrder& ord, const std::vector<Poly>& column, int offset) {
  Vec v;
  for (std::size_t r = 0; r < column.size(); ++r)
    for (const auto& t : column[r]) v.push_back(VTerm{t.coef, t.mono, static_cast<int>(r) + offset});
  vec_sort(ord, v);
  return v;
}

std::vector<Poly> vec_to_column(const Vec& v, int rank, int offset) {
  std::vector<Poly> col(rank);
  for (const auto& t : v) {
    int r = t.comp - offset;
    if (r < 0 || r >= rank) continue;
    col[r].push_back(Term{t.coef, t.mono});
  }
  for (auto& p : col)
    std::sort(p.begin(), p.end(), [](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
  return col;
}

Vec vec_add(const ModuleOrder& ord, const Field& k, const Vec& a, const Vec& b) {
  Vec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = (i == a.size()) ? -1 : (j == b.size()) ? 1 : ord.compare(a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      Scalar s = k.add(a[i].coef, b[j].coef);
      if (s != 0) out.push_back(VTerm{s, a[i].mono, a[i].comp});
      ++i;
      ++j;
    }
  }
  return out;
}

void vec_axpy(const ModuleOrder& ord, const Field& k, Vec& a, const Scalar& c, const Monomial& m, const Vec& b) {
  if (c == 0 || b.empty()) return;
  Vec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  VTerm cur;
  while (i < a.size() || j < b.size()) {
    bool have_b = j < b.size();
    if (have_b) {
      cur.mono = b[j].mono * m;
      cur.comp = b[j].comp;
    }
    int cmp = (i == a.size()) ? -1 : !have_b ? 1 : ord.compare(a[i], cur);
    if (cmp > 0) {
      out.push_back(std::move(a[i++]));
    } else if (cmp < 0) {
      out.push_back(VTerm{k.mul(c, b[j].coef), cur.mono, cur.comp});
      ++j;
    } else {
      Scalar s = k.add(a[i].coef, k.mul(c, b[j].coef));
      if (s != 0) out.push_back(VTerm{std::move(s), cur.mono, cur.comp});
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

int vec_degree(const ModuleOrder& ord, const Vec& v) { return v.empty() ? INT_MIN : ord.degree(v.front()); }

ModuleGB::ModuleGB(const PolyRing& ring, ModuleOrder order)
    : ring_(&ring), order_(std::move(order)), by_comp_(order_.rank()) {}

void ModuleGB::add_generator(Vec v) {
  if (v.empty()) return;
  int d = vec_degree(order_, v);
  if (d <= completed_) {
    // Late generator below the completed degree: reduce and insert now, then
    // let the pairs it creates be processed by the next complete().
    Vec r = reduce(std::move(v), false);
    if (!r.empty()) insert(std::move(r));
    completed_ = std::min(completed_, d - 1);
    return;
  }
  pending_.emplace(d, std::move(v));
}

int ModuleGB::find_divisor(const Monomial& m, int comp) const {
  for (int idx : by_comp_[comp])
    if (divides(basis_[idx].front().mono, m)) return idx;
  return -1;
}

Vec ModuleGB::reduce(Vec v, bool full) const {
  const Field& k = ring_->field();
  Vec rem;
  while (!v.empty()) {
    const VTerm& lt = v.front();
    int idx = find_divisor(lt.mono, lt.comp);
    if (idx >= 0) {
      const Vec& g = basis_[idx];
      Scalar c = k.neg(k.div(lt.coef, g.front().coef));
      Monomial q = quotient(lt.mono, g.front().mono);
      vec_axpy(order_, k, v, c, q, g);
    } else if (full) {
      rem.push_back(std::move(v.front()));
      v.erase(v.begin());
    } else {
      return v;
    }
  }
  return rem;
}

void ModuleGB::insert(Vec h) {
  const Field& k = ring_->field();
  Scalar inv = k.inv(h.front().coef);
  for (auto& t : h) t.coef = k.mul(t.coef, inv);
  int n = static_cast<int>(basis_.size());
  int comp = h.front().comp;
  const Monomial& lh = h.front().mono;
  bool ideal_case = order_.rank() == 1;

  // Chain criterion on existing pairs.
  std::vector<Pair> kept;
  kept.reserve(pairs_.size());
  for (auto& p : pairs_) {
    const Vec& gi = basis_[p.i];
    if (gi.front().comp == comp && divides(lh, p.lcm)) {
      Monomial li = ring_->lcm(gi.front().mono, lh);
      Monomial lj = ring_->lcm(basis_[p.j].front().mono, lh);
      if (li != p.lcm && lj != p.lcm) continue;
    }
    kept.push_back(p);
  }
  pairs_ = std::move(kept);

  std::vector<Pair> fresh;
  std::vector<bool> coprime_flag;
  for (int idx : by_comp_[comp]) {
    Monomial l = ring_->lcm(basis_[idx].front().mono, lh);
    fresh.push_back(Pair{idx, n, l, l.deg + order_.gen_degree(comp)});
    coprime_flag.push_back(ideal_case && coprime(basis_[idx].front().mono, lh));
  }
  // Drop pairs whose lcm is strictly divisible by another fresh lcm; keep one
  // per equal lcm (none if any member is coprime in the ideal case).
  std::vector<bool> drop(fresh.size(), false);
  for (std::size_t a = 0; a < fresh.size(); ++a)
    for (std::size_t b = 0; b < fresh.size(); ++b) {
      if (a == b) continue;
      if (divides(fresh[b].lcm, fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm) drop[a] = true;
    }
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (drop[a]) continue;
    bool any_coprime = coprime_flag[a];
    for (std::size_t b = a + 1; b < fresh.size(); ++b)
      if (!drop[b] && fresh[b].lcm == fresh[a].lcm) {
        any_coprime = any_coprime || coprime_flag[b];
        drop[b] = true;
      }
    if (any_coprime) drop[a] = true;
  }
  for (std::size_t a = 0; a < fresh.size(); ++a)
    if (!drop[a]) pairs_.push_back(fresh[a]);

  basis_.push_back(std::move(h));
  by_comp_[comp].push_back(n);
}

void ModuleGB::complete(int degree_limit) {
  const Field& k = ring_->field();
  for (;;) {
    int d = INT_MAX;
    for (const auto& p : pairs_) d = std::min(d, p.degree);
    if (!pending_.empty()) d = std::min(d, pending_.begin()->first);
    if (d == INT_MAX || d > degree_limit) break;

    std::vector<Vec> work;
    std::vector<Pair> rest;
    for (const auto& p : pairs_) {
      if (p.degree != d) {
        rest.push_back(p);
        continue;
      }
      const Vec& f = basis_[p.i];
      const Vec& g = basis_[p.j];
      Vec s;
      vec_axpy(order_, k, s, k.inv(f.front().coef), quotient(p.lcm, f.front().mono), f);
      vec_axpy(order_, k, s, k.neg(k.inv(g.front().coef)), quotient(p.lcm, g.front().mono), g);
      work.push_back(std::move(s));
    }
    pairs_ = std::move(rest);
    while (!pending_.empty() && pending_.begin()->first == d) {
      work.push_back(std::move(pending_.begin()->second));
      pending_.erase(pending_.begin());
    }
    for (auto& w : work) {
      Vec r = reduce(std::move(w), false);
      if (!r.empty()) insert(std::move(r));
    }
    completed_ = std::max(completed_, d);
  }
  if (degree_limit == INT_MAX || (pairs_.empty() && pending_.empty())) {
    completed_ = INT_MAX;
  } else {
    completed_ = std::max(completed_, degree_limit);
  }
}

bool ModuleGB::contains(const Vec& v) {
  if (v.empty()) return true;
  int d = vec_degree(order_, v);
  if (completed_ < d) complete(d);
  return reduce(v, false).empty();
}

std::vector<Vec> ModuleGB::reduced_basis() const {
  const Field& k = ring_->field();
  std::vector<int> keep;
  for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
    bool redundant = false;
    for (int j = 0; j < static_cast<int>(basis_.size()) && !redundant; ++j) {
      if (i == j || basis_[j].front().comp != basis_[i].front().comp) continue;
      if (!divides(basis_[j].front().mono, basis_[i].front().mono)) continue;
      if (basis_[j].front().mono != basis_[i].front().mono || j < i) redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }
  ModuleGB lead(*ring_, order_);
  for (int i : keep) {
    lead.basis_.push_back(basis_[i]);
    lead.by_comp_[basis_[i].front().comp].push_back(static_cast<int>(lead.basis_.size()) - 1);
  }
  std::vector<Vec> out;
  for (std::size_t a = 0; a < lead.basis_.size(); ++a) {
    Vec head{lead.basis_[a].front()};
    Vec tail(lead.basis_[a].begin() + 1, lead.basis_[a].end());
    Vec r = lead.reduce(std::move(tail), true);
    head.insert(head.end(), r.begin(), r.end());
    Scalar inv = k.inv(head.front().coef);
    for (auto& t : head) t.coef = k.mul(t.coef, inv);
    out.push_back(std::move(head));
  }
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) { return order_.compare(a.front(), b.front()) < 0; });
  return out;
}

std::vector<Poly> ideal_groebner(const PolyRing& ring, const std::vector<Poly>& gens) {
  ModuleOrder ord({0});
  ModuleGB gb(ring, ord);
  for (const auto& g : gens) gb.add_generator(vec_from_column(ord, {g}));
  gb.complete();
  std::vector<Poly> out;
  for (const auto& v : gb.reduced_basis()) out.push_back(vec_to_column(v, 1)[0]);
  return out;
}

Poly ideal_normal_form(const PolyRing& ring, const std::vector<Poly>& gb, const Poly& f) {
  const Field& k = ring.field();
  Poly v = f;
  Poly rem;
  while (!v.empty()) {
    const Term& lt = v.front();
    const Poly* div = nullptr;
    for (const auto& g : gb)
      if (divides(g.front().mono, lt.mono)) {
        div = &g;
        break;
      }
    if (div) {
      Scalar c = k.neg(k.div(lt.coef, div->front().coef));
      poly_axpy(k, v, c, quotient(lt.mono, div->front().mono), *div);
    } else {
      rem.push_back(v.front());
      v.erase(v.begin());
    }
  }
  return rem;
}

}  // namespace findim
