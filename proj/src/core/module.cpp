#include "findim/module.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace findim {

GradedMatrix GradedMatrix::zero(std::vector<int> src, std::vector<int> tgt) {
  GradedMatrix m{std::move(src), std::move(tgt), {}};
  m.cols.assign(m.src.size(), zero_column(m.rows()));
  return m;
}

GradedMatrix GradedMatrix::identity(const std::vector<int>& twists) {
  GradedMatrix m = zero(twists, twists);
  for (int i = 0; i < m.rows(); ++i) m.cols[i][i] = Poly{Term{Scalar(1), Monomial{}}};
  return m;
}

std::vector<int> gen_degrees(const std::vector<int>& twists) {
  std::vector<int> d(twists.size());
  for (std::size_t i = 0; i < twists.size(); ++i) d[i] = -twists[i];
  return d;
}

int column_degree(const std::vector<int>& twists, const Column& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].empty()) return leading_degree(c[i]) - twists[i];
  return INT_MIN;
}

bool column_is_zero(const Column& c) {
  for (const auto& f : c)
    if (!f.empty()) return false;
  return true;
}

bool column_is_homogeneous(const std::vector<int>& twists, const Column& c) {
  int d = column_degree(twists, c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].empty()) continue;
    if (!is_homogeneous(c[i]) || leading_degree(c[i]) - twists[i] != d) return false;
  }
  return true;
}

Column zero_column(int rank) { return Column(rank); }

Column unit_column(const Field& k, int rank, int i) {
  Column c(rank);
  c[i] = poly_constant(k, Scalar(1));
  return c;
}

Column column_normal_form(const GradedRing& R, const Column& c) {
  Column out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = R.normal_form(c[i]);
  return out;
}

Column column_add(const Field& k, const Column& a, const Column& b) {
  Column out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = poly_add(k, a[i], b[i]);
  return out;
}

Column column_scale(const GradedRing& R, const Column& a, const Poly& f) {
  Column out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = R.mul(a[i], f);
  return out;
}

void column_axpy(const GradedRing& R, Column& a, const Poly& f, const Column& b) {
  if (f.empty()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].empty()) a[i] = R.normal_form(poly_add(R.field(), a[i], poly_mul(R.field(), f, b[i])));
}

Column apply(const GradedRing& R, const std::vector<Column>& cols, const Column& v) {
  Column out(cols.empty() ? 0 : cols.front().size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (v[j].empty()) continue;
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!cols[j][i].empty()) out[i] = poly_add(R.field(), out[i], poly_mul(R.field(), v[j], cols[j][i]));
  }
  for (auto& f : out) f = R.normal_form(f);
  return out;
}

GradedMatrix compose(const GradedRing& R, const GradedMatrix& a, const GradedMatrix& b) {
  if (a.src.size() != b.tgt.size()) throw std::logic_error("compose: shape mismatch");
  GradedMatrix out{b.src, a.tgt, {}};
  out.cols.reserve(b.cols.size());
  for (const auto& c : b.cols) {
    if (a.cols.empty()) {
      out.cols.push_back(zero_column(out.rows()));
    } else {
      out.cols.push_back(apply(R, a.cols, c));
    }
  }
  return out;
}

bool matrix_is_zero(const GradedRing& R, const GradedMatrix& m) {
  for (const auto& c : m.cols)
    for (const auto& f : c)
      if (!R.normal_form(f).empty()) return false;
  return true;
}

void check_homogeneous(const GradedRing& R, const GradedMatrix& m, const std::string& what) {
  for (int j = 0; j < m.ncols(); ++j)
    for (int i = 0; i < m.rows(); ++i) {
      const Poly& f = m.cols[j][i];
      if (f.empty()) continue;
      if (!is_homogeneous(f) || leading_degree(f) != m.tgt[i] - m.src[j])
        throw InputError(what + ": entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + R.str(f) +
                         " is not homogeneous of degree " + std::to_string(m.tgt[i] - m.src[j]));
    }
}

namespace {

void add_ring_relations(ModuleGB& gb, const GradedRing& R, int first, int count) {
  const ModuleOrder& ord = gb.order();
  for (const auto& f : R.gb())
    for (int i = first; i < first + count; ++i) {
      Vec v;
      for (const auto& t : f) v.push_back(VTerm{t.coef, t.mono, i});
      vec_sort(ord, v);
      gb.add_generator(std::move(v));
    }
}

std::vector<int> degree_order(const std::vector<int>& twists, const std::vector<Column>& cols) {
  std::vector<int> idx(cols.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> deg(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) deg[j] = column_degree(twists, cols[j]);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return deg[a] < deg[b]; });
  return idx;
}

bool has_independent_set(int nvars, const std::vector<Monomial>& leads, unsigned mask) {
  for (const auto& lt : leads) {
    bool inside = true;
    for (int i = 0; i < nvars && inside; ++i)
      if (lt.exp[i] && !(mask & (1u << i))) inside = false;
    if (inside) return false;
  }
  return true;
}

}  // namespace

SubmoduleGB::SubmoduleGB(const GradedRing& R, const std::vector<int>& twists, const std::vector<Column>& gens)
    : R_(&R), twists_(twists), gb_(R.poly(), ModuleOrder(gen_degrees(twists))), leads_(twists.size()) {
  for (const auto& c : gens) {
    if (c.size() != twists.size()) throw std::logic_error("SubmoduleGB: column rank mismatch");
    gb_.add_generator(vec_from_column(gb_.order(), c));
  }
  add_ring_relations(gb_, R, 0, static_cast<int>(twists.size()));
  gb_.complete();
  if (R.is_zero_ring()) {
    for (auto& l : leads_) l.push_back(Monomial{});
    return;
  }
  for (const auto& v : gb_.basis()) leads_[v.front().comp].push_back(v.front().mono);
}

bool SubmoduleGB::contains(const Column& v) const {
  if (R_->is_zero_ring()) return true;
  return gb_.reduce(vec_from_column(gb_.order(), v), false).empty();
}

Column SubmoduleGB::normal_form(const Column& v) const {
  if (R_->is_zero_ring()) return zero_column(static_cast<int>(twists_.size()));
  return vec_to_column(gb_.reduce(vec_from_column(gb_.order(), v), true), static_cast<int>(twists_.size()));
}

std::vector<std::pair<int, Monomial>> SubmoduleGB::standard_basis(int degree) const {
  std::vector<std::pair<int, Monomial>> out;
  for (std::size_t i = 0; i < twists_.size(); ++i) {
    for (const auto& m : monomials_of_degree(R_->poly(), degree + twists_[i])) {
      bool standard = true;
      for (const auto& l : leads_[i])
        if (divides(l, m)) {
          standard = false;
          break;
        }
      if (standard) out.emplace_back(static_cast<int>(i), m);
    }
  }
  return out;
}

long SubmoduleGB::hilbert(int degree) const { return static_cast<long>(standard_basis(degree).size()); }

int SubmoduleGB::dimension() const {
  int n = R_->nvars();
  int best = -1;
  for (const auto& leads : leads_) {
    bool unit = false;
    for (const auto& l : leads)
      if (l.deg == 0) unit = true;
    if (unit) continue;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      int size = __builtin_popcount(mask);
      if (size > best && has_independent_set(n, leads, mask)) best = size;
    }
  }
  return best;
}

bool SubmoduleGB::quotient_is_zero() const { return dimension() < 0; }

long SubmoduleGB::length() const {
  int dim = dimension();
  if (dim < 0) return 0;
  if (dim > 0) return -1;
  int n = R_->nvars();
  long total = 0;
  for (const auto& leads : leads_) {
    bool unit = false;
    for (const auto& l : leads)
      if (l.deg == 0) unit = true;
    if (unit) continue;
    std::vector<int> bound(n, 0);
    for (int v = 0; v < n; ++v) {
      int best = INT_MAX;
      for (const auto& l : leads) {
        bool pure = true;
        for (int u = 0; u < n; ++u)
          if (u != v && l.exp[u]) pure = false;
        if (pure && l.exp[v]) best = std::min(best, static_cast<int>(l.exp[v]));
      }
      bound[v] = best;
    }
    Monomial cur;
    std::vector<int> e(n, 0);
    for (;;) {
      for (int v = 0; v < n; ++v) cur.exp[v] = static_cast<std::uint16_t>(e[v]);
      bool standard = true;
      for (const auto& l : leads)
        if (divides(l, cur)) {
          standard = false;
          break;
        }
      if (standard) ++total;
      int v = 0;
      while (v < n) {
        if (++e[v] < bound[v]) break;
        e[v] = 0;
        ++v;
      }
      if (v == n) break;
    }
  }
  return total;
}

std::vector<int> minimal_subset(const GradedRing& R, const std::vector<int>& twists, const std::vector<Column>& cols,
                                const std::vector<Column>& base) {
  std::vector<int> kept;
  if (R.is_zero_ring()) return kept;
  ModuleGB gb(R.poly(), ModuleOrder(gen_degrees(twists)));
  for (const auto& c : base) gb.add_generator(vec_from_column(gb.order(), c));
  add_ring_relations(gb, R, 0, static_cast<int>(twists.size()));
  for (int j : degree_order(twists, cols)) {
    Vec v = vec_from_column(gb.order(), cols[j]);
    if (v.empty()) continue;
    int d = vec_degree(gb.order(), v);
    gb.complete(d);
    if (gb.reduce(v, false).empty()) continue;
    kept.push_back(j);
    gb.add_generator(std::move(v));
  }
  return kept;
}

std::vector<Column> minimal_generators(const GradedRing& R, const std::vector<int>& twists,
                                       const std::vector<Column>& cols, const std::vector<Column>& base) {
  std::vector<Column> out;
  for (int j : minimal_subset(R, twists, cols, base)) out.push_back(column_normal_form(R, cols[j]));
  return out;
}

bool submodule_contains(const GradedRing& R, const std::vector<int>& twists, const std::vector<Column>& gens,
                        const Column& v) {
  if (R.is_zero_ring()) return true;
  ModuleGB gb(R.poly(), ModuleOrder(gen_degrees(twists)));
  for (const auto& c : gens) gb.add_generator(vec_from_column(gb.order(), c));
  add_ring_relations(gb, R, 0, static_cast<int>(twists.size()));
  return gb.contains(vec_from_column(gb.order(), v));
}

std::vector<Column> kernel(const GradedRing& R, const std::vector<int>& src, const std::vector<Column>& phi,
                           const std::vector<int>& tgt, const std::vector<Column>& tgt_rels) {
  if (R.is_zero_ring() || src.empty()) return {};
  const int n = static_cast<int>(tgt.size());
  const int m = static_cast<int>(src.size());
  const Field& k = R.field();
  std::vector<int> gdeg = gen_degrees(tgt);
  std::vector<int> block(n, 1);
  for (int j = 0; j < m; ++j) {
    gdeg.push_back(-src[j]);
    block.push_back(0);
  }
  ModuleOrder ord(gdeg, block);
  ModuleGB gb(R.poly(), ord);
  for (int j = 0; j < m; ++j) {
    if (!column_is_zero(phi[j]) && column_degree(tgt, phi[j]) != -src[j])
      throw std::logic_error("kernel: column " + std::to_string(j) + " has the wrong degree");
    Vec v = vec_from_column(ord, phi[j]);
    v.push_back(VTerm{k.from_int(1), Monomial{}, n + j});
    vec_sort(ord, v);
    gb.add_generator(std::move(v));
  }
  for (const auto& c : tgt_rels) gb.add_generator(vec_from_column(ord, c));
  add_ring_relations(gb, R, 0, n);
  gb.complete();
  std::vector<Column> cand;
  for (const auto& v : gb.basis()) {
    if (v.front().comp < n) continue;
    Column c = column_normal_form(R, vec_to_column(v, m, n));
    if (!column_is_zero(c)) cand.push_back(std::move(c));
  }
  return minimal_generators(R, src, cand);
}

GradedMatrix syzygy_matrix(const GradedRing& R, const GradedMatrix& mat) {
  std::vector<Column> ker = kernel(R, mat.src, mat.cols, mat.tgt);
  GradedMatrix out{{}, mat.src, ker};
  for (const auto& c : ker) out.src.push_back(-column_degree(mat.src, c));
  return out;
}

PModule subquotient(const GradedRing& R, const std::vector<int>& twists, const std::vector<Column>& Z,
                    const std::vector<Column>& B) {
  PModule out;
  if (R.is_zero_ring()) return out;
  std::vector<Column> gens = minimal_generators(R, twists, Z, B);
  for (const auto& g : gens) out.twists.push_back(-column_degree(twists, g));
  out.rels = kernel(R, out.twists, gens, twists, B);
  return minimal_presentation(R, out);
}

PModule minimal_presentation(const GradedRing& R, const PModule& M) {
  if (R.is_zero_ring()) return PModule{};
  const Field& k = R.field();
  std::vector<int> twists = M.twists;
  std::vector<Column> rels;
  for (const auto& c : M.rels) {
    Column nf = column_normal_form(R, c);
    if (!column_is_zero(nf)) rels.push_back(std::move(nf));
  }
  for (;;) {
    int pj = -1, pi = -1;
    for (std::size_t j = 0; j < rels.size() && pj < 0; ++j)
      for (std::size_t i = 0; i < rels[j].size(); ++i)
        if (!rels[j][i].empty() && rels[j][i].front().mono.deg == 0) {
          pj = static_cast<int>(j);
          pi = static_cast<int>(i);
          break;
        }
    if (pj < 0) break;
    Column pivot = rels[pj];
    Scalar u = pivot[pi].front().coef;
    std::vector<Column> next;
    for (std::size_t j = 0; j < rels.size(); ++j) {
      if (static_cast<int>(j) == pj) continue;
      Column c = rels[j];
      if (!c[pi].empty()) {
        Poly f = poly_scale(k, c[pi], k.neg(k.inv(u)));
        column_axpy(R, c, f, pivot);
      }
      c.erase(c.begin() + pi);
      if (!column_is_zero(c)) next.push_back(std::move(c));
    }
    twists.erase(twists.begin() + pi);
    rels = std::move(next);
  }
  PModule out{twists, {}};
  out.rels = minimal_generators(R, twists, rels);
  return out;
}

bool is_zero_module(const GradedRing& R, const PModule& M) {
  if (M.twists.empty() || R.is_zero_ring()) return true;
  return SubmoduleGB(R, M.twists, M.rels).quotient_is_zero();
}

long hilbert_value(const GradedRing& R, const PModule& M, int degree) {
  return SubmoduleGB(R, M.twists, M.rels).hilbert(degree);
}

std::vector<long> hilbert_values(const GradedRing& R, const PModule& M, int lo, int hi) {
  SubmoduleGB gb(R, M.twists, M.rels);
  std::vector<long> out;
  for (int d = lo; d <= hi; ++d) out.push_back(gb.hilbert(d));
  return out;
}

PModule cyclic_sum(const GradedRing& R, const std::vector<int>& twists, const std::vector<std::vector<Poly>>& ideals) {
  PModule out{twists, {}};
  for (std::size_t i = 0; i < twists.size(); ++i)
    for (const auto& f : ideals[i]) {
      Poly nf = R.normal_form(f);
      if (nf.empty()) continue;
      Column c = zero_column(static_cast<int>(twists.size()));
      c[i] = nf;
      out.rels.push_back(std::move(c));
    }
  return out;
}

}  // namespace findim
