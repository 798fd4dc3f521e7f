#include "findim/strand.hpp"

namespace findim {

StrandSpace::StrandSpace(const PolyRing& P, const std::vector<int>& twists, int degree)
    : P_(&P), twists_(twists), degree_(degree) {
  for (std::size_t i = 0; i < twists.size(); ++i)
    for (const auto& m : monomials_of_degree(P, degree + twists[i])) {
      index_[{static_cast<int>(i), m.exp}] = static_cast<int>(basis_.size());
      basis_.emplace_back(static_cast<int>(i), m);
    }
}

std::vector<Scalar> StrandSpace::coordinates(const Column& c) const {
  std::vector<Scalar> v(basis_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (const auto& t : c[i]) {
      auto it = index_.find({static_cast<int>(i), t.mono.exp});
      if (it == index_.end()) throw std::logic_error("strand: column is not of the strand degree");
      v[it->second] = t.coef;
    }
  return v;
}

void StrandSpace::add_multiples(const Field& k, const Column& c, std::vector<std::vector<Scalar>>& rows) const {
  int d = column_degree(twists_, c);
  if (d == INT_MIN || d > degree_) return;
  for (const auto& m : monomials_of_degree(*P_, degree_ - d)) {
    Column mc(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) mc[i] = poly_mul_term(k, c[i], k.from_int(1), m);
    rows.push_back(coordinates(mc));
  }
}

void StrandSpace::add_ideal(const Field& k, const std::vector<Poly>& ideal, std::vector<std::vector<Scalar>>& rows) const {
  for (std::size_t i = 0; i < twists_.size(); ++i)
    for (const auto& f : ideal) {
      Column c(twists_.size());
      c[i] = f;
      add_multiples(k, c, rows);
    }
}

DenseMatrix to_dense(const std::vector<std::vector<Scalar>>& rows, int cols) {
  DenseMatrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
  return m;
}

namespace {

std::vector<std::vector<Scalar>> relation_rows(const GradedRing& R, const PModule& M, const StrandSpace& V) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& c : M.rels) V.add_multiples(R.field(), c, rows);
  V.add_ideal(R.field(), R.relations(), rows);
  return rows;
}

std::vector<std::vector<Scalar>> image_rows(const GradedRing& R, const StrandSpace& src, const std::vector<Column>& d,
                                            const StrandSpace& tgt) {
  std::vector<std::vector<Scalar>> rows;
  const Field& k = R.field();
  for (const auto& [comp, m] : src.basis()) {
    Column c(d[comp].size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = poly_mul_term(k, d[comp][i], k.from_int(1), m);
    rows.push_back(tgt.coordinates(c));
  }
  return rows;
}

}  // namespace

long strand_dimension(const GradedRing& R, const PModule& M, int e, Kernel kernel) {
  if (R.is_zero_ring()) return 0;
  StrandSpace V(R.poly(), M.twists, e);
  if (V.size() == 0) return 0;
  return V.size() - rank(R.field(), to_dense(relation_rows(R, M, V), V.size()), kernel);
}

long strand_homology(const GradedRing& R, const PModule& prev, const std::vector<Column>& d_in, const PModule& cur,
                     const std::vector<Column>& d_out, const PModule& next, int e, Kernel kernel) {
  if (R.is_zero_ring()) return 0;
  const Field& k = R.field();
  StrandSpace Vp(R.poly(), prev.twists, e), V(R.poly(), cur.twists, e), Vn(R.poly(), next.twists, e);
  if (V.size() == 0) return 0;
  auto S = relation_rows(R, cur, V);
  auto Sn = relation_rows(R, next, Vn);
  std::vector<DenseMatrix> jobs;
  auto dV = Vn.size() ? image_rows(R, V, d_out, Vn) : std::vector<std::vector<Scalar>>{};
  auto dVS = dV;
  dVS.insert(dVS.end(), Sn.begin(), Sn.end());
  jobs.push_back(to_dense(dVS, Vn.size()));
  jobs.push_back(to_dense(Sn, Vn.size()));
  auto dP = Vp.size() ? image_rows(R, Vp, d_in, V) : std::vector<std::vector<Scalar>>{};
  dP.insert(dP.end(), S.begin(), S.end());
  jobs.push_back(to_dense(dP, V.size()));
  std::vector<int> r = batch_rank(k, jobs, kernel);
  return V.size() - r[0] + r[1] - r[2];
}

}  // namespace findim
