#pragma once

#include <vector>

#include "findim/graded_ring.hpp"

namespace findim {

/// Element of a graded free module R^n as its coordinate column.
using Column = std::vector<Poly>;

/// Homogeneous map between graded free modules. A free module is the sum of
/// R(t_i) over its twists t_i, so generator i sits in degree -t_i and entry
/// (i, j) has degree tgt[i] - src[j]. Stored column by column.
struct GradedMatrix {
  std::vector<int> src;
  std::vector<int> tgt;
  std::vector<Column> cols;

  int rows() const { return static_cast<int>(tgt.size()); }
  int ncols() const { return static_cast<int>(src.size()); }
  const Poly& at(int i, int j) const { return cols[j][i]; }
  static GradedMatrix zero(std::vector<int> src, std::vector<int> tgt);
  static GradedMatrix identity(const std::vector<int>& twists);
};

/// Cokernel of a homogeneous relation list in a graded free module.
struct PModule {
  std::vector<int> twists;
  std::vector<Column> rels;

  int rank() const { return static_cast<int>(twists.size()); }
  static PModule free(std::vector<int> twists) { return PModule{std::move(twists), {}}; }
};

inline int gen_degree(int twist) { return -twist; }
std::vector<int> gen_degrees(const std::vector<int>& twists);

/// Degree of a nonzero homogeneous column; INT_MIN for zero.
int column_degree(const std::vector<int>& twists, const Column& c);
bool column_is_zero(const Column& c);
bool column_is_homogeneous(const std::vector<int>& twists, const Column& c);
Column zero_column(int rank);
Column unit_column(const Field& k, int rank, int i);
Column column_normal_form(const GradedRing& R, const Column& c);
Column column_add(const Field& k, const Column& a, const Column& b);
Column column_scale(const GradedRing& R, const Column& a, const Poly& f);
/// a + f * b
void column_axpy(const GradedRing& R, Column& a, const Poly& f, const Column& b);
/// Matrix times column, reduced modulo J.
Column apply(const GradedRing& R, const std::vector<Column>& cols, const Column& v);
GradedMatrix compose(const GradedRing& R, const GradedMatrix& a, const GradedMatrix& b);
bool matrix_is_zero(const GradedRing& R, const GradedMatrix& m);
/// Throws InputError naming the first offending entry.
void check_homogeneous(const GradedRing& R, const GradedMatrix& m, const std::string& what);

/// Gröbner basis of a submodule of R^n (lifted to P^n together with J R^n).
class SubmoduleGB {
 public:
  SubmoduleGB(const GradedRing& R, const std::vector<int>& twists, const std::vector<Column>& gens);
  bool contains(const Column& v) const;
  Column normal_form(const Column& v) const;
  /// dim_k of (R^n / N) in the given degree.
  long hilbert(int degree) const;
  /// Krull dimension of R^n / N; -1 when zero.
  int dimension() const;
  /// dim_k of R^n / N, or -1 when not of finite length.
  long length() const;
  bool quotient_is_zero() const;
  /// Standard monomials of the quotient in a degree, as (component, monomial).
  std::vector<std::pair<int, Monomial>> standard_basis(int degree) const;

 private:
  const GradedRing* R_;
  std::vector<int> twists_;
  ModuleGB gb_;
  std::vector<std::vector<Monomial>> leads_;
};

/// Indices of a minimal subset of `cols` that, together with `base`, generates
/// the same submodule of R^n as `cols` and `base`. Scanned in increasing
/// degree, ties by index.
std::vector<int> minimal_subset(const GradedRing& R, const std::vector<int>& twists, const std::vector<Column>& cols,
                                const std::vector<Column>& base = {});
std::vector<Column> minimal_generators(const GradedRing& R, const std::vector<int>& twists,
                                       const std::vector<Column>& cols, const std::vector<Column>& base = {});
bool submodule_contains(const GradedRing& R, const std::vector<int>& twists, const std::vector<Column>& gens,
                        const Column& v);

/// Minimal generators of { r in R^m : sum_j r_j phi_j lies in span(tgt_rels) }
/// where phi_j are columns of R^n.
std::vector<Column> kernel(const GradedRing& R, const std::vector<int>& src, const std::vector<Column>& phi,
                           const std::vector<int>& tgt, const std::vector<Column>& tgt_rels = {});

/// Columns generating the kernel of a matrix; composing with the input is zero.
GradedMatrix syzygy_matrix(const GradedRing& R, const GradedMatrix& m);

/// (Z + B) / B as a minimally presented module, Z and B inside R^n.
PModule subquotient(const GradedRing& R, const std::vector<int>& twists, const std::vector<Column>& Z,
                    const std::vector<Column>& B);
/// Isomorphic presentation with minimal generators and all relation entries
/// in the irrelevant ideal.
PModule minimal_presentation(const GradedRing& R, const PModule& M);
bool is_zero_module(const GradedRing& R, const PModule& M);
long hilbert_value(const GradedRing& R, const PModule& M, int degree);
std::vector<long> hilbert_values(const GradedRing& R, const PModule& M, int lo, int hi);
/// Sum of R/ann_i (twisted): relations f e_i for f in each ideal.
PModule cyclic_sum(const GradedRing& R, const std::vector<int>& twists, const std::vector<std::vector<Poly>>& ideals);

}  // namespace findim
