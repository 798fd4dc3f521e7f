#pragma once

#include <map>
#include <string>
#include <vector>

#include "findim/engine.hpp"

namespace findim {

/// Natural number, infinity, or minus infinity (the zero module).
struct DimValue {
  enum class Kind { finite, infinite, minus_infinity };
  Kind kind = Kind::minus_infinity;
  int value = 0;

  static DimValue finite(int v) { return DimValue{Kind::finite, v}; }
  static DimValue infinite() { return DimValue{Kind::infinite, 0}; }
  static DimValue minus_infinity() { return DimValue{Kind::minus_infinity, 0}; }
  bool is_finite() const { return kind == Kind::finite; }
  bool is_infinite() const { return kind == Kind::infinite; }
  std::string str() const;
  friend bool operator==(const DimValue& a, const DimValue& b) {
    return a.kind == b.kind && (a.kind != Kind::finite || a.value == b.value);
  }
};

DimValue max(const DimValue& a, const DimValue& b);

enum class DimKind { proj, flat, inj };
const char* to_string(DimKind k);

/// Per-factor evidence behind a dimension verdict.
struct FactorCertificate {
  int factor = 0;
  DimValue value;
  /// Finite values are bounded by this number; anything beyond certifies infinity.
  int threshold = 0;
  /// Degrees through which the numbers are exact.
  int cutoff = 0;
  bool terminated = false;
  /// Betti numbers by cohomological degree, Bass numbers mu_i by i, or Tor
  /// vanishing degrees per test module.
  std::map<int, long> numbers;
  std::string rule;
};

struct DimensionReport {
  DimKind kind = DimKind::proj;
  DimValue value;
  std::vector<FactorCertificate> factors;
  std::vector<std::string> trace;
};

/// Through the reduction H^0(A) ⊗^L_A M and Betti numbers of its minimal
/// model over H^0(A).
DimensionReport proj_dim(const DGModule& M);
/// Through Tor against cyclic test modules H^0(A)/I with I generated by
/// subsets of the variables.
DimensionReport flat_dim(const DGModule& M);
/// Through Bass numbers mu_i = length Ext^i_A(k, M); the Baer family of
/// test ideals is evaluated alongside when `baer` is set.
DimensionReport inj_dim(const DGModule& M, bool baer = false);
/// Directly from the definition: the least n with Ext^i(M, N) = 0 for all
/// i > n over the cyclic test modules N.
DimensionReport proj_dim_by_definition(const DGModule& M);

/// Variable-subset ideals of a base ring, the irrelevant ideal last. Up to
/// four variables every subset is used; beyond that singletons and the
/// irrelevant ideal.
std::vector<std::vector<Poly>> test_ideals(const GradedRing& R);

struct RegularityReport {
  bool regular = false;
  /// Index of the first element where the prefix stops being regular.
  int first_bad = -1;
  /// inf(K(A; a_1..a_j)) for each prefix length j.
  std::vector<int> prefix_inf;
  int inf_A = 0;
};

/// The Koszul-inf criterion inf(K(A; a)) = inf(A), checked on every prefix.
/// seq[i] holds element i with one component per factor.
RegularityReport is_regular_sequence(const DGRingPtr& A, const std::vector<std::vector<Poly>>& seq);
/// Module version: inf(K(A; a) ⊗_A M) = inf(M).
RegularityReport is_regular_sequence(const DGModule& M, const std::vector<std::vector<Poly>>& seq);

struct DepthReport {
  int depth = 0;
  std::vector<Poly> sequence;
  std::vector<Poly> pool;
  /// The search covered every pool sequence up to length dim H^0(A).
  bool exhaustive = false;
};

/// Homogeneous candidates of degree <= 2: variables, sums of two variables
/// of equal weight, and products of two variables.
std::vector<Poly> default_depth_pool(const GradedRing& R);
DepthReport sequential_depth(const DGRingPtr& A);
DepthReport sequential_depth(const DGModule& M);

/// Nonzero degrees of RΓ_m(X) obtained by local duality over the ambient
/// polynomial ring: i with Ext^{v-i}_P(X, P) != 0.
struct LocalCohomologyReport {
  std::vector<int> degrees;
  int ambient_dim = 0;
  /// Krull dimension of each nonzero Ext^j_P(X, P), by j.
  std::map<int, int> ext_dims;
  int amp() const { return degrees.empty() ? 0 : degrees.back() - degrees.front(); }
};

LocalCohomologyReport local_cohomology(const Complex& X);
LocalCohomologyReport local_cohomology(const DGRingPtr& A);
bool is_local_cohen_macaulay(const DGRingPtr& A);

struct DualizingReport {
  DGModule R;
  int inf = 0;
  int shift = 0;
  int twist = 0;
  DimensionReport injdim;
  bool biduality = false;
  int window_lo = 0;
  int window_hi = 0;
};

/// Hom_P(A, P) for A free over its polynomial base P, shifted so that
/// inf(R) = -dim H^0(A).
DualizingReport dualizing_dg_module(const DGRingPtr& A);
bool is_gorenstein(const DGRingPtr& A);

}  // namespace findim
