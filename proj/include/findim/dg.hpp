#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "findim/complexes.hpp"

namespace findim {

/// Basis element of a DG-ring factor as a module over its base ring R; it
/// spans the cyclic module R/ann in cohomological degree cdeg and internal
/// degree tdeg.
struct BasisElement {
  std::string name;
  int cdeg = 0;
  int tdeg = 0;
  std::vector<Poly> ann;
};

struct BasisProduct {
  int sign = 0;  // 0 when the product vanishes
  int index = -1;
};

/// Element of a DG-ring factor: one coefficient in R per basis element.
using AElem = std::vector<Poly>;

/// Connected non-positive DG-ring, finite over its base ring: basis[0] is the
/// unit, and it is the only basis element in degree 0.
class DGFactor {
 public:
  DGFactor(RingPtr base, std::vector<BasisElement> basis, std::vector<std::vector<BasisProduct>> mult,
           std::vector<AElem> diff, std::string label);

  const GradedRing& base() const { return *base_; }
  const RingPtr& base_ptr() const { return base_; }
  int size() const { return static_cast<int>(basis_.size()); }
  const BasisElement& basis(int b) const { return basis_[b]; }
  const BasisProduct& mult(int a, int b) const { return mult_[a][b]; }
  const AElem& diff(int b) const { return diff_[b]; }
  const std::string& label() const { return label_; }
  int min_cdeg() const { return min_cdeg_; }
  /// Ring R/ann(b), used to reduce coefficients of basis element b.
  const GradedRing& coef_ring(int b) const { return *coef_rings_[b]; }
  bool is_zero() const { return base_->is_zero_ring(); }

  AElem zero() const { return AElem(basis_.size()); }
  AElem unit() const;
  AElem scalar(const Poly& r) const;
  AElem reduce(const AElem& x) const;
  AElem add(const AElem& x, const AElem& y) const;
  AElem mul(const AElem& x, const AElem& y) const;
  AElem d(const AElem& x) const;
  bool is_zero(const AElem& x) const;

  /// H^0 as a quotient of the base ring.
  const RingPtr& h0() const { return h0_; }
  /// A as a complex of R-modules.
  const Complex& complex() const { return complex_; }
  const CohomologyProfile& profile() const { return profile_; }
  int inf() const { return profile_.inf; }
  int amp() const { return profile_.zero ? 0 : profile_.amp(); }
  int h0_dim() const { return h0_->krull_dimension(); }

  /// Empty when associativity, graded commutativity, Leibniz and d^2 = 0
  /// hold on all basis elements; otherwise the first failure.
  std::string verify_structure() const;

 private:
  RingPtr base_;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<BasisProduct>> mult_;
  std::vector<AElem> diff_;
  std::vector<RingPtr> coef_rings_;
  std::string label_;
  int min_cdeg_ = 0;
  RingPtr h0_;
  Complex complex_;
  CohomologyProfile profile_;
};

using FactorPtr = std::shared_ptr<const DGFactor>;

enum class DGKind { ring, koszul, trivial_extension, product };
const char* to_string(DGKind k);

/// Finite product of connected factors with orthogonal idempotents.
struct DGRing {
  DGKind kind = DGKind::ring;
  std::string label;
  std::vector<FactorPtr> factors;

  int nfactors() const { return static_cast<int>(factors.size()); }
  /// dim H^0 of the product: the maximum over nonzero factors.
  int h0_dim() const;
  int inf() const;
  int sup() const;
  int amp() const;
  bool is_local() const { return factors.size() == 1; }
};

using DGRingPtr = std::shared_ptr<const DGRing>;

/// Subsets of {0, ..., n-1} ordered by size, then lexicographically.
std::vector<std::vector<int>> subsets_by_size(int n);

/// The base ring as a DG-ring concentrated in degree 0.
FactorPtr ring_factor(RingPtr R);
/// Exterior realization on odd generators e_i with d(e_i) = a_i.
FactorPtr koszul_factor(RingPtr R, const std::vector<Poly>& a);
/// R ⋉ (R/I)[n] with epsilon of internal degree `twist`; epsilon^2 = 0.
FactorPtr trivial_extension_factor(RingPtr R, const std::vector<Poly>& I, int n, int twist = 0);

DGRingPtr build_ring_dg(RingPtr R);
DGRingPtr build_koszul_dg(RingPtr base, const std::vector<Poly>& sequence);
/// B × (C ⋉ C[n]): the trivial extension of B × C by the factor C.
DGRingPtr build_trivial_extension(RingPtr B, RingPtr C, int n);
/// R ⋉ (R/I)[n] as a single graded-local factor.
DGRingPtr build_trivial_extension_module(RingPtr R, const std::vector<Poly>& I, int n);
DGRingPtr build_product_dg(const std::vector<DGRingPtr>& factors);
/// The idempotent factor A e_f as a DG-ring of its own.
DGRingPtr factor_ring(const DGRingPtr& A, int factor);

/// Semifree generator: cohomological degree and twist (internal degree -twist).
struct SemifreeGen {
  int cdeg = 0;
  int twist = 0;
};

/// Semifree DG-module over one factor. d(g_j) = sum over (i, alpha) of
/// alpha * g_i, with every i < j.
struct SemifreeModule {
  FactorPtr A;
  std::vector<SemifreeGen> gens;
  std::vector<std::vector<std::pair<int, AElem>>> d;
  /// Generators are complete in degrees >= certified_lo; cohomology agrees
  /// with the resolved object in degrees > certified_lo. Unset: exact.
  std::optional<int> certified_lo;

  int ngens() const { return static_cast<int>(gens.size()); }
  int min_gen() const;
  int max_gen() const;
  int add_generator(SemifreeGen g, std::vector<std::pair<int, AElem>> dg);
};

/// Concrete DG-module over one factor: a complex of R-modules with the
/// action of every basis element. act[b].at(c) maps component c to
/// component c + cdeg(b). Components outside [lo, hi] are zero, except for
/// windowed expansions of infinite objects.
struct DGComponents {
  FactorPtr A;
  Complex C;
  std::vector<std::map<int, std::vector<Column>>> act;
  /// Position of (generator, basis element) inside each component, for
  /// expansions of semifree modules.
  std::map<int, std::vector<std::pair<int, int>>> layout;

  const PModule& at(int c) const { return C.at(c); }
  int rank(int c) const { return C.rank(c); }
  std::vector<Column> action(int b, int c) const;
  bool empty() const { return C.empty(); }
  int lo() const { return C.lo(); }
  int hi() const { return C.hi(); }
};

/// Components [lo, hi] of a semifree module, differentials between them and
/// the action within the window.
DGComponents expand(const SemifreeModule& F, int lo, int hi);
DGComponents expand(const SemifreeModule& F);
/// Empty when d^2 = 0, the Leibniz rule and the action axioms hold.
std::string verify_dg_module(const DGComponents& M);

/// One factor's part of a DG-module.
struct FactorModule {
  DGComponents comps;
  std::optional<SemifreeModule> semifree;
};

struct DGModule {
  DGRingPtr ring;
  std::string label;
  std::vector<FactorModule> parts;

  CohomologyProfile profile() const;
  bool is_zero() const;
  int sup() const { return profile().sup; }
  int inf() const { return profile().inf; }
};

/// Validated semifree module; rejects d^2 != 0 and degree violations.
DGModule dg_module_from_presentation(DGRingPtr A, int factor, std::vector<SemifreeGen> gens,
                                     std::vector<std::vector<std::pair<int, AElem>>> d, std::string label = "");
DGModule free_dg_module(DGRingPtr A, int shift = 0, int twist = 0);
/// K(A; b) for b given per factor as elements of the base rings.
DGModule koszul_dg_module(DGRingPtr A, const std::vector<std::vector<Poly>>& seq);
/// An H^0(A)-module presented over the base ring of one factor, with
/// negative-degree elements acting as zero.
DGModule restricted_module(DGRingPtr A, int factor, const PModule& M, std::string label = "");
DGModule h0_module(DGRingPtr A);
/// Residue field of one factor.
DGModule residue_field_module(DGRingPtr A, int factor = 0);
/// H^0(A)/I on one factor.
DGModule h0_quotient_module(DGRingPtr A, int factor, const std::vector<Poly>& I);
DGModule shift_module(const DGModule& M, int n, int twist = 0);
DGModule direct_sum(const DGModule& M, const DGModule& N);
/// A module over factor_ring(A, factor) viewed over A, zero on the other factors.
DGModule extend_by_zero(const DGRingPtr& A, int factor, const DGModule& M);

SemifreeModule shift_semifree(const SemifreeModule& F, int n, int twist = 0);
DGComponents shift_components(const DGComponents& M, int n, int twist = 0);
DGComponents direct_sum(const DGComponents& M, const DGComponents& N);

/// A-linear map F -> T fixed by the images of the generators.
struct SemifreeMap {
  std::vector<Column> phi;  // phi[g] in T^{cdeg(g)}
};

/// Image of each component of F under the map.
std::map<int, std::vector<Column>> map_components(const DGComponents& Fx, const SemifreeModule& F,
                                                  const SemifreeMap& f, const DGComponents& T);
/// cone(f) = F[1] + T as a DG-module.
DGComponents dg_cone(const SemifreeModule& F, const SemifreeMap& f, const DGComponents& T);

/// Hom_A(F, T) and F ⊗_A T as complexes of base-ring modules.
Complex hom_complex(const SemifreeModule& F, const DGComponents& T);
Complex tensor_complex(const SemifreeModule& F, const DGComponents& T);
/// k ⊗_A F for the residue field k: scalar differential parts only.
Complex residue_tensor(const SemifreeModule& F);

}  // namespace findim
