#pragma once

#include <memory>
#include <string>
#include <vector>

#include "findim/groebner.hpp"

namespace findim {

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

/// R = P / J for a homogeneous ideal J of the ambient polynomial ring P,
/// stored with the reduced Gröbner basis of J. The irrelevant ideal is
/// generated by all variables.
class GradedRing {
 public:
  static RingPtr make(PolyRingPtr poly, const std::vector<Poly>& relations);
  static RingPtr make(const Field& field, const std::vector<std::string>& names, const std::vector<int>& degrees,
                      const std::vector<std::string>& relations);
  static RingPtr polynomial(const Field& field, const std::vector<std::string>& names);

  const PolyRing& poly() const { return *poly_; }
  const PolyRingPtr& poly_ptr() const { return poly_; }
  const Field& field() const { return poly_->field(); }
  int nvars() const { return poly_->nvars(); }

  const std::vector<Poly>& relations() const { return relations_; }
  const std::vector<Poly>& gb() const { return gb_; }
  bool is_zero_ring() const { return zero_; }
  bool is_polynomial() const { return gb_.empty(); }

  Poly normal_form(const Poly& f) const;
  bool is_zero(const Poly& f) const { return normal_form(f).empty(); }
  Poly mul(const Poly& f, const Poly& g) const;
  Poly parse(const std::string& text) const;
  std::string str(const Poly& f) const { return to_string(*poly_, f); }

  /// Krull dimension via independent sets of the leading-term ideal; -1 for
  /// the zero ring.
  int krull_dimension() const { return dim_; }
  /// Monomials of P of the given degree not in the leading-term ideal.
  std::vector<Monomial> standard_monomials(int degree) const;
  long hilbert(int degree) const { return static_cast<long>(standard_monomials(degree).size()); }

  /// R / (extra), over the same ambient ring.
  RingPtr quotient(const std::vector<Poly>& extra) const;
  /// True when every S-polynomial of the stored basis reduces to zero.
  bool verify_groebner() const;

  bool same_ring(const GradedRing& other) const;
  std::string describe() const;

 private:
  GradedRing() = default;

  PolyRingPtr poly_;
  std::vector<Poly> relations_;
  std::vector<Poly> gb_;
  bool zero_ = false;
  int dim_ = 0;
};

/// All monomials of P of the given weighted degree, in decreasing order.
std::vector<Monomial> monomials_of_degree(const PolyRing& ring, int degree);

/// Reduced Gröbner basis of (gens) + J in R's ambient ring, with the elements
/// already in J dropped.
std::vector<Poly> groebner_basis(const GradedRing& ring, const std::vector<Poly>& gens);

}  // namespace findim
