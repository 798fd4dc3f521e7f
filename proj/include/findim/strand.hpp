#pragma once

#include <map>
#include <vector>

#include "findim/linalg.hpp"
#include "findim/module.hpp"

namespace findim {

/// Degree-e part of the free module P^n, coordinates indexed by
/// (component, monomial). Used for degreewise linear algebra that does not
/// go through Gröbner bases.
class StrandSpace {
 public:
  StrandSpace(const PolyRing& P, const std::vector<int>& twists, int degree);

  int size() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::pair<int, Monomial>>& basis() const { return basis_; }
  /// Coordinates of c, which must be homogeneous of this degree.
  std::vector<Scalar> coordinates(const Column& c) const;
  /// Appends coordinates of m*c for every monomial m landing in this degree.
  void add_multiples(const Field& k, const Column& c, std::vector<std::vector<Scalar>>& rows) const;
  /// Appends the degree-e part of J P^n using the given generators of J.
  void add_ideal(const Field& k, const std::vector<Poly>& ideal, std::vector<std::vector<Scalar>>& rows) const;

 private:
  const PolyRing* P_;
  std::vector<int> twists_;
  int degree_;
  std::vector<std::pair<int, Monomial>> basis_;
  std::map<std::pair<int, std::array<std::uint16_t, kMaxVars>>, int> index_;
};

DenseMatrix to_dense(const std::vector<std::vector<Scalar>>& rows, int cols);

/// dim_k of the degree-e part of a presented module, by ranks of spanning sets.
long strand_dimension(const GradedRing& R, const PModule& M, int e, Kernel kernel = Kernel::serial);

/// dim_k of the degree-e part of the cohomology of prev -> cur -> next at cur.
long strand_homology(const GradedRing& R, const PModule& prev, const std::vector<Column>& d_in, const PModule& cur,
                     const std::vector<Column>& d_out, const PModule& next, int e, Kernel kernel = Kernel::serial);

}  // namespace findim
