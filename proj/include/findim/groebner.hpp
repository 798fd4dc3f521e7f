#pragma once

#include <climits>
#include <map>
#include <vector>

#include "findim/polynomial.hpp"

namespace findim {

/// Term of an element of a graded free module P^n.
struct VTerm {
  Scalar coef;
  Monomial mono;
  int comp;
};

/// Element of P^n, terms strictly decreasing in the module order.
using Vec = std::vector<VTerm>;

/// Block term-over-position order on P^n. Components in a higher block
/// dominate every term in a lower block (elimination); within a block terms
/// compare by total degree (monomial degree plus generator degree), then
/// reverse lexicographically, then by lower component index.
class ModuleOrder {
 public:
  explicit ModuleOrder(std::vector<int> gen_degrees, std::vector<int> blocks = {});

  int rank() const { return static_cast<int>(gdeg_.size()); }
  int gen_degree(int comp) const { return gdeg_[comp]; }
  int block(int comp) const { return block_.empty() ? 0 : block_[comp]; }
  int degree(const VTerm& t) const { return t.mono.deg + gdeg_[t.comp]; }
  int compare(const VTerm& a, const VTerm& b) const;

 private:
  std::vector<int> gdeg_;
  std::vector<int> block_;
};

Vec vec_from_column(const ModuleOrder& ord, const std::vector<Poly>& column, int offset = 0);
std::vector<Poly> vec_to_column(const Vec& v, int rank, int offset = 0);
void vec_sort(const ModuleOrder& ord, Vec& v);
Vec vec_add(const ModuleOrder& ord, const Field& k, const Vec& a, const Vec& b);
/// a += c * m * b
void vec_axpy(const ModuleOrder& ord, const Field& k, Vec& a, const Scalar& c, const Monomial& m, const Vec& b);
int vec_degree(const ModuleOrder& ord, const Vec& v);

/// Buchberger closure for homogeneous submodules of P^n, processed degree by
/// degree so that a partial completion is exact up to its degree bound.
class ModuleGB {
 public:
  ModuleGB(const PolyRing& ring, ModuleOrder order);

  const ModuleOrder& order() const { return order_; }
  const PolyRing& ring() const { return *ring_; }

  void add_generator(Vec v);
  /// Completes the basis through the given degree.
  void complete(int degree_limit = INT_MAX);
  int completed_through() const { return completed_; }

  /// Top- or fully-reduced remainder; exact for degrees <= completed_through().
  Vec reduce(Vec v, bool full = true) const;
  bool contains(const Vec& v);

  const std::vector<Vec>& basis() const { return basis_; }
  /// Reduced basis (minimal leading terms, monic, tail-reduced).
  std::vector<Vec> reduced_basis() const;

 private:
  struct Pair {
    int i, j;
    Monomial lcm;
    int degree;
  };
  void insert(Vec h);
  int find_divisor(const Monomial& m, int comp) const;

  const PolyRing* ring_;
  ModuleOrder order_;
  std::vector<Vec> basis_;
  std::vector<std::vector<int>> by_comp_;
  std::vector<Pair> pairs_;
  std::multimap<int, Vec> pending_;
  int completed_ = INT_MIN;
};

/// Reduced Gröbner basis of an ideal of the ambient polynomial ring.
std::vector<Poly> ideal_groebner(const PolyRing& ring, const std::vector<Poly>& gens);
/// Full reduction of f modulo a Gröbner basis of an ideal.
Poly ideal_normal_form(const PolyRing& ring, const std::vector<Poly>& gb, const Poly& f);

}  // namespace findim
