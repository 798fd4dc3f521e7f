#pragma once

#include <string>
#include <vector>

#include "findim/dg.hpp"
#include "findim/strand.hpp"

namespace findim::testing {

inline RingPtr ring(const std::vector<std::string>& vars, const std::vector<std::string>& rels = {}) {
  return GradedRing::make(Field::rationals(), vars, std::vector<int>(vars.size(), 1), rels);
}

inline PModule residue_field(const RingPtr& R) {
  PModule k{{0}, {}};
  for (int i = 0; i < R->nvars(); ++i) {
    Column c(1);
    c[0] = poly_monomial(R->field(), Scalar(1), R->poly().var(i));
    k.rels.push_back(c);
  }
  return k;
}

// Hilbert values of H^c(C) computed by degreewise ranks, no Gröbner bases.
inline std::vector<long> strand_cohomology(const Complex& C, int c, int lo, int hi) {
  std::vector<long> out;
  for (int e = lo; e <= hi; ++e)
    out.push_back(strand_homology(*C.ring, C.at(c - 1), C.diff(c - 1), C.at(c), C.diff(c), C.at(c + 1), e));
  return out;
}

inline bool d_squared_zero(const Complex& C) {
  try {
    validate_complex(C);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

}  // namespace findim::testing
