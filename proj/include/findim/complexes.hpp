#pragma once

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "findim/module.hpp"

namespace findim {

/// Bounded cochain complex of finitely presented graded R-modules. Component
/// c is a PModule; d.at(c) maps component c to component c + 1, one column
/// per generator of component c. A free complex has no relations.
struct Complex {
  RingPtr ring;
  std::map<int, PModule> comp;
  std::map<int, std::vector<Column>> d;

  const PModule& at(int c) const;
  int rank(int c) const { return at(c).rank(); }
  /// Differential out of degree c, zero columns where nothing is stored.
  std::vector<Column> diff(int c) const;
  bool is_free() const;
  bool empty() const;
  int lo() const;
  int hi() const;
};

using FreeComplex = Complex;

/// Validated free complex; rejects d^2 != 0 with the failing degree and entry.
Complex make_complex(RingPtr ring, const std::map<int, std::vector<int>>& components,
                     const std::map<int, GradedMatrix>& differentials);
/// Checks homogeneity, well-definedness on relations and d^2 = 0.
void validate_complex(const Complex& C);

/// Component i of C[n] is component i + n of C; the differential is (-1)^n d.
Complex shift_complex(const Complex& C, int n);
/// Map of complexes given componentwise, f.at(c): C^c -> D^c.
struct ChainMap {
  std::map<int, std::vector<Column>> f;
};
/// cone^i = C^{i+1} + D^i with d = [[-d_C, 0], [f, d_D]].
Complex mapping_cone(const Complex& C, const Complex& D, const ChainMap& f);
/// Direct sum of complexes over the same ring.
Complex direct_sum(const Complex& A, const Complex& B);

struct CohomologyProfile {
  std::map<int, PModule> H;  // nonzero cohomology only
  bool zero = true;
  int sup = INT_MIN;
  int inf = INT_MAX;
  int amp() const { return zero ? INT_MIN : sup - inf; }
};

PModule cohomology(const Complex& C, int c);
CohomologyProfile cohomology_profile(const Complex& C);
CohomologyProfile cohomology_profile(const Complex& C, int lo, int hi);
/// Hilbert values of H^c(C) for internal degrees [lo, hi].
std::vector<long> cohomology_hilbert(const Complex& C, int c, int lo, int hi);

/// Hom(C, D) with (d phi) = d_D phi - (-1)^n phi d_C; C must be free.
Complex hom_complex(const Complex& C, const Complex& D);
/// C tensor D with d(x y) = dx y + (-1)^p x dy; C must be free.
Complex tensor_complex(const Complex& C, const Complex& D);

/// Koszul complex K(R; a) on generators e_S, component -|S|, with
/// d(e_S) = sum_k (-1)^k a_{s_k} e_{S - s_k} over the sorted elements s_k.
Complex koszul_complex(RingPtr ring, const std::vector<Poly>& a);
/// Single module in degree 0.
Complex module_complex(RingPtr ring, const PModule& M);

/// Gaussian elimination of unit entries: a homotopy-equivalent free complex
/// whose differentials have all entries in the irrelevant ideal.
Complex minimize(const Complex& C);

struct ResolutionCertificate {
  /// F_i sits in cohomological degree top - i; twists[i] are its twists and
  /// maps[i-1]: F_i -> F_{i-1}.
  int top = 0;
  std::vector<std::vector<int>> twists;
  std::vector<GradedMatrix> maps;
  bool terminated = false;
  int cutoff = 0;
  /// Index of the last nonzero F_i; -1 for the zero object.
  int length = -1;
  std::vector<int> betti() const;
  /// As a free complex in nonpositive cohomological degrees.
  Complex as_complex(RingPtr ring) const;
};

ResolutionCertificate minimal_free_resolution(RingPtr ring, const PModule& M, int cutoff);
/// For a free complex: its minimization. The certificate's F_i sits in
/// cohomological degree -i.
ResolutionCertificate minimal_free_resolution(const Complex& C);

/// Ext^i(M, N) for i in [lo, hi]; M given by a resolution reaching hi + 1 or
/// terminated. Throws if the resolution is too short.
std::map<int, PModule> ext_table(const ResolutionCertificate& FM, const Complex& N, int lo, int hi);
std::map<int, PModule> tor_table(const ResolutionCertificate& FM, const Complex& N, int lo, int hi);

}  // namespace findim
