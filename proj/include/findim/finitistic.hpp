#pragma once

#include <optional>
#include <string>
#include <vector>

#include "findim/dimensions.hpp"

namespace findim {

/// A module with finite projective dimension exhibited for a finitistic bound.
struct Witness {
  std::string label;
  DGModule M;
  int proj_dim = 0;
  int inf = 0;
  int sup = 0;
  int value() const { return proj_dim + inf; }
};

struct Interval {
  int lo = 0;
  int hi = 0;
  bool collapsed() const { return lo == hi; }
};

struct FinitisticReport {
  int dim = 0;
  int amp = 0;
  /// Small dimensions fpd = ffd = fid; empty when not graded-local.
  std::optional<int> fpd, ffd, fid;
  std::optional<DepthReport> depth;
  std::optional<Witness> fpd_witness;
  /// fid realized by injdim(X) - sup(X) for a module X of finite injective dimension.
  std::optional<int> fid_witness_value;
  std::string fid_witness;

  Interval FPD;
  Interval FFD;
  bool gorenstein_case = false;
  bool witness_case = false;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
};

FinitisticReport small_finitistic_dims(const DGRingPtr& A);
FinitisticReport fpd_bounds(const DGRingPtr& A);

/// H^0(A) as a DG-ring concentrated in degree 0, factor by factor.
DGRingPtr h0_ring(const DGRingPtr& A);

struct GorensteinBoundEntry {
  std::string label;
  int proj_dim = 0;
  int inf = 0;
  int bound = 0;
  bool ok = false;
};

struct GorensteinBoundReport {
  std::vector<GorensteinBoundEntry> entries;
  int skipped = 0;  // modules of infinite flat dimension
};

/// Throws InputError unless A and H^0(A) are Gorenstein; throws
/// std::logic_error on a module violating the bound.
GorensteinBoundReport gorenstein_projdim_bound_check(const DGRingPtr& A, const std::vector<DGModule>& corpus);

struct WitnessRecipe {
  int n = 0;
  bool available = false;
  std::string reason;
  int factor = 0;
  /// Monomial prime generated by the variables in the parameter sequence.
  std::vector<std::string> prime;
  std::vector<Poly> sequence;  // a_1, ..., a_{n-1}
  std::optional<Poly> s;
  /// How A_s is realized: "s = 1" or "idempotent factor f" followed by the
  /// Koszul substitute on s.
  std::string localization;
  std::string description;
  bool verified = false;
  std::optional<Witness> witness;
};

WitnessRecipe bass_witness_recipe(const DGRingPtr& A, int n);
/// Module of flat dimension n - 1; throws InputError when the recipe is
/// unavailable at desk scale.
DGModule ffd_witness(const DGRingPtr& A, int n);

struct HochschildReport {
  std::string envelope;
  RingPtr E;
  int envelope_dim = 0;
  int range = 0;
  bool smooth = false;  // terminated resolution of B over E
  int proj_dim = -1;
  std::vector<int> betti;
  /// Hilbert values in internal degrees [0, 4]; missing i means zero.
  std::map<int, std::vector<long>> HH_lower, HH_upper;
  std::vector<long> B_hilbert;
};

/// A -> B with B = A (x) C for a quotient C of a polynomial ring in the extra
/// variables of B; the first A.nvars() variables of B must be those of A.
HochschildReport hochschild_table(const RingPtr& A, const RingPtr& B, int range);
bool hochschild_vanishing_check(const HochschildReport& r);

}  // namespace findim
