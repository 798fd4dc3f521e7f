#pragma once

#include <random>
#include <string>
#include <vector>

#include "findim/dg.hpp"

namespace findim {

/// Named DG-rings used by the built-in suite, over a chosen field.
struct Fixture {
  std::string name;
  DGRingPtr A;
};

DGRingPtr fixture_polynomial(const Field& k);         // k[x,y]
DGRingPtr fixture_koszul(const Field& k);             // K(k[x,y]; x, xy)
DGRingPtr fixture_koszul3(const Field& k);            // K(k[x,y,z]; x, xy)
DGRingPtr fixture_nonreduced(const Field& k);         // k[x,y]/(x^2, xy)
DGRingPtr fixture_trivial_extension(const Field& k);  // (k[x] x k) ⋉ k[1]
DGRingPtr fixture_depth_drop(const Field& k);         // k[x,y] ⋉ (k[x,y]/(x))[1]

/// The three families of the randomized property suites.
std::vector<Fixture> property_families(const Field& k);
/// The graded-local fixtures with their small finitistic dimension.
std::vector<std::pair<Fixture, int>> small_finitistic_fixtures(const Field& k);

/// Sum of one or two shifted cyclic pieces (Koszul, H^0-quotient, residue
/// field, free) placed on random factors.
DGModule random_module(const DGRingPtr& A, std::mt19937& rng);

/// Same module, presented with an extra generator, redundant relations and
/// permuted generators.
PModule redundant_presentation(const GradedRing& R, const PModule& M, std::mt19937& rng);

}  // namespace findim
