#include <random>

#include "doctest.h"
#include "findim/engine.hpp"
#include "helpers.hpp"

using namespace findim;
using namespace findim::testing;

namespace {

DGModule wrap(const DGRingPtr& A, DGComponents X) {
  DGModule M;
  M.ring = A;
  M.label = "N";
  M.parts.push_back(FactorModule{std::move(X), std::nullopt});
  return M;
}

std::vector<long> dims(const Complex& C, int c) { return strand_cohomology(C, c, -6, 6); }

bool is_zero_in(const Complex& C, int lo, int hi) {
  for (int c = lo; c <= hi; ++c)
    for (long v : dims(C, c))
      if (v != 0) return false;
  return true;
}

// Random bounded DG-module: sums of shifted Koszul modules and cyclic H^0-modules.
DGModule random_module(const DGRingPtr& A, std::mt19937& rng) {
  const GradedRing& R = A->factors[0]->base();
  const std::vector<std::string> pool{"x", "y", "x*y", "y^2", "x+y"};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1), shift(0, 2), kind(0, 1);
  DGModule M = kind(rng) ? koszul_dg_module(A, {{R.parse(pool[pick(rng)])}})
                         : h0_quotient_module(A, 0, {R.parse(pool[pick(rng)])});
  M = shift_module(M, shift(rng));
  if (kind(rng)) M = direct_sum(M, shift_module(h0_quotient_module(A, 0, {R.parse(pool[pick(rng)])}), shift(rng)));
  return M;
}

}  // namespace

TEST_CASE("resolving the residue field of a polynomial ring terminates") {
  auto R = ring({"x", "y"});
  auto A = build_ring_dg(R);
  auto res = resolve(residue_field_module(A).parts[0].comps, -10);
  CHECK(res.terminated);
  std::map<int, int> count;
  for (const auto& g : res.F.gens) ++count[g.cdeg];
  CHECK(count == std::map<int, int>{{-2, 1}, {-1, 2}, {0, 1}});
  auto cls = minimal_free_resolution(R, residue_field(R), 5);
  CHECK(cls.betti() == std::vector<int>{1, 2, 1});
}

TEST_CASE("free modules are returned unchanged") {
  auto R = ring({"x", "y"});
  auto A = build_koszul_dg(R, {R->parse("x"), R->parse("x*y")});
  DGModule F = free_dg_module(A);
  DGModule S = semifree_resolution(F, -3);
  CHECK(S.parts[0].semifree->ngens() == 1);
  CHECK_FALSE(S.parts[0].semifree->certified_lo);
  auto res = resolve(F.parts[0].comps, -3);
  CHECK(res.terminated);
  CHECK(res.F.ngens() == 1);
}

TEST_CASE("semifree resolution of H^0 over a non-regular Koszul DG-ring") {
  auto R = ring({"x", "y"});
  auto A = build_koszul_dg(R, {R->parse("x"), R->parse("x*y")});
  DGModule H = h0_module(A);
  DGModule S = semifree_resolution(H, -3);
  const auto& F = *S.parts[0].semifree;
  CHECK(F.certified_lo == -3);
  std::map<int, int> count;
  for (const auto& g : F.gens) ++count[g.cdeg];
  for (const auto& [c, n] : count) {
    CHECK(c >= -3);
    CHECK(n <= 4);
  }
  CHECK(count[0] == 1);
  const Complex& C = S.parts[0].comps.C;
  CHECK(dims(C, 0) == dims(H.parts[0].comps.C, 0));
  CHECK(is_zero_in(C, -2, -1));
  CHECK(S.profile().sup == 0);
  CHECK(S.profile().inf == 0);
}

TEST_CASE("sppj steps") {
  auto R = ring({"x"});
  SUBCASE("free module") {
    auto A = build_koszul_dg(R, {R->parse("x^2")});
    auto st = sppj_step(free_dg_module(A));
    CHECK(st.P.ngens() == 1);
    CHECK(cohomology_profile(st.N.C).zero);
  }
  SUBCASE("classical syzygy") {
    auto A = build_ring_dg(R);
    auto st = sppj_step(residue_field_module(A));
    CHECK(st.P.ngens() == 1);
    CHECK(dims(st.N.C, 0) == std::vector<long>{0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1});
    CHECK(is_zero_in(st.N.C, -3, -1));
  }
  SUBCASE("H^0 over a Koszul DG-ring with homology") {
    auto S = ring({"x"}, {"x^2"});
    auto A = build_koszul_dg(S, {S->parse("x")});
    DGModule M = h0_module(A);
    auto st = sppj_step(M);
    CHECK(st.P.ngens() == 1);
    CHECK(dims(st.N.C, -1) == std::vector<long>{0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0});
    Complex cone = shift_complex(st.N.C, 1);
    CHECK(is_zero_in(cone, 0, 0));
    for (const DGModule& L : {h0_module(A), residue_field_module(A)}) {
      Complex EN = rhom(wrap(A, st.N), L, 0, 4);
      Complex EM = rhom(wrap(A, st.target), L, 0, 4);
      for (int n = 1; n <= 3; ++n) CHECK(dims(EN, n) == dims(EM, n + 1));
    }
  }
}

TEST_CASE("sppj covers are surjective on H^0") {
  auto R = ring({"x", "y"});
  auto A = build_koszul_dg(R, {R->parse("x"), R->parse("x*y")});
  std::mt19937 rng(7);
  for (int i = 0; i < 5; ++i) {
    DGModule M = random_module(A, rng);
    auto st = sppj_step(M);
    Complex cone = shift_complex(st.N.C, 1);
    CHECK(is_zero_in(cone, 0, 0));
    CHECK(cohomology_profile(st.N.C).sup <= 0);
  }
}

TEST_CASE("reduction to H^0") {
  auto R = ring({"x", "y"});
  auto A = build_koszul_dg(R, {R->parse("x"), R->parse("x*y")});
  Complex a = reduce_to_h0(free_dg_module(A), 0, -3);
  CHECK(a.ring->same_ring(*A->factors[0]->h0()));
  CHECK(a.rank(0) == 1);
  CHECK(cohomology_profile(a).sup == 0);

  Complex k = reduce_to_h0(koszul_dg_module(A, {{R->parse("y")}}), 0, -3);
  CHECK(k.rank(0) == 1);
  CHECK(k.rank(-1) == 1);
  CHECK(dims(k, 0) == std::vector<long>{0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0});
  CHECK(is_zero_in(k, -1, -1));

  std::mt19937 rng(2024);
  for (int i = 0; i < 10; ++i) {
    DGModule M = random_module(A, rng);
    int s = M.profile().sup;
    Complex X = reduce_to_h0(M, 0, s - 4);
    CAPTURE(M.label);
    CHECK(cohomology_profile(X, s - 3, s + 1).sup == s);
    CHECK(dims(X, s) == dims(M.parts[0].comps.C, s));
  }
}

TEST_CASE("coreduction to H^0") {
  auto R = ring({"x", "y"});
  auto Ar = build_ring_dg(R);
  Complex a = coreduce_to_h0(free_dg_module(Ar), 0, 3);
  CHECK(cohomology_profile(a).inf == 0);
  CHECK(dims(a, 0) == dims(free_dg_module(Ar).parts[0].comps.C, 0));

  auto A = build_koszul_dg(R, {R->parse("x"), R->parse("x*y")});
  Complex h = coreduce_to_h0(h0_module(A), 0, 2);
  CHECK(dims(h, 0) == dims(h0_module(A).parts[0].comps.C, 0));

  std::mt19937 rng(99);
  for (int i = 0; i < 10; ++i) {
    DGModule M = random_module(A, rng);
    int f = M.profile().inf;
    Complex X = coreduce_to_h0(M, 0, f + 1);
    CAPTURE(M.label);
    CHECK(cohomology_profile(X, f - 2, f + 1).inf == f);
  }
}

TEST_CASE("derived functors over a ring agree with classical Ext and Tor") {
  auto R = ring({"x", "y"});
  auto A = build_ring_dg(R);
  DGModule k = residue_field_module(A);
  DGModule Q = h0_quotient_module(A, 0, {R->parse("x")});
  auto FQ = minimal_free_resolution(R, PModule{{0}, {Column{R->parse("x")}}}, 4);
  Complex kc = module_complex(R, residue_field(R));
  auto ext = ext_table(FQ, kc, 0, 2);
  Complex E = rhom(Q, k, 0, 3);
  for (int i = 0; i <= 2; ++i) CHECK(hilbert_values(*R, ext[i], -6, 6) == dims(E, i));
  auto tor = tor_table(FQ, kc, 0, 2);
  Complex T = derived_tensor(Q, k, 0, -3);
  for (int i = 0; i <= 2; ++i) CHECK(hilbert_values(*R, tor[i], -6, 6) == dims(T, -i));
}
