#include "doctest.h"
#include "findim/finitistic.hpp"
#include "helpers.hpp"

using namespace findim;
using namespace findim::testing;

namespace {

DGRingPtr koszul(const std::vector<std::string>& vars, const std::vector<std::string>& a) {
  auto R = ring(vars);
  std::vector<Poly> seq;
  for (const auto& s : a) seq.push_back(R->parse(s));
  return build_koszul_dg(R, seq);
}

}  // namespace

TEST_CASE("small finitistic dimensions equal sequential depth minus amplitude") {
  struct Case {
    DGRingPtr A;
    int value;
  };
  std::vector<Case> cases{{build_ring_dg(ring({"x", "y"})), 2},
                          {koszul({"x", "y"}, {"x", "x*y"}), 0},
                          {koszul({"x", "y", "z"}, {"x", "x*y"}), 1},
                          {build_ring_dg(ring({"x", "y"}, {"x^2", "x*y"})), 0}};
  for (const auto& c : cases) {
    CAPTURE(c.A->label);
    auto r = small_finitistic_dims(c.A);
    CHECK(r.fpd == c.value);
    CHECK(r.ffd == r.fpd);
    CHECK(r.fid == r.fpd);
    REQUIRE(r.fpd_witness);
    CHECK(r.fpd_witness->value() == c.value);
    if (r.fid_witness_value) CHECK(*r.fid_witness_value == c.value);
    if (r.fid_witness_value) CHECK(r.notes.empty());
    bool lcm = is_local_cohen_macaulay(c.A);
    CHECK(lcm == (*r.fpd == r.dim - r.amp));
  }
}

TEST_CASE("local Cohen-Macaulay fails on a trivial extension with a depth drop") {
  auto R = ring({"x", "y"});
  auto A = build_trivial_extension_module(R, {R->parse("x")}, 1);
  auto r = small_finitistic_dims(A);
  CHECK(r.fpd == 0);
  CHECK(r.dim - r.amp == 1);
  CHECK_FALSE(is_local_cohen_macaulay(A));
}

TEST_CASE("FPD intervals") {
  auto G = koszul({"x", "y", "z"}, {"x", "x*y"});
  auto g = fpd_bounds(G);
  CHECK(g.gorenstein_case);
  CHECK_FALSE(g.witness_case);
  CHECK(g.FPD.lo == 1);
  CHECK(g.FPD.hi == 1);
  CHECK(g.FFD.lo == 0);

  auto T = build_trivial_extension(ring({"x"}), ring({}), 1);
  auto t = fpd_bounds(T);
  CHECK(t.dim == 1);
  CHECK(t.amp == 1);
  CHECK_FALSE(t.gorenstein_case);
  CHECK(t.witness_case);
  CHECK(t.FPD.lo == 1);
  CHECK(t.FPD.hi == 1);

  auto P = fpd_bounds(build_ring_dg(ring({"x", "y"})));
  CHECK(P.FPD.lo == 2);
  CHECK(P.FPD.hi == 2);
}

TEST_CASE("two families realizing both ends of the FPD interval") {
  const std::vector<std::vector<std::string>> vars{{"x", "y"}, {"x", "y", "z"}};
  const std::vector<std::vector<std::string>> seqs{{"x", "x*y"}, {"x", "x*y", "x*y^2"}};
  for (int d = 1; d <= 2; ++d)
    for (int n = 1; n <= 2; ++n) {
      CAPTURE(d);
      CAPTURE(n);
      auto G = koszul(vars[d - 1], seqs[n - 1]);
      REQUIRE(G->h0_dim() == d);
      REQUIRE(G->amp() == n);
      auto g = fpd_bounds(G);
      CHECK(g.gorenstein_case);
      CHECK(g.FPD.collapsed());
      CHECK(g.FPD.lo == d - n);

      auto B = ring(std::vector<std::string>(vars[d - 1].begin(), vars[d - 1].end() - 1));
      auto T = build_trivial_extension(B, ring({}), n);
      REQUIRE(T->h0_dim() == d);
      REQUIRE(T->amp() == n);
      auto t = fpd_bounds(T);
      CHECK(t.witness_case);
      CHECK(t.FPD.collapsed());
      CHECK(t.FPD.lo == d);
    }
}

TEST_CASE("sharpened bound over a Gorenstein DG-ring") {
  auto A = koszul({"x", "y"}, {"x", "x*y"});
  const GradedRing& R = A->factors[0]->base();
  DGModule K = koszul_dg_module(A, {{R.parse("y")}});
  auto rep = gorenstein_projdim_bound_check(A, {K, free_dg_module(A), shift_module(K, 3), h0_module(A)});
  REQUIRE(rep.entries.size() == 3);
  CHECK(rep.skipped == 1);
  CHECK(rep.entries[0].proj_dim == 1);
  CHECK(rep.entries[0].bound == 1);
  CHECK(rep.entries[2].proj_dim == 4);
  CHECK(rep.entries[2].bound == 4);
  CHECK_THROWS_AS(gorenstein_projdim_bound_check(build_ring_dg(ring({"x", "y"}, {"x^2", "x*y"})), {}), InputError);
}

TEST_CASE("witness recipes") {
  auto A = koszul({"x", "y"}, {"x", "x*y"});
  auto r0 = bass_witness_recipe(A, 0);
  CHECK(r0.verified);
  CHECK(r0.witness->proj_dim == 0);
  auto r1 = bass_witness_recipe(A, 1);
  CHECK(r1.available);
  CHECK(r1.verified);
  CHECK(r1.prime.empty());
  CHECK(r1.witness->proj_dim == 1);

  auto T = build_trivial_extension(ring({"x"}), ring({}), 1);
  auto t = bass_witness_recipe(T, 1);
  CHECK(t.verified);
  CHECK(t.factor == 0);
  CHECK(t.witness->proj_dim == 1);
  CHECK(t.witness->inf == 0);
  CHECK_THROWS_AS(bass_witness_recipe(T, 2), InputError);

  auto Q = build_ring_dg(ring({"x", "y"}, {"x^2", "x*y"}));
  auto q = bass_witness_recipe(Q, 1);
  CHECK_FALSE(q.available);
  CHECK(q.reason.find("unavailable at desk scale") != std::string::npos);
}

TEST_CASE("flat dimension witnesses") {
  auto A = koszul({"x", "y", "z"}, {"x", "x*y"});
  CHECK(flat_dim(ffd_witness(A, 1)).value == DimValue::finite(0));
  DGModule M = ffd_witness(A, 2);
  CHECK(flat_dim(M).value == DimValue::finite(1));
  CHECK(proj_dim(M).value == DimValue::finite(1));
  CHECK(M.sup() == 0);
  CHECK(M.inf() >= A->inf());
}

TEST_CASE("Hochschild homology of smooth algebras") {
  auto k = ring({});
  auto B = ring({"x"});
  auto h = hochschild_table(k, B, 4);
  CHECK(h.smooth);
  CHECK(h.proj_dim == 1);
  CHECK(h.envelope_dim == 2);
  CHECK(h.HH_lower.size() == 2);
  CHECK(h.HH_lower.at(0) == h.B_hilbert);
  CHECK(h.HH_lower.at(1) == std::vector<long>{0, 1, 1, 1, 1});
  CHECK(hochschild_vanishing_check(h));

  auto id = hochschild_table(B, B, 3);
  CHECK(id.proj_dim == 0);
  CHECK(id.HH_lower.size() == 1);
  CHECK(hochschild_vanishing_check(id));

  auto C = ring({"x", "y"});
  auto c = hochschild_table(k, C, 4);
  CHECK(c.proj_dim == 2);
  CHECK(c.envelope_dim == 4);
  CHECK(hochschild_vanishing_check(c));

  auto D = ring({"x", "y"}, {"x*y"});
  CHECK_THROWS_AS(hochschild_table(ring({"x"}), D, 2), InputError);
}
