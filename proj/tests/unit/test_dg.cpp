#include "doctest.h"
#include "helpers.hpp"

using namespace findim;
using namespace findim::testing;

namespace {

long total_length(const Complex& C, int lo, int hi, int elo, int ehi) {
  long sum = 0;
  for (int c = lo; c <= hi; ++c)
    for (long v : strand_cohomology(C, c, elo, ehi)) sum += v;
  return sum;
}

}  // namespace

TEST_CASE("koszul DG-ring on a non-regular pair") {
  auto R = ring({"x", "y"});
  auto A = build_koszul_dg(R, {R->parse("x"), R->parse("x*y")});
  const DGFactor& F = *A->factors[0];
  CHECK(F.verify_structure().empty());
  CHECK(F.size() == 4);
  CHECK(A->inf() == -1);
  CHECK(A->sup() == 0);
  CHECK(A->amp() == 1);
  CHECK(A->h0_dim() == 1);
  CHECK(strand_cohomology(F.complex(), -1, 0, 4) == std::vector<long>{0, 0, 1, 1, 1});
  CHECK(strand_cohomology(F.complex(), 0, 0, 3) == std::vector<long>{1, 1, 1, 1});
  Complex K = koszul_complex(R, {R->parse("x"), R->parse("x*y")});
  for (int c = -2; c <= 0; ++c) CHECK(strand_cohomology(K, c, 0, 5) == strand_cohomology(F.complex(), c, 0, 5));
}

TEST_CASE("koszul multiplication") {
  auto R = ring({"x", "y", "z"});
  auto A = build_koszul_dg(R, {R->parse("x"), R->parse("y"), R->parse("z")});
  const DGFactor& F = *A->factors[0];
  CHECK(F.verify_structure().empty());
  AElem e1 = F.zero(), e2 = F.zero();
  e1[1] = R->parse("1");
  e2[2] = R->parse("1");
  CHECK(F.is_zero(F.add(F.mul(e1, e2), F.mul(e2, e1))));
  CHECK(F.is_zero(F.mul(e1, e1)));
  AElem d12 = F.d(F.mul(e1, e2));
  CHECK(poly_equal(d12[1], poly_neg(R->field(), R->parse("y"))));
  CHECK(poly_equal(d12[2], R->parse("x")));
  CHECK(A->amp() == 0);
  CHECK(A->h0_dim() == 0);
}

TEST_CASE("trivial extensions") {
  auto R = ring({"x", "y"});
  auto A = build_trivial_extension_module(R, {R->parse("x")}, 2);
  CHECK(A->factors[0]->verify_structure().empty());
  CHECK(A->amp() == 2);
  CHECK(A->inf() == -2);
  CHECK(A->h0_dim() == 2);
  auto B = ring({"x"});
  auto T = build_trivial_extension(B, R, 1);
  CHECK(T->nfactors() == 2);
  CHECK(T->amp() == 1);
  CHECK(T->h0_dim() == 2);
  CHECK_FALSE(T->is_local());
  CHECK_THROWS_AS(build_trivial_extension(B, R, 0), InputError);
}

TEST_CASE("structure check flags an odd square") {
  auto R = ring({"x"});
  std::vector<BasisElement> basis{{"1", 0, 0, {}}, {"e", -1, 0, {}}, {"f", -2, 0, {}}};
  std::vector<std::vector<BasisProduct>> mult(3, std::vector<BasisProduct>(3));
  for (int b = 0; b < 3; ++b) mult[0][b] = mult[b][0] = {1, b};
  mult[1][1] = {1, 2};
  DGFactor F(R, basis, mult, std::vector<AElem>(3, AElem(3)), "bad");
  CHECK(F.verify_structure().find("graded-commutative") != std::string::npos);
}

TEST_CASE("semifree koszul modules") {
  auto R = ring({"x", "y"});
  auto A = build_koszul_dg(R, {R->parse("x")});
  DGModule K = koszul_dg_module(A, {{R->parse("y")}});
  const auto& F = *K.parts[0].semifree;
  REQUIRE(F.ngens() == 2);
  CHECK(F.gens[0].cdeg == 0);
  CHECK(F.gens[1].cdeg == -1);
  CHECK(verify_dg_module(K.parts[0].comps).empty());
  auto p = K.profile();
  CHECK(p.inf == 0);
  CHECK(p.sup == 0);
  CHECK(strand_cohomology(K.parts[0].comps.C, 0, 0, 2) == std::vector<long>{1, 0, 0});
  CHECK(strand_cohomology(K.parts[0].comps.C, -1, 0, 3) == std::vector<long>{0, 0, 0, 0});
  CHECK_THROWS_AS(koszul_dg_module(A, {{R->parse("1")}}), InputError);
}

TEST_CASE("presentation validation") {
  auto R = ring({"x"});
  auto A = build_ring_dg(R);
  auto x = A->factors[0]->scalar(R->parse("x"));
  std::vector<SemifreeGen> gens{{0, 0}, {-1, -1}, {-2, -2}};
  CHECK_THROWS_AS(dg_module_from_presentation(A, 0, gens, {{}, {{0, x}}, {{1, x}}}), InputError);
  CHECK_THROWS_AS(dg_module_from_presentation(A, 0, gens, {{{1, x}}, {}, {}}), InputError);
  CHECK_THROWS_AS(dg_module_from_presentation(A, 0, {{0, 0}, {-1, 0}}, {{}, {{0, x}}}), InputError);
  auto M = dg_module_from_presentation(A, 0, {{0, 0}, {-1, -1}}, {{}, {{0, x}}});
  CHECK(M.profile().sup == 0);
  CHECK(strand_cohomology(M.parts[0].comps.C, 0, 0, 2) == std::vector<long>{1, 0, 0});
}

TEST_CASE("hom and tensor over a DG-ring") {
  auto R = ring({"x", "y"});
  auto A = build_koszul_dg(R, {R->parse("x")});
  DGModule K = koszul_dg_module(A, {{R->parse("y")}});
  const auto& F = *K.parts[0].semifree;
  DGModule Af = free_dg_module(A);
  const DGComponents& T = Af.parts[0].comps;

  Complex FT = tensor_complex(F, T);
  CHECK(d_squared_zero(FT));
  for (int c = -2; c <= 0; ++c)
    CHECK(strand_cohomology(FT, c, 0, 3) == strand_cohomology(K.parts[0].comps.C, c, 0, 3));

  Complex H = hom_complex(*Af.parts[0].semifree, K.parts[0].comps);
  CHECK(d_squared_zero(H));
  for (int c = -2; c <= 0; ++c)
    CHECK(strand_cohomology(H, c, 0, 3) == strand_cohomology(K.parts[0].comps.C, c, 0, 3));

  Complex D = hom_complex(F, T);
  CHECK(d_squared_zero(D));
  CHECK(total_length(D, -3, 3, -4, 4) == 1);
  CHECK(strand_cohomology(D, 1, -1, -1) == std::vector<long>{1});

  Complex kF = residue_tensor(F);
  CHECK(kF.rank(0) == 1);
  CHECK(kF.rank(-1) == 1);
  CHECK(column_is_zero(kF.diff(-1)[0]));
}

TEST_CASE("cone of the identity is acyclic") {
  auto R = ring({"x", "y"});
  auto A = build_trivial_extension_module(R, {R->parse("y")}, 1);
  DGModule Af = free_dg_module(A);
  const auto& F = *Af.parts[0].semifree;
  SemifreeMap id{{unit_column(R->field(), 1, 0)}};
  DGComponents C = dg_cone(F, id, Af.parts[0].comps);
  CHECK(verify_dg_module(C).empty());
  CHECK(cohomology_profile(C.C).zero);
}

TEST_CASE("shifts and sums of DG-modules") {
  auto R = ring({"x"});
  auto A = build_koszul_dg(R, {R->parse("x^2")});
  DGModule M = shift_module(free_dg_module(A), 2, 1);
  CHECK(M.profile().sup == -2);
  CHECK(verify_dg_module(M.parts[0].comps).empty());
  DGModule S = direct_sum(M, residue_field_module(A));
  CHECK(S.profile().sup == 0);
  CHECK(S.profile().inf == -2);
  CHECK(verify_dg_module(S.parts[0].comps).empty());
  DGModule Q = h0_quotient_module(A, 0, {R->parse("x")});
  CHECK(strand_cohomology(Q.parts[0].comps.C, 0, 0, 2) == std::vector<long>{1, 0, 0});
}
