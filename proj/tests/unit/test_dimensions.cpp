#include <random>

#include "doctest.h"
#include "findim/dimensions.hpp"
#include "findim/engine.hpp"
#include "helpers.hpp"

using namespace findim;
using namespace findim::testing;

namespace {

DGRingPtr kxy_koszul() {
  auto R = ring({"x", "y"});
  return build_koszul_dg(R, {R->parse("x"), R->parse("x*y")});
}

std::vector<std::vector<Poly>> seq(const DGRingPtr& A, const std::vector<std::string>& xs) {
  std::vector<std::vector<Poly>> out;
  for (const auto& s : xs) out.push_back({A->factors[0]->base().parse(s)});
  return out;
}

}  // namespace

TEST_CASE("projective dimension of free and Koszul modules") {
  auto A = kxy_koszul();
  CHECK(proj_dim(free_dg_module(A)).value == DimValue::finite(0));
  CHECK(proj_dim(koszul_dg_module(A, seq(A, {"y"}))).value == DimValue::finite(1));
  CHECK(proj_dim(koszul_dg_module(A, seq(A, {"x", "y"}))).value == DimValue::finite(2));
  auto R = ring({"x", "y"});
  auto P = build_ring_dg(R);
  CHECK(proj_dim(residue_field_module(P)).value == DimValue::finite(2));
  CHECK(proj_dim(koszul_dg_module(P, seq(P, {"x", "y", "x+y"}))).value == DimValue::finite(3));
}

TEST_CASE("zero module has dimension minus infinity") {
  auto A = kxy_koszul();
  DGModule Z = h0_quotient_module(A, 0, {A->factors[0]->base().parse("1")});
  CHECK(proj_dim(Z).value == DimValue::minus_infinity());
  CHECK(inj_dim(Z).value == DimValue::minus_infinity());
}

TEST_CASE("H^0 over a non-regular Koszul ring has infinite projective dimension") {
  auto R = ring({"x"}, {"x^2"});
  auto A = build_koszul_dg(R, {R->parse("x")});
  auto rep = proj_dim(h0_module(A));
  CHECK(rep.value.is_infinite());
  REQUIRE(rep.factors.size() == 1);
  CHECK(rep.factors[0].rule.find("Auslander-Buchsbaum") != std::string::npos);

  auto S = ring({"x"});
  auto B = build_koszul_dg(S, {S->parse("x^2")});
  CHECK(proj_dim(h0_module(B)).value == DimValue::finite(0));
}

TEST_CASE("flat dimension agrees with projective dimension") {
  auto A = kxy_koszul();
  DGModule K = koszul_dg_module(A, seq(A, {"y"}));
  CHECK(flat_dim(K).value == DimValue::finite(1));
  CHECK(flat_dim(shift_module(K, 2)).value == DimValue::finite(3));
  CHECK(flat_dim(free_dg_module(A)).value == DimValue::finite(0));
}

TEST_CASE("injective dimension") {
  auto P = build_ring_dg(ring({"x"}));
  CHECK(inj_dim(free_dg_module(P)).value == DimValue::finite(1));
  auto Q = build_ring_dg(ring({"x", "y"}, {"x^2", "x*y"}));
  CHECK(inj_dim(free_dg_module(Q)).value.is_infinite());
  CHECK(inj_dim(free_dg_module(kxy_koszul())).value.is_finite());
}

TEST_CASE("regular sequences") {
  auto P = build_ring_dg(ring({"x", "y"}));
  CHECK(is_regular_sequence(P, seq(P, {"x", "y"})).regular);
  auto A = kxy_koszul();
  auto r = is_regular_sequence(A, seq(A, {"y"}));
  CHECK(r.regular);
  CHECK(r.prefix_inf == std::vector<int>{-1});
  auto Q = build_ring_dg(ring({"x", "y"}, {"x^2", "x*y"}));
  auto q = is_regular_sequence(Q, seq(Q, {"x"}));
  CHECK_FALSE(q.regular);
  CHECK(q.first_bad == 0);
}

TEST_CASE("sequential depth") {
  CHECK(sequential_depth(build_ring_dg(ring({"x", "y"}))).depth == 2);
  CHECK(sequential_depth(kxy_koszul()).depth == 1);
  auto d = sequential_depth(build_ring_dg(ring({"x", "y"}, {"x^2", "x*y"})));
  CHECK(d.depth == 0);
  CHECK(d.exhaustive);
}

TEST_CASE("local cohomology and local Cohen-Macaulay") {
  auto P = build_ring_dg(ring({"x", "y"}));
  CHECK(local_cohomology(P).amp() == 0);
  CHECK(local_cohomology(P).degrees == std::vector<int>{2});
  auto Q = build_ring_dg(ring({"x", "y"}, {"x^2", "x*y"}));
  CHECK(local_cohomology(Q).degrees == std::vector<int>{0, 1});
  auto A = kxy_koszul();
  CHECK(local_cohomology(A).amp() == 1);
  CHECK(is_local_cohen_macaulay(P));
  CHECK(is_local_cohen_macaulay(A));
  CHECK_FALSE(is_local_cohen_macaulay(Q));
  auto R = ring({"x", "y"});
  auto T = build_trivial_extension_module(R, {R->parse("x")}, 1);
  CHECK(local_cohomology(T).degrees == std::vector<int>{0, 2});
  CHECK_FALSE(is_local_cohen_macaulay(T));
}

TEST_CASE("dualizing modules and Gorenstein rings") {
  auto P = build_ring_dg(ring({"x", "y"}));
  auto d = dualizing_dg_module(P);
  CHECK(d.inf == -2);
  CHECK(d.biduality);
  CHECK(d.injdim.value == DimValue::finite(d.inf + 2));
  auto A = kxy_koszul();
  auto e = dualizing_dg_module(A);
  CHECK(e.inf == -1);
  CHECK(e.biduality);
  CHECK(e.injdim.value == DimValue::finite(e.inf + 1));
  CHECK(is_gorenstein(P));
  CHECK(is_gorenstein(A));
  CHECK_FALSE(is_gorenstein(build_ring_dg(ring({"x", "y"}, {"x^2", "x*y"}))));
}

namespace {

DGModule random_module(const DGRingPtr& A, std::mt19937& rng) {
  const GradedRing& R = A->factors[0]->base();
  const std::vector<std::string> pool{"x", "y", "x*y", "y^2", "x+y"};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1), shift(0, 2), kind(0, 1);
  DGModule M = kind(rng) ? koszul_dg_module(A, {{R.parse(pool[pick(rng)])}})
                         : h0_quotient_module(A, 0, {R.parse(pool[pick(rng)])});
  M = shift_module(M, shift(rng));
  if (kind(rng)) M = direct_sum(M, shift_module(koszul_dg_module(A, {{R.parse(pool[pick(rng)])}}), shift(rng)));
  return M;
}

std::vector<DGRingPtr> corpus_rings() {
  auto R = ring({"x", "y"});
  return {build_ring_dg(R), kxy_koszul(), build_ring_dg(ring({"x", "y"}, {"x^2", "x*y"}))};
}

}  // namespace

TEST_CASE("reduction agrees with the definition of projective dimension") {
  std::mt19937 rng(7);
  for (const auto& A : corpus_rings())
    for (int t = 0; t < 4; ++t) {
      DGModule M = random_module(A, rng);
      CAPTURE(A->label);
      CAPTURE(M.label);
      CHECK(proj_dim(M).value == proj_dim_by_definition(M).value);
      CHECK(flat_dim(M).value == proj_dim(M).value);
    }
}

TEST_CASE("shift and direct-sum laws") {
  std::mt19937 rng(11);
  for (const auto& A : corpus_rings())
    for (int t = 0; t < 3; ++t) {
      DGModule M = random_module(A, rng), N = random_module(A, rng);
      DimValue pm = proj_dim(M).value, pn = proj_dim(N).value;
      DimValue shifted = proj_dim(shift_module(M, 2)).value;
      if (pm.is_finite())
        CHECK(shifted == DimValue::finite(pm.value + 2));
      else
        CHECK(shifted == pm);
      CHECK(proj_dim(direct_sum(M, N)).value == max(pm, pn));
    }
}

TEST_CASE("Koszul window bounds") {
  std::mt19937 rng(3);
  auto A = kxy_koszul();
  for (int t = 0; t < 6; ++t) {
    DGModule M = random_module(A, rng);
    auto a = seq(A, t % 2 ? std::vector<std::string>{"y"} : std::vector<std::string>{"x", "y"});
    DGModule K = koszul_dg_module(A, a);
    int l = static_cast<int>(a.size());
    auto tp = cohomology_profile(derived_tensor(K, M, 0, M.inf() - l - 2));
    if (!tp.zero) CHECK(tp.inf >= M.inf() - l);
    auto hp = cohomology_profile(rhom(K, M, 0, M.sup() + l + 2));
    if (!hp.zero) CHECK(hp.sup <= M.sup() + l);
  }
}

TEST_CASE("dualizing module bounds") {
  std::mt19937 rng(5);
  for (const auto& A : {build_ring_dg(ring({"x", "y"})), kxy_koszul()}) {
    auto D = dualizing_dg_module(A);
    for (int t = 0; t < 4; ++t) {
      DGModule M = random_module(A, rng);
      int hi = M.sup() - D.inf + 4;
      auto E = cohomology_profile(rhom(D.R, M, 0, hi));
      REQUIRE_FALSE(E.zero);
      CHECK(E.inf <= M.inf() - D.inf);
      if (flat_dim(M).value.is_finite()) {
        auto T = cohomology_profile(derived_tensor(D.R, M, 0, D.inf + M.inf() - 2));
        CHECK(T.inf >= D.inf + M.inf());
      }
    }
  }
}

TEST_CASE("global finitistic bound and the Auslander-Buchsbaum inequality") {
  std::mt19937 rng(13);
  int tested = 0;
  for (const auto& A : corpus_rings()) {
    int depth = sequential_depth(A).depth;
    for (int t = 0; t < 4; ++t) {
      DGModule M = random_module(A, rng);
      DimValue p = proj_dim(M).value;
      if (!p.is_finite()) continue;
      ++tested;
      CHECK(p.value <= A->h0_dim() - M.inf());
      CHECK(p.value <= depth - M.inf() - A->amp());
    }
  }
  CHECK(tested > 0);
}

TEST_CASE("injective dimension of a Gorenstein ring tensored with a flat module") {
  std::mt19937 rng(17);
  auto A = kxy_koszul();
  DimValue j = inj_dim(free_dg_module(A)).value;
  REQUIRE(j.is_finite());
  int tested = 0;
  for (int t = 0; t < 4; ++t) {
    DGModule F = random_module(A, rng);
    if (!flat_dim(F).value.is_finite()) continue;
    // A tensored with F is F itself.
    DimValue v = inj_dim(F).value;
    if (!v.is_finite()) continue;
    ++tested;
    CHECK(v.value <= j.value + F.sup());
  }
  CHECK(tested > 0);
}

TEST_CASE("Ext bound for modules of finite flat dimension over a Gorenstein ring") {
  std::mt19937 rng(19);
  auto A = kxy_koszul();
  REQUIRE(is_gorenstein(A));
  int tested = 0;
  for (int t = 0; t < 5; ++t) {
    DGModule M = random_module(A, rng), N = random_module(A, rng);
    if (!flat_dim(M).value.is_finite()) continue;
    ++tested;
    int bound = N.sup() - M.inf() + A->h0_dim();
    auto E = cohomology_profile(rhom(M, N, 0, bound + 3));
    if (!E.zero) CHECK(E.sup <= bound);
  }
  CHECK(tested > 0);
}
