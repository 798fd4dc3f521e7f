#include "doctest.h"
#include "findim/complexes.hpp"
#include "helpers.hpp"

using namespace findim;

using namespace findim::testing;

TEST_CASE("make_complex") {
  auto R = ring({"x"});
  auto single = make_complex(R, {{0, {0}}}, {});
  CHECK(cohomology_profile(single).amp() == 0);
  GradedMatrix mx{{-1}, {0}, {{R->parse("x")}}};
  auto kos = make_complex(R, {{-1, {-1}}, {0, {0}}}, {{-1, mx}});
  CHECK(cohomology_profile(kos).sup == 0);
  GradedMatrix m1{{-1}, {0}, {{R->parse("x")}}};
  GradedMatrix m2{{-2}, {-1}, {{R->parse("x")}}};
  CHECK_THROWS_WITH_AS(make_complex(R, {{-2, {-2}}, {-1, {-1}}, {0, {0}}}, {{-2, m2}, {-1, m1}}),
                       doctest::Contains("x^2"), InputError);
  GradedMatrix bad{{0}, {0}, {{R->parse("x")}}};
  CHECK_THROWS_AS(make_complex(R, {{-1, {0}}, {0, {0}}}, {{-1, bad}}), InputError);
}

TEST_CASE("shift_complex") {
  auto R = ring({"x", "y"});
  Complex K = koszul_complex(R, {R->parse("x"), R->parse("y")});
  Complex S0 = shift_complex(K, 0);
  CHECK(S0.comp.size() == K.comp.size());
  Complex k0 = module_complex(R, residue_field(R));
  Complex k1 = shift_complex(k0, 1);
  CHECK(k1.comp.count(-1) == 1);
  Complex back = shift_complex(shift_complex(K, 3), -3);
  for (const auto& [c, cols] : K.d)
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i) CHECK(poly_equal(back.d.at(c)[j][i], cols[j][i]));
  Complex s1 = shift_complex(K, 1);
  CHECK(d_squared_zero(s1));
  CHECK(poly_equal(s1.d.at(-2)[0][0], poly_neg(R->field(), K.d.at(-1)[0][0])));
}

TEST_CASE("mapping_cone") {
  auto R = ring({"x"});
  Complex one = module_complex(R, PModule::free({0}));
  ChainMap id{{{0, {unit_column(R->field(), 1, 0)}}}};
  CHECK(cohomology_profile(mapping_cone(one, one, id)).zero);

  Complex src = module_complex(R, PModule::free({-1}));
  ChainMap mx{{{0, {{R->parse("x")}}}}};
  auto p = cohomology_profile(mapping_cone(src, one, mx));
  CHECK(p.H.size() == 1);
  CHECK(p.H.count(0) == 1);
  CHECK(hilbert_values(*R, p.H[0], 0, 3) == std::vector<long>{1, 0, 0, 0});

  auto S = ring({"x", "y"}, {"x*y"});
  Complex sone = module_complex(S, PModule::free({0}));
  Complex ssrc = module_complex(S, PModule::free({-1}));
  ChainMap smx{{{0, {{S->parse("x")}}}}};
  Complex cone = mapping_cone(ssrc, sone, smx);
  auto q = cohomology_profile(cone);
  REQUIRE(q.H.count(-1) == 1);
  REQUIRE(q.H.count(0) == 1);
  // H^0 = S/(x) = k[y]; H^{-1} = ann(x) = (y), generated in degree 2 after the twist.
  CHECK(hilbert_values(*S, q.H[0], 0, 4) == std::vector<long>{1, 1, 1, 1, 1});
  CHECK(hilbert_values(*S, q.H[-1], 0, 4) == strand_cohomology(cone, -1, 0, 4));
  CHECK(hilbert_values(*S, q.H[-1], 0, 4) == std::vector<long>{0, 0, 1, 1, 1});

  Complex bad = module_complex(R, PModule::free({-1}));
  Complex tgt = koszul_complex(R, {R->parse("x")});
  ChainMap notmap{{{0, {{R->parse("x")}}}}};
  CHECK_NOTHROW(mapping_cone(bad, tgt, notmap));
}

TEST_CASE("cohomology profiles of Koszul complexes") {
  auto R = ring({"x", "y"});
  auto p = cohomology_profile(koszul_complex(R, {R->parse("x"), R->parse("y")}));
  CHECK(p.amp() == 0);
  CHECK(hilbert_values(*R, p.H[0], 0, 3) == std::vector<long>{1, 0, 0, 0});

  Complex K = koszul_complex(R, {R->parse("x"), R->parse("x*y")});
  auto q = cohomology_profile(K);
  CHECK(q.amp() == 1);
  CHECK(hilbert_values(*R, q.H[0], 0, 5) == std::vector<long>{1, 1, 1, 1, 1, 1});
  // H^{-1} = R/(x) generated by y e1 - e2 in internal degree 2.
  CHECK(hilbert_values(*R, q.H[-1], 0, 5) == std::vector<long>{0, 0, 1, 1, 1, 1});
  CHECK(strand_cohomology(K, -1, 0, 5) == std::vector<long>{0, 0, 1, 1, 1, 1});
  CHECK(q.H[-1].rank() == 1);

  Complex Z;
  Z.ring = R;
  auto z = cohomology_profile(Z);
  CHECK(z.zero);
  CHECK(z.sup == INT_MIN);
}

TEST_CASE("hom and tensor") {
  auto R = ring({"x", "y"});
  Complex one = module_complex(R, PModule::free({0}));
  Complex K = koszul_complex(R, {R->parse("x"), R->parse("x*y")});
  Complex H = hom_complex(one, K);
  for (int c = -2; c <= 0; ++c) CHECK(H.at(c).twists == K.at(c).twists);

  Complex Kx = koszul_complex(R, {R->parse("x")});
  Complex Ky = koszul_complex(R, {R->parse("y")});
  Complex T = tensor_complex(Kx, Ky);
  Complex Kxy = koszul_complex(R, {R->parse("x"), R->parse("y")});
  for (int c = -2; c <= 0; ++c) {
    CHECK(T.at(c).twists == Kxy.at(c).twists);
    auto a = T.diff(c), b = Kxy.diff(c);
    REQUIRE(a.size() == b.size());
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t i = 0; i < a[j].size(); ++i) CHECK(poly_equal(a[j][i], b[j][i]));
  }

  Complex D = hom_complex(Kx, one);
  CHECK(d_squared_zero(D));
  auto pd = cohomology_profile(D);
  auto pk = cohomology_profile(shift_complex(Kx, -1));
  REQUIRE(pd.H.size() == pk.H.size());
  for (const auto& [c, M] : pk.H) {
    REQUIRE(pd.H.count(c));
    // Same cohomology up to the internal twist by deg(x).
    CHECK(hilbert_values(*R, pd.H[c], -2, 3) == hilbert_values(*R, M, -1, 4));
  }
}

TEST_CASE("minimal free resolutions") {
  auto R = ring({"x", "y"});
  auto F = minimal_free_resolution(R, residue_field(R), 3);
  CHECK(F.betti() == std::vector<int>{1, 2, 1});
  CHECK(F.terminated);
  CHECK(F.length == 2);

  auto S = ring({"x"}, {"x^2"});
  auto G = minimal_free_resolution(S, residue_field(S), 5);
  CHECK(G.betti() == std::vector<int>{1, 1, 1, 1, 1, 1});
  CHECK_FALSE(G.terminated);

  auto Z = minimal_free_resolution(R, PModule{}, 3);
  CHECK(Z.terminated);
  CHECK(Z.length == -1);
  CHECK(Z.betti().empty());

  for (const auto& m : F.maps)
    for (const auto& c : m.cols)
      for (const auto& f : c) CHECK((f.empty() || f.front().mono.deg > 0));
}

TEST_CASE("ext and tor tables") {
  auto R = ring({"x"});
  PModule k = residue_field(R);
  auto F = minimal_free_resolution(R, k, 4);
  auto ext = ext_table(F, module_complex(R, k), 0, 3);
  CHECK(ext.size() == 2);
  CHECK(ext.count(0));
  CHECK(ext.count(1));

  auto S = ring({"x", "y"});
  PModule q{{0}, {{S->parse("x")}}};
  auto G = minimal_free_resolution(S, q, 3);
  auto tor = tor_table(G, module_complex(S, q), 0, 2);
  REQUIRE(tor.count(1));
  CHECK(hilbert_values(*S, tor[1], 0, 3) == std::vector<long>{0, 1, 1, 1});
  CHECK(tor.count(2) == 0);

  PModule M{{0, -1}, {{S->parse("x^2"), S->parse("0")}}};
  auto H = minimal_free_resolution(S, M, 3);
  auto e0 = ext_table(H, module_complex(S, M), 0, 0);
  CHECK(e0.count(0));

  auto T = ring({"x"}, {"x^2"});
  auto short_res = minimal_free_resolution(T, residue_field(T), 1);
  CHECK_THROWS_AS(ext_table(short_res, module_complex(T, PModule::free({0})), 0, 3), InputError);
}
