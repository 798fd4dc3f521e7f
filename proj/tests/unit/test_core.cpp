#include "doctest.h"
#include "findim/module.hpp"

using namespace findim;

namespace {

RingPtr ring(const std::vector<std::string>& vars, const std::vector<std::string>& rels = {}) {
  return GradedRing::make(Field::rationals(), vars, std::vector<int>(vars.size(), 1), rels);
}

}  // namespace

TEST_CASE("field arithmetic") {
  Field q = Field::rationals();
  CHECK(q.div(q.from_int(1), q.from_int(3)) == Scalar(1, 3));
  Field f = Field::prime(7);
  CHECK(f.inv(f.from_int(3)) == 5);
  CHECK(f.from_int(-1) == 6);
  CHECK_THROWS_AS(Field::prime(8), InputError);
  CHECK_THROWS_AS(q.inv(Scalar(0)), std::exception);
  CHECK(Field::parse("Fp:101").characteristic() == 101u);
}

TEST_CASE("polynomial parse and print") {
  auto R = ring({"x", "y"});
  Poly f = R->parse("x^2 - 3/2*x*y + y^2");
  CHECK(R->str(f) == "x^2 - 3/2*x*y + y^2");
  CHECK(R->str(R->parse("0")) == "0");
  CHECK_THROWS_AS(R->parse("x^2 + z"), InputError);
  CHECK_THROWS_AS(R->parse("x +"), InputError);
}

TEST_CASE("graded ring construction") {
  CHECK(ring({"x", "y"})->krull_dimension() == 2);
  CHECK(ring({"x", "y"}, {"x"})->krull_dimension() == 1);
  auto R = ring({"x", "y"}, {"x^2", "x*y"});
  CHECK(R->krull_dimension() == 1);
  CHECK(R->verify_groebner());
  CHECK(ring({"x"}, {"1"})->is_zero_ring());
  CHECK_THROWS_AS(ring({"x", "y"}, {"x^2 + y"}), InputError);
}

TEST_CASE("groebner basis examples") {
  auto P = ring({"x", "y"});
  auto gb = groebner_basis(*P, {P->parse("x"), P->parse("x*y")});
  REQUIRE(gb.size() == 1);
  CHECK(P->str(gb[0]) == "x");
  auto gb2 = groebner_basis(*P, {P->parse("x^2+y^2"), P->parse("x*y")});
  bool has_y3 = false;
  for (auto& g : gb2)
    if (P->str(g) == "y^3") has_y3 = true;
  CHECK(has_y3);
  CHECK(groebner_basis(*P, {}).empty());
  auto again = groebner_basis(*P, gb2);
  REQUIRE(again.size() == gb2.size());
  for (std::size_t i = 0; i < gb2.size(); ++i) CHECK(poly_equal(again[i], gb2[i]));
}

TEST_CASE("normal forms") {
  auto R = ring({"x", "y"}, {"x"});
  CHECK(R->normal_form(R->parse("x*y")).empty());
  auto S = ring({"x", "y"}, {"x^2+y^2"});
  CHECK(S->str(S->normal_form(S->parse("y^2"))) == "y^2");
  CHECK(S->str(S->normal_form(S->parse("x^2"))) == "-y^2");
}

TEST_CASE("syzygies") {
  auto R = ring({"x", "y"});
  GradedMatrix m{{-1, -2}, {0}, {{R->parse("x")}, {R->parse("x*y")}}};
  GradedMatrix s = syzygy_matrix(*R, m);
  REQUIRE(s.ncols() == 1);
  CHECK(matrix_is_zero(*R, compose(*R, m, s)));
  CHECK(R->str(s.at(1, 0)) != "0");
  GradedMatrix k{{-1, -1}, {0}, {{R->parse("x")}, {R->parse("y")}}};
  CHECK(syzygy_matrix(*R, k).ncols() == 1);
  GradedMatrix z = GradedMatrix::zero({0, 0, 0}, {0, 0});
  CHECK(syzygy_matrix(*R, z).ncols() == 3);
}

TEST_CASE("minimal presentation") {
  auto R = ring({"x", "y"});
  PModule id{{0, 0}, {unit_column(R->field(), 2, 0), unit_column(R->field(), 2, 1)}};
  CHECK(minimal_presentation(*R, id).rank() == 0);
  PModule unit{{0, -1}, {{R->parse("1"), R->parse("x")}}};
  PModule mu = minimal_presentation(*R, unit);
  CHECK(mu.rank() == 1);
  CHECK(mu.rels.empty());
  PModule red{{0}, {{R->parse("x")}, {R->parse("x*y")}}};
  PModule mr = minimal_presentation(*R, red);
  CHECK(mr.rank() == 1);
  CHECK(mr.rels.size() == 1);
  CHECK(hilbert_values(*R, red, 0, 6) == hilbert_values(*R, mr, 0, 6));
}
