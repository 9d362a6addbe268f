#include "doctest.h"
#include "modgrob/torsion.hpp"
#include "testing.hpp"

using namespace modgrob;
using namespace modgrob::testing;

TEST_CASE("saturation_contraction") {
  auto x = ring("x", "dp", "ZZ");
  std::vector<Polynomial> none;
  CHECK(saturation_contraction(x, none).empty());
  auto s = saturation_contraction(x, polys(x, {"3x"}));
  CHECK(format_basis(s) == "x");

  auto r = ring("z,y,x", "dp", "ZZ");
  auto t = saturation_contraction(r, polys(r, {"3z-y", "3y-x", "3x"}));
  CHECK(fmt(buchberger_z(r, t)) == "x\ny\nz");
  for (const auto& p : t) CHECK(p.ring() == r);
}

TEST_CASE("saturation and the rational basis agree") {
  RandomPolys rnd(13);
  auto r = ring("x,y", "dp", "ZZ");
  auto q = r->with_domain(Domain::rationals());
  for (int i = 0; i < 25; ++i) {
    auto gens = rnd.ideal(r, 2, {.max_degree = 3, .max_terms = 3});
    auto sat = saturation_contraction(r, gens);
    auto a = buchberger_field(q, change_ring(sat, q));
    auto b = buchberger_field(q, change_ring(gens, q));
    CHECK(gb_equal(a, b));
    // J is contained in its saturation
    auto S = buchberger_z(r, sat);
    for (const auto& g : gens) CHECK(ideal_member(g, S));
  }
}

TEST_CASE("minimal_multiplier") {
  auto x = ring("x", "dp", "ZZ");
  auto J = buchberger_z(x, polys(x, {"3x"}));
  CHECK(minimal_multiplier(poly(x, "3x"), J) == 1);
  CHECK(minimal_multiplier(poly(x, "x"), J) == 3);
  CHECK_THROWS_AS(minimal_multiplier(poly(x, "x+1"), J), NonMember);

  auto r = ring("z,y,x", "dp", "ZZ");
  auto A = buchberger_z(r, polys(r, {"3z-y", "3y-x", "3x"}));
  CHECK(minimal_multiplier(poly(r, "z"), A) == 27);
  CHECK(minimal_multiplier(poly(r, "y"), A) == 9);
  CHECK(minimal_multiplier(poly(r, "x"), A) == 3);
  CHECK(minimal_multiplier(poly(r, "3z-y"), A) == 1);
}

TEST_CASE("torsion_exponent examples") {
  auto x = ring("x", "dp", "ZZ");
  CHECK(torsion_exponent(x, polys(x, {"x"})).exponent == 1);
  CHECK(torsion_exponent(x, polys(x, {"3x"})).exponent == 3);
  std::vector<Polynomial> none;
  CHECK(torsion_exponent(x, none).exponent == 1);
  // a constant in J: s includes it and the unit ideal saturates
  CHECK(torsion_exponent(x, polys(x, {"6", "2x"})).exponent == 6);

  auto r = ring("z,y,x", "dp", "ZZ");
  auto report = torsion_exponent(r, polys(r, {"3z-y", "3y-x", "3x"}));
  CHECK(report.exponent == 27);
  REQUIRE(report.multipliers.size() == 3);
  std::vector<std::string> seen;
  for (const auto& m : report.multipliers) seen.push_back(fmt(m.generator) + ":" + m.multiplier.get_str());
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<std::string>{"x:3", "y:9", "z:27"});
}

TEST_CASE("torsion agrees with Smith normal form of degree slices") {
  auto x = ring("x", "dp", "ZZ");
  CHECK(lattice_torsion_exponent(polys(x, {"3x"}), 4) == 3);
  CHECK(lattice_torsion_exponent(polys(x, {"x"}), 4) == 1);
  auto r = ring("z,y,x", "dp", "ZZ");
  CHECK(lattice_torsion_exponent(polys(r, {"3z-y", "3y-x", "3x"}), 3) == 27);

  RandomPolys rnd(55);
  auto xy = ring("x,y", "dp", "ZZ");
  for (int i = 0; i < 25; ++i) {
    auto gens = rnd.ideal(xy, rnd.uniform(1, 3), {.max_degree = 2, .max_terms = 3, .coeff_bound = 6, .homogeneous = true});
    CAPTURE(format_basis(gens));
    auto report = torsion_exponent(xy, gens);
    // the saturation is generated in degree <= its max generator degree;
    // the exponent is witnessed there
    long bound = 0;
    for (const auto& g : report.saturation_basis) bound = std::max<long>(bound, g.total_degree());
    for (const auto& g : gens) bound = std::max<long>(bound, g.total_degree());
    CHECK(lattice_torsion_exponent(gens, static_cast<int>(bound) + 2) == report.exponent);
  }
}

TEST_CASE("torsion_exponent properties") {
  RandomPolys rnd(808);
  auto r = ring("x,y", "dp", "ZZ");
  for (int i = 0; i < 25; ++i) {
    auto gens = rnd.ideal(r, rnd.uniform(1, 3), {.max_degree = 3, .max_terms = 3, .coeff_bound = 6});
    CAPTURE(format_basis(gens));
    auto report = torsion_exponent(r, gens);
    auto J = buchberger_z(r, gens);
    for (const auto& g : report.saturation_basis) CHECK(ideal_member(report.exponent * g, J));
    for (const auto& pp : factorize(report.exponent)) {
      Integer smaller = report.exponent / pp.prime;
      bool witness = false;
      for (const auto& g : report.saturation_basis) witness = witness || !ideal_member(smaller * g, J);
      CHECK(witness);
    }
    auto reversed = gens;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(torsion_exponent(r, reversed).exponent == report.exponent);
  }
}
