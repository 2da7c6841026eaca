#include <doctest.h>

#include <random>

#include "momentforge/fixtures.hpp"
#include "momentforge/moment_map.hpp"

using namespace momentforge;

TEST_SUITE_BEGIN("moment_map");

TEST_CASE("dimension bookkeeping") {
  auto disk = fixtures::disk();
  CHECK(disk.n == 2);
  CHECK(disk.l1 == 1);
  CHECK(disk.l2 == 1);
  CHECK(disk.m == 3);
  auto cp = fixtures::crossing_pair();
  CHECK(cp.m == 5);
  CHECK(cp.ambient_variables() ==
        std::vector<std::string>{"x1", "x2", "y_1_1", "y_1_2", "y_2_1", "y_2_2", "y_2_3"});
}

TEST_CASE("validate_moment_data") {
  auto annulus = fixtures::annulus();
  CHECK(validate_moment_data(annulus).passed());

  // both crossing circles in one group: the crossing breaks injectivity
  auto cp = fixtures::crossing_pair();
  MomentData bad = MomentData::from_region(*cp.region, {1, 1}, {1});
  auto rep = validate_moment_data(bad);
  CHECK(!rep.passed());
  CHECK(rep.has("injectivity_violation"));

  MomentData gap = MomentData::from_region(*cp.region, {1, 1}, {1, 3});
  auto rep2 = validate_moment_data(gap);
  CHECK(rep2.has("not_surjective"));

  MomentData ok = MomentData::from_region(*cp.region, {1, 2}, {1, 3});
  CHECK(validate_moment_data(ok).passed());
}

TEST_CASE("emit: disk degeneration string") {
  auto disk = fixtures::disk();
  EmittedSystem sys = emit_system(disk);
  REQUIRE(sys.polys.size() == 1);
  CHECK(sys.polys[0].str() == "1 - 1*x1^2 - 1*x2^2 - 1*y_1_1^2 - 1*y_1_2^2");
  CHECK(sys.ambient_dim == 4);
}

TEST_CASE("emit: annulus expanded product") {
  auto annulus = fixtures::annulus();
  EmittedSystem sys = emit_system(annulus);
  REQUIRE(sys.polys.size() == 1);
  // (4 - x^2 - y^2)(x^2 + y^2 - 1) expanded, minus the sphere block
  CHECK(sys.polys[0].str() ==
        "-4 + 5*x1^2 + 5*x2^2 - 1*y_1_1^2 - 1*y_1_2^2 - 1*x1^4 - 2*x1^2*x2^2 - 1*x2^4");
  CHECK(sys.ambient_dim == 4);
}

TEST_CASE("emit: crossing pair dimensions") {
  auto cp = fixtures::crossing_pair();
  EmittedSystem sys = emit_system(cp);
  CHECK(sys.polys.size() == 2);
  CHECK(sys.ambient_dim == cp.m + cp.l2);
  // group 1 holds circle 1 only, group 2 holds circle 2 only
  CHECK(sys.polys[0].str().find("y_1_1") != std::string::npos);
  CHECK(sys.polys[1].str().find("y_2_3") != std::string::npos);

  // same region with sphere dimensions (1,1): two polynomials in R^6, m = 4
  MomentData flat = MomentData::from_region(*cp.region, {1, 2}, {1, 1});
  CHECK(flat.m == 4);
  CHECK(emit_system(flat).ambient_dim == 6);
}

TEST_CASE("emitted system vanishes where the sphere norms match the products") {
  // P_i(x, y) + sum y^2 = product_i(x) as polynomials; check at random points
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-8, 8);
  for (auto name : {"disk", "annulus", "crossing_pair"}) {
    auto d = fixtures::by_name(name);
    EmittedSystem sys = emit_system(d);
    auto fs = d.surface_polys();
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Rat> pt;
      for (int i = 0; i < sys.ambient_dim; ++i) pt.push_back(Rat(num(rng), 4));
      size_t ybase = 2;
      for (int g = 1; g <= d.l2; ++g) {
        Rat prod(1);
        for (int j = 0; j < d.l1; ++j)
          if (d.group_map[j] == g) prod *= fs[j].eval(std::vector<Rat>{pt[0], pt[1]});
        Rat norm(0);
        for (int k = 0; k <= d.dim_map[g - 1]; ++k) norm += pt[ybase + k].squared();
        CHECK(sys.polys[g - 1].eval(pt) == prod - norm);
        ybase += d.dim_map[g - 1] + 1;
      }
    }
  }
}

TEST_CASE("fiber classes per stratum") {
  auto cp = fixtures::crossing_pair();
  CHECK(fiber_class_for_stratum(cp, {}) == FiberClass{{1, 2}});
  CHECK(fiber_class_for_stratum(cp, {1}) == FiberClass{{2}});
  CHECK(fiber_class_for_stratum(cp, {2}) == FiberClass{{1}});
  CHECK(fiber_class_for_stratum(cp, {1, 2}) == FiberClass{});
  CHECK(fiber_class_for_stratum(cp, {1, 2}).is_point());
}

TEST_CASE("fiber_class_at locates strata") {
  auto annulus = fixtures::annulus();
  CHECK(fiber_class_at(annulus, QuadExt(Rat(3, 2)), QuadExt(Rat(0))) == FiberClass{{1}});
  CHECK(fiber_class_at(annulus, QuadExt(Rat(1)), QuadExt(Rat(0))) == FiberClass{});
  CHECK_THROWS_AS(fiber_class_at(annulus, QuadExt(Rat(0)), QuadExt(Rat(0))), OutsideError);
  auto cp = fixtures::crossing_pair();
  for (auto& cr : cp.region->boundary_crossings())
    CHECK(fiber_class_at(cp, cr.x, cr.y).is_point());
}

TEST_CASE("fiber dimension bound") {
  auto annulus = fixtures::annulus();
  CHECK(fiber_dim_bound(annulus) == 1);
  auto cp = fixtures::crossing_pair();
  CHECK(fiber_dim_bound(cp) == 3);
  auto s2 = fixtures::disk_s2();
  CHECK(fiber_dim_bound(s2) == 0);
}

TEST_CASE("general data: emission without validation") {
  GeneralRegion gr;
  gr.nvars = 3;
  std::vector<std::string> vars{"x1", "x2", "x3"};
  gr.polys.push_back(Poly::parse("1 - 1*x1^2 - 1*x2^2 - 1*x3^2", vars));
  gr.seed = {Rat(0), Rat(0), Rat(0)};
  MomentData d = MomentData::from_general(gr, {1}, {2});
  CHECK(!d.hypotheses_verified);
  CHECK(d.m == 5);
  EmittedSystem sys = emit_system(d);
  CHECK(sys.ambient_dim == 6);
  CHECK(sys.polys[0].str() ==
        "1 - 1*x1^2 - 1*x2^2 - 1*x3^2 - 1*y_1_1^2 - 1*y_1_2^2 - 1*y_1_3^2");
}

TEST_SUITE_END();
