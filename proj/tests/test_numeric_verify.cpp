#include <doctest.h>

#include <random>

#include "momentforge/constructions.hpp"
#include "momentforge/fixtures.hpp"
#include "momentforge/numeric_verify.hpp"

using namespace momentforge;

TEST_SUITE_BEGIN("numeric_verify");

TEST_CASE("sample streams are deterministic and splittable") {
  SampleRng rng(7);
  auto a0 = rng.stream(0)();
  auto a1 = rng.stream(1)();
  CHECK(a0 != a1);
  CHECK(a0 == SampleRng(7).stream(0)());
  CHECK(SampleRng(8).stream(0)() != a0);
}

TEST_CASE("sample_fiber lands on the surface") {
  auto disk = fixtures::disk();
  auto pts = sample_fiber(disk, {Rat(0), Rat(0)}, 4, 7);
  REQUIRE(pts.size() == 4);
  EmittedSystem sys = emit_system(disk);
  for (auto& pt : pts) {
    REQUIRE(pt.size() == 4);
    CHECK(std::abs(sys.polys[0].eval(pt)) < 1e-12);
    // ||y_1||^2 = 1 over the center
    CHECK(std::abs(pt[2] * pt[2] + pt[3] * pt[3] - 1.0) < 1e-12);
  }
  auto annulus = fixtures::annulus();
  auto apts = sample_fiber(annulus, {Rat(3, 2), Rat(0)}, 2, 1);
  for (auto& pt : apts)
    CHECK(std::abs(pt[2] * pt[2] + pt[3] * pt[3] - 35.0 / 16.0) < 1e-12);
  CHECK_THROWS_AS(sample_fiber(annulus, {Rat(1), Rat(0)}, 1, 0), NotInteriorError);
  CHECK_THROWS_AS(sample_fiber(annulus, {Rat(0), Rat(0)}, 1, 0), NotInteriorError);
}

TEST_CASE("rank_check passes on fixtures") {
  for (auto name : {"disk", "annulus", "two_hole", "crossing_pair"}) {
    auto d = fixtures::by_name(name);
    auto pts = sample_fiber(d, {d.region->seed_x, d.region->seed_y}, 100, 42);
    auto rep = rank_check(d, pts);
    CHECK(rep.pass());
    CHECK(rep.min_rank_gap > 1e3);
    CHECK(rep.max_residual < 1e-9);
  }
}

TEST_CASE("rank_check detects the tangent degeneration") {
  // two tangent circles in one group; the fiber over the tangency kills a row
  Circle a{1, Rat(0), Rat(0), Rat(1), Orientation::Inside};
  Circle b{2, Rat(2), Rat(0), Rat(1), Orientation::Outside};
  GeneralRegion gr;
  gr.nvars = 2;
  gr.polys = {circle_poly(a), circle_poly(b)};
  gr.seed = {Rat(-1, 2), Rat(0)};
  MomentData d = MomentData::from_general(gr, {1, 1}, {1});
  std::vector<double> tangency_fiber{1.0, 0.0, 0.0, 0.0};
  auto rep = rank_check(d, {tangency_fiber});
  CHECK(!rep.pass());
  CHECK(rep.min_rank_gap < 1e3);
}

TEST_CASE("image_check is clean on fixtures and flags hole interiors") {
  for (auto name : {"disk", "annulus", "two_hole", "crossing_pair"}) {
    auto d = fixtures::by_name(name);
    auto rep = image_check(d, 60, 5);
    CHECK(rep.pass());
    CHECK(rep.samples == 3600);
  }
  // hole interiors witness a negative product
  auto annulus = fixtures::annulus();
  auto fs = annulus.surface_polys();
  double prod = 1;
  for (auto& f : fs) prod *= f.eval(std::vector<double>{0.0, 0.0});
  CHECK(prod < 0);
}

TEST_CASE("tangent pushforward at boundary strata") {
  auto annulus = fixtures::annulus();
  // right pole of the outer circle: the stratum tangent is vertical
  auto rep = tangent_check_at(annulus, {Rat(2), Rat(0)}, {1});
  CHECK(rep.pass);
  CHECK(rep.pushforward_dim == 1);
  CHECK(rep.principal_angle < 1e-5);

  auto cp = fixtures::crossing_pair();
  // interior control: full rank
  auto interior = tangent_check_at(cp, {Rat(0), Rat(0)}, {});
  CHECK(interior.pushforward_dim == 2);
}

TEST_CASE("tangent suite covers arcs and crossings") {
  auto cp = fixtures::crossing_pair();
  auto reports = tangent_suite(cp, 20);
  CHECK(reports.size() >= 10);
  int crossings = 0;
  for (auto& r : reports) {
    CHECK(r.pass);
    if (r.l3 == 2) {
      crossings++;
      CHECK(r.pushforward_dim == 0);
    } else {
      CHECK(r.pushforward_dim == 1);
      CHECK(r.principal_angle < 1e-5);
    }
  }
  CHECK(crossings == 2);
}

TEST_CASE("pole second differences are nondegenerate") {
  for (auto name : {"disk", "annulus", "crossing_pair"}) {
    auto d = fixtures::by_name(name);
    for (auto& p : d.region->boundary_poles()) {
      const Circle& c = d.region->circle_by_id(p.circle);
      CHECK(std::abs(pole_second_difference(c, p.side, 1e-3)) > 1e-4);
    }
  }
}

TEST_CASE("sweep direction degenerates exactly over singular abscissae") {
  auto annulus = fixtures::annulus();
  // at the outer circle's left pole the whole group block vanishes
  double at_pole = sweep_direction_norm(annulus, {-2.0, 0.0}, {1}, 3);
  CHECK(at_pole < 1e-6);
  double interior = sweep_direction_norm(annulus, {1.5, 0.0}, {}, 3);
  CHECK(interior > 1e-3);
}

TEST_CASE("oracle agrees with the exact sweep on fixtures") {
  for (auto name : {"disk", "annulus", "two_hole", "crossing_pair"}) {
    auto d = fixtures::by_name(name);
    auto g = reeb_graph(d);
    auto oracle = reeb_oracle(d, 48);
    CHECK(x_order_isomorphic(g, oracle));
    CHECK(betti1(oracle.graph) == d.region->hole_count);
  }
}

TEST_CASE("oracle agrees on decorated arrangements") {
  auto base = fixtures::annulus();
  auto res = attach_pendant_circles(base, {{2, 1}}, 4);
  auto g = reeb_graph(res.data);
  auto oracle = reeb_oracle(res.data, 64);
  CHECK(g.vertices.size() == 7);
  CHECK(x_order_isomorphic(g, oracle));

  auto chords = attach_chord_circles(base, {{0, 1}}, 4);
  CHECK(x_order_isomorphic(reeb_graph(chords.data), reeb_oracle(chords.data, 64)));
}

TEST_CASE("oracle equivalence on randomized arrangements") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long> coord(-12, 12);
  std::uniform_int_distribution<long> rad(2, 10);
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<int> orient(0, 1);
  int accepted = 0, trials = 0;
  while (accepted < 100 && trials < 40000) {
    trials++;
    int k = count(rng);
    std::vector<Circle> circles;
    bool has_inside = false;
    for (int i = 0; i < k; ++i) {
      Orientation o = (i == 0 || orient(rng)) ? Orientation::Inside : Orientation::Outside;
      if (o == Orientation::Inside) has_inside = true;
      circles.push_back({i + 1, Rat(coord(rng), 4), Rat(coord(rng), 4), Rat(rad(rng), 4), o});
    }
    if (!has_inside) continue;
    // search a seed on a coarse grid
    std::optional<std::pair<Rat, Rat>> seed;
    for (long sx = -12; sx <= 12 && !seed; ++sx) {
      for (long sy = -12; sy <= 12 && !seed; ++sy) {
        Rat qx(2 * sx + 1, 8), qy(2 * sy + 1, 8);
        bool ok = true;
        for (auto& c : circles)
          if (circle_value(c, qx, qy).sign() <= 0) ok = false;
        if (ok) seed = {{qx, qy}};
      }
    }
    if (!seed) continue;
    if (!validate_arrangement(circles, seed->first, seed->second).passed()) continue;
    Region region;
    try {
      region = region_from_seed(circles, seed->first, seed->second);
    } catch (const Error&) {
      continue;
    }
    // one group per circle keeps every crossing admissible
    std::vector<int> groups(k), dims(k, 1);
    for (int i = 0; i < k; ++i) groups[i] = i + 1;
    MomentData d = MomentData::from_region(std::move(region), groups, dims);
    if (!validate_moment_data(d).passed()) continue;
    auto g = reeb_graph(d);
    OracleGraph oracle;
    try {
      oracle = reeb_oracle(d, 48);
    } catch (const ResolutionError&) {
      oracle = reeb_oracle(d, 512);
    }
    CHECK(x_order_isomorphic(g, oracle));
    CHECK(betti1(g.as_multigraph()) == d.region->hole_count);
    accepted++;
  }
  CHECK(accepted == 100);
}

TEST_SUITE_END();
