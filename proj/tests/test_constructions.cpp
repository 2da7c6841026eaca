#include <doctest.h>

#include "momentforge/constructions.hpp"
#include "momentforge/fixtures.hpp"

using namespace momentforge;

TEST_SUITE_BEGIN("constructions");

TEST_CASE("pendant on the annulus") {
  auto base = fixtures::annulus();
  auto base_graph = reeb_graph(base).as_multigraph();
  auto res = attach_pendant_circles(base, {{0, 1}}, 4);
  CHECK(res.data.l1 == 3);
  CHECK(res.data.l2 == 2);
  CHECK(res.data.dim_map == std::vector<int>{1, 1});
  CHECK(validate_arrangement(res.data.region->circles, res.data.region->seed_x,
                             res.data.region->seed_y)
            .passed());
  CHECK(validate_moment_data(res.data).passed());
  auto g = reeb_graph(res.data);
  CHECK(g.vertices.size() == 7);
  CHECK(g.edges.size() == 7);
  CHECK(is_isomorphic(g.as_multigraph(), res.predicted));
  CHECK(collapses_onto(g.as_multigraph(), base_graph));
}

TEST_CASE("empty allocation returns the base") {
  auto base = fixtures::annulus();
  auto res = attach_pendant_circles(base, {}, 4);
  CHECK(res.data.l1 == base.l1);
  CHECK(is_isomorphic(res.predicted, reeb_graph(base).as_multigraph()));
}

TEST_CASE("dimension guard") {
  auto base = fixtures::annulus();
  CHECK_THROWS_AS(attach_pendant_circles(base, {{0, 1}}, 3), DimensionError);
  CHECK_THROWS_AS(attach_factor_circle(base, 0, 0), DimensionError);
}

TEST_CASE("pendants on every edge of the annulus") {
  auto base = fixtures::annulus();
  auto res = attach_pendant_circles(base, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}, 4);
  auto g = reeb_graph(res.data);
  CHECK(g.vertices.size() == 4 + 12);
  CHECK(g.edges.size() == 4 + 12);
  CHECK(is_isomorphic(g.as_multigraph(), res.predicted));
  CHECK(collapses_onto(g.as_multigraph(), reeb_graph(base).as_multigraph()));
}

TEST_CASE("two pendants on one edge") {
  auto base = fixtures::annulus();
  auto res = attach_pendant_circles(base, {{1, 2}}, 4);
  auto g = reeb_graph(res.data);
  CHECK(g.vertices.size() == 10);
  CHECK(g.edges.size() == 10);
  CHECK(is_isomorphic(g.as_multigraph(), res.predicted));
}

TEST_CASE("factor circle adds three vertices and edges") {
  for (auto name : {"disk", "annulus", "two_hole"}) {
    auto base = fixtures::by_name(name);
    auto base_g = reeb_graph(base);
    auto res = attach_factor_circle(base, 0, 2);
    CHECK(res.data.l2 == base.l2 + 1);
    CHECK(res.data.dim_map.back() == 2);
    auto g = reeb_graph(res.data);
    CHECK(g.vertices.size() == base_g.vertices.size() + 3);
    CHECK(g.edges.size() == base_g.edges.size() + 3);
    CHECK(is_isomorphic(g.as_multigraph(), res.predicted));
  }
}

TEST_CASE("chord circles subdivide without leaves") {
  auto base = fixtures::annulus();
  auto base_g = reeb_graph(base);
  auto res = attach_chord_circles(base, {{0, 1}}, 4);
  auto g = reeb_graph(res.data);
  CHECK(g.vertices.size() == base_g.vertices.size() + 2);
  CHECK(g.edges.size() == base_g.edges.size() + 2);
  CHECK(is_isomorphic(g.as_multigraph(), res.predicted));
  CHECK(is_homeomorphic(g.as_multigraph(), base_g.as_multigraph()));
  int crossings = 0;
  for (auto& v : g.vertices)
    if (v.kind == ReebVertex::Kind::Crossing) crossings++;
  CHECK(crossings == 2);
}

TEST_CASE("chord factor variant") {
  auto base = fixtures::disk();
  auto res = attach_chord_factor(base, 0, 1);
  CHECK(res.data.l2 == 2);
  auto g = reeb_graph(res.data);
  CHECK(g.vertices.size() == 4);
  CHECK(g.edges.size() == 3);
  CHECK(is_isomorphic(g.as_multigraph(), res.predicted));
  CHECK(is_homeomorphic(g.as_multigraph(), MultiGraph::path(2)));
}

TEST_CASE("disk family realizes the predicted graphs") {
  for (int np = 0; np <= 2; ++np) {
    for (int j1 = 0; j1 <= np; ++j1) {
      auto res = construct_mt6(np, j1, np - j1);
      auto g = reeb_graph(res.data);
      CHECK(g.vertices.size() == (size_t)(3 * np + 2));
      CHECK(is_isomorphic(g.as_multigraph(), build_gp(np, j1, np - j1)));
      CHECK(is_isomorphic(res.predicted, build_gp(np, j1, np - j1)));
    }
  }
}

TEST_CASE("construction outputs always validate") {
  auto base = fixtures::annulus();
  auto res = attach_pendant_circles(base, {{2, 1}}, 5);
  CHECK(validate_arrangement(res.data.region->circles, res.data.region->seed_x,
                             res.data.region->seed_y)
            .passed());
  CHECK(validate_moment_data(res.data).passed());
  for (auto& dec : res.decorations) {
    int poles = 0, crossings = 0;
    for (auto& p : res.data.region->poles)
      if (p.circle == dec.host_circle && p.in_closure) poles++;
    for (auto& c : res.data.region->crossings)
      if ((c.c1 == dec.host_circle || c.c2 == dec.host_circle) && c.in_closure) crossings++;
    CHECK(poles == 1);
    CHECK(crossings == 2);
  }
}

TEST_SUITE_END();
