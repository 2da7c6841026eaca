#include <doctest.h>

#include <cmath>
#include <deque>
#include <random>

#include "momentforge/arrangement.hpp"
#include "momentforge/fixtures.hpp"

using namespace momentforge;

namespace {

// independent hole-count oracle: flood fill on a fine float grid
int grid_hole_count(const std::vector<Circle>& circles, double sx, double sy, int res) {
  Box box{circles[0].cx, circles[0].cx, circles[0].cy, circles[0].cy};
  for (auto& c : circles) {
    box.xmin = std::min(box.xmin, c.cx - c.radius);
    box.xmax = std::max(box.xmax, c.cx + c.radius);
    box.ymin = std::min(box.ymin, c.cy - c.radius);
    box.ymax = std::max(box.ymax, c.cy + c.radius);
  }
  double x0 = box.xmin.to_double() - 0.5, x1 = box.xmax.to_double() + 0.5;
  double y0 = box.ymin.to_double() - 0.5, y1 = box.ymax.to_double() + 0.5;
  auto inside = [&](int i, int j) {
    double x = x0 + (x1 - x0) * (i + 0.5) / res;
    double y = y0 + (y1 - y0) * (j + 0.5) / res;
    for (auto& c : circles) {
      double v = (x - c.cx.to_double()) * (x - c.cx.to_double()) +
                 (y - c.cy.to_double()) * (y - c.cy.to_double()) -
                 c.radius.to_double() * c.radius.to_double();
      if (c.orient == Orientation::Inside) v = -v;
      if (v <= 0) return false;
    }
    return true;
  };
  std::vector<int> label(res * res, 0);  // 0 unknown, 1 region, 2 other
  auto flood = [&](int si, int sj, bool region_cells, int mark) {
    std::deque<std::pair<int, int>> q{{si, sj}};
    label[si * res + sj] = mark;
    while (!q.empty()) {
      auto [i, j] = q.front();
      q.pop_front();
      const int di[] = {1, -1, 0, 0}, dj[] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        int ni = i + di[k], nj = j + dj[k];
        if (ni < 0 || nj < 0 || ni >= res || nj >= res) continue;
        if (label[ni * res + nj]) continue;
        if (inside(ni, nj) != region_cells) continue;
        label[ni * res + nj] = mark;
        q.push_back({ni, nj});
      }
    }
  };
  int si = (int)((sx - x0) / (x1 - x0) * res), sj = (int)((sy - y0) / (y1 - y0) * res);
  REQUIRE(inside(si, sj));
  flood(si, sj, true, 1);
  flood(0, 0, false, 2);  // unbounded complement
  int holes = 0;
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      if (label[i * res + j] || inside(i, j)) continue;
      std::deque<std::pair<int, int>> q{{i, j}};
      label[i * res + j] = 2;
      bool touches = false;
      while (!q.empty()) {
        auto [a, b] = q.front();
        q.pop_front();
        const int di[] = {1, -1, 0, 0}, dj[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
          int na = a + di[k], nb = b + dj[k];
          if (na < 0 || nb < 0 || na >= res || nb >= res) continue;
          if (label[na * res + nb] == 1) touches = true;
          if (label[na * res + nb] || inside(na, nb)) continue;
          label[na * res + nb] = 2;
          q.push_back({na, nb});
        }
      }
      if (touches) holes++;
    }
  }
  return holes;
}

}  // namespace

TEST_SUITE_BEGIN("arrangement");

TEST_CASE("vertical poles") {
  Circle c{1, Rat(0), Rat(0), Rat(1), Orientation::Inside};
  auto [l, r] = vertical_poles(c);
  CHECK(l.x == Rat(-1));
  CHECK(r.x == Rat(1));
  Circle c2{2, Rat(2), Rat(0), Rat(1, 2), Orientation::Outside};
  auto [l2, r2] = vertical_poles(c2);
  CHECK(l2.x == Rat(3, 2));
  CHECK(r2.x == Rat(5, 2));
  Circle c3{3, Rat(-1), Rat(3), Rat(2), Orientation::Outside};
  auto [l3, r3] = vertical_poles(c3);
  CHECK(l3.x == Rat(-3));
  CHECK(r3.x == Rat(1));
  CHECK(l3.y == Rat(3));
}

TEST_CASE("circle intersections") {
  Circle a{1, Rat(0), Rat(0), Rat(2), Orientation::Inside};
  Circle b{2, Rat(2), Rat(0), Rat(1), Orientation::Outside};
  auto pts = circle_intersections(a, b);
  REQUIRE(pts.size() == 2);
  for (auto& p : pts) {
    CHECK(quad_eq(p.x, QuadExt(Rat(7, 4))));
    CHECK(p.y.d() == 15);
    CHECK(circle_value(a, p.x, p.y).sign() == 0);
    CHECK(circle_value(b, p.x, p.y).sign() == 0);
  }

  Circle far{3, Rat(3), Rat(0), Rat(1), Orientation::Outside};
  Circle unit{4, Rat(0), Rat(0), Rat(1), Orientation::Inside};
  CHECK(circle_intersections(unit, far).empty());

  Circle tangent{5, Rat(2), Rat(0), Rat(1), Orientation::Outside};
  CHECK_THROWS_AS(circle_intersections(unit, tangent), TangencyError);

  Circle s1{6, Rat(0), Rat(0), Rat(2), Orientation::Inside};
  Circle s2{7, Rat(2), Rat(1), Rat(1), Orientation::Outside};
  auto spts = circle_intersections(s1, s2);
  REQUIRE(spts.size() == 2);
  for (auto& p : spts) {
    CHECK(circle_value(s1, p.x, p.y).sign() == 0);
    CHECK(circle_value(s2, p.x, p.y).sign() == 0);
  }
}

TEST_CASE("region: disk") {
  auto d = fixtures::disk();
  const Region& r = *d.region;
  CHECK(r.hole_count == 0);
  CHECK(r.boundary_poles().size() == 2);
  CHECK(r.boundary_crossings().empty());
  CHECK(r.trace->chains.size() == 1);
}

TEST_CASE("region: annulus") {
  auto d = fixtures::annulus();
  const Region& r = *d.region;
  CHECK(r.hole_count == 1);
  CHECK(r.boundary_poles().size() == 4);
  CHECK(r.trace->chains.size() == 4);
  CHECK(grid_hole_count(r.circles, 1.5, 0.0, 220) == 1);
}

TEST_CASE("region: two holes") {
  auto d = fixtures::two_hole();
  CHECK(d.region->hole_count == 2);
  CHECK(grid_hole_count(d.region->circles, 0.0, 1.5, 260) == 2);
}

TEST_CASE("region: crossing pair keeps only closure events") {
  auto d = fixtures::crossing_pair();
  const Region& r = *d.region;
  CHECK(r.hole_count == 0);
  auto poles = r.boundary_poles();
  REQUIRE(poles.size() == 2);
  CHECK(poles[0].x == Rat(-2));
  CHECK(poles[1].x == Rat(1));
  CHECK(r.boundary_crossings().size() == 2);
  for (auto& p : r.poles)
    if (p.circle == 1 && p.side == PoleSide::Right) CHECK(!p.in_closure);
}

TEST_CASE("locate_point strata") {
  auto d = fixtures::annulus();
  const Region& r = *d.region;
  auto interior = locate_point(r, QuadExt(Rat(3, 2)), QuadExt(Rat(0)));
  CHECK(interior.kind == Stratum::Kind::Interior);
  auto on_inner = locate_point(r, QuadExt(Rat(1)), QuadExt(Rat(0)));
  REQUIRE(on_inner.kind == Stratum::Kind::OnCircles);
  CHECK(on_inner.circles == std::vector<int>{2});
  auto in_hole = locate_point(r, QuadExt(Rat(0)), QuadExt(Rat(0)));
  CHECK(in_hole.kind == Stratum::Kind::Outside);
}

TEST_CASE("seed errors") {
  auto circles = fixtures::annulus().region->circles;
  CHECK_THROWS_AS(region_from_seed(circles, Rat(0), Rat(0)), SeedOutsideError);
  CHECK_THROWS_AS(region_from_seed(circles, Rat(5), Rat(5)), SeedOutsideError);
  Circle c{1, Rat(0), Rat(0), Rat(1), Orientation::Outside};
  CHECK_THROWS_AS(region_from_seed({c}, Rat(3), Rat(0)), UnboundedRegionError);
}

TEST_CASE("validate: annulus passes") {
  auto d = fixtures::annulus();
  auto rep = validate_arrangement(d.region->circles, Rat(3, 2), Rat(0));
  CHECK(rep.passed());
}

TEST_CASE("validate: triple point") {
  std::vector<Circle> circles{{1, Rat(0), Rat(0), Rat(1), Orientation::Outside},
                              {2, Rat(2), Rat(0), Rat(1), Orientation::Outside},
                              {3, Rat(1), Rat(1), Rat(1), Orientation::Outside}};
  auto rep = validate_arrangement(circles, Rat(5), Rat(5));
  CHECK(!rep.passed());
  CHECK(rep.has("triple_point"));
}

TEST_CASE("validate: genericity failure at shared crossing abscissa") {
  auto circles = fixtures::genericity_fail_circles();
  auto rep = validate_arrangement(circles, fixtures::genericity_fail_seed_x(),
                                  fixtures::genericity_fail_seed_y());
  CHECK(!rep.passed());
  CHECK(rep.has("genericity"));
  Circle a{1, Rat(0), Rat(0), Rat(2), Orientation::Inside};
  Circle b{2, Rat(3), Rat(0), Rat(2), Orientation::Outside};
  auto rep2 = validate_arrangement({a, b}, Rat(-1), Rat(0));
  CHECK(rep2.has("genericity"));
}

TEST_CASE("validate: pole on another circle") {
  Circle a{1, Rat(0), Rat(0), Rat(1), Orientation::Inside};
  Circle b{2, Rat(1), Rat(1), Rat(1), Orientation::Outside};
  auto rep = validate_arrangement({a, b}, Rat(-1, 4), Rat(0));
  CHECK(!rep.passed());
  CHECK((rep.has("pole_on_circle") || rep.has("degenerate_event")));
}

TEST_CASE("boundary crossings satisfy exact incidence") {
  auto d = fixtures::crossing_pair();
  const Region& r = *d.region;
  for (auto& cr : r.crossings) {
    int zero_count = 0;
    for (auto& c : r.circles)
      if (circle_value(c, cr.x, cr.y).sign() == 0) zero_count++;
    CHECK(zero_count == 2);
  }
}

TEST_CASE("in_closure flags agree with floating probes") {
  auto d = fixtures::crossing_pair();
  const Region& r = *d.region;
  for (auto& p : r.poles) {
    double px = p.x.to_double(), py = p.y.to_double();
    bool near = false;
    for (int k = 0; k < 256 && !near; ++k) {
      double ang = 2 * M_PI * k / 256;
      double qx = px + 1e-6 * std::cos(ang), qy = py + 1e-6 * std::sin(ang);
      bool inside = true;
      for (auto& c : r.circles) {
        double v = (qx - c.cx.to_double()) * (qx - c.cx.to_double()) +
                   (qy - c.cy.to_double()) * (qy - c.cy.to_double()) -
                   c.radius.to_double() * c.radius.to_double();
        if (c.orient == Orientation::Inside) v = -v;
        if (v <= 1e-13) inside = false;
      }
      near = near || inside;
    }
    CHECK(p.in_closure == near);
  }
}

TEST_SUITE_END();
