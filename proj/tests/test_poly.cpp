#include <doctest.h>

#include <random>

#include "momentforge/arrangement.hpp"
#include "momentforge/poly.hpp"

using namespace momentforge;

namespace {

const std::vector<std::string> kXY{"x1", "x2"};

Poly unit_circle() {
  return Poly::parse("1 - 1*x1^2 - 1*x2^2", kXY);
}

Poly random_poly(std::mt19937_64& rng, int terms) {
  Poly p(kXY);
  std::uniform_int_distribution<int> e(0, 3);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int t = 0; t < terms; ++t) p.add_term({e(rng), e(rng)}, Rat(c(rng), 1 + (long)e(rng)));
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("polynomials");

TEST_CASE("canonical text ordering") {
  Poly p(kXY);
  p.add_term({2, 0}, Rat(-1));
  p.add_term({0, 0}, Rat(1));
  p.add_term({0, 2}, Rat(-1));
  CHECK(p.str() == "1 - 1*x1^2 - 1*x2^2");
  Poly q(kXY);
  q.add_term({1, 0}, Rat(-4));
  q.add_term({0, 0}, Rat(15, 4));
  q.add_term({0, 2}, Rat(1));
  q.add_term({2, 0}, Rat(1));
  CHECK(q.str() == "15/4 - 4*x1 + 1*x1^2 + 1*x2^2");
  CHECK(Poly(kXY).str() == "0");
}

TEST_CASE("evaluation at exact points") {
  Poly p = unit_circle();
  CHECK(p.eval(std::vector<QuadExt>{QuadExt(Rat(1)), QuadExt(Rat(0))}).sign() == 0);
  CHECK(p.eval(std::vector<Rat>{Rat(1, 2), Rat(1, 2)}) == Rat(1, 2));
  // exact zero at (7/4, sqrt(15)/4) on the radius-2 circle
  Poly big = Poly::parse("4 - 1*x1^2 - 1*x2^2", kXY);
  QuadExt y(Rat(0), Rat(1, 4), 15);
  CHECK(big.eval(std::vector<QuadExt>{QuadExt(Rat(7, 4)), y}).sign() == 0);
  CHECK_THROWS_AS(p.eval(std::vector<QuadExt>{QuadExt(Rat(0), Rat(1), 2),
                                              QuadExt(Rat(0), Rat(1), 3)}),
                  MixedFieldError);
}

TEST_CASE("gradient") {
  Poly p = unit_circle();
  auto g = p.grad();
  CHECK(g[0].str() == "-2*x1");
  CHECK(g[1].str() == "-2*x2");
  Poly c = Poly::constant(kXY, Rat(5));
  for (auto& d : c.grad()) CHECK(d.is_zero());
  Poly xy = Poly::parse("1*x1*x2", kXY);
  CHECK(xy.grad()[0].str() == "1*x2");
  CHECK(xy.grad()[1].str() == "1*x1");
}

TEST_CASE("gradient matches central differences") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> pt(-2.0, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    Poly p = random_poly(rng, 6);
    auto g = p.grad();
    double x = pt(rng), y = pt(rng);
    const double h = 1e-5;
    double dx = (p.eval(std::vector<double>{x + h, y}) - p.eval(std::vector<double>{x - h, y})) /
                (2 * h);
    double dy = (p.eval(std::vector<double>{x, y + h}) - p.eval(std::vector<double>{x, y - h})) /
                (2 * h);
    double gx = g[0].eval(std::vector<double>{x, y});
    double gy = g[1].eval(std::vector<double>{x, y});
    CHECK(std::abs(dx - gx) <= 1e-6 * (1 + std::abs(gx)));
    CHECK(std::abs(dy - gy) <= 1e-6 * (1 + std::abs(gy)));
  }
}

TEST_CASE("product and sum distribute under evaluation") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long> num(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    Poly p = random_poly(rng, 4), q = random_poly(rng, 4);
    std::vector<Rat> at{Rat(num(rng), 3), Rat(num(rng), 2)};
    CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
    CHECK((p + q).eval(at) == p.eval(at) + q.eval(at));
    CHECK((p - q).eval(at) == p.eval(at) - q.eval(at));
  }
}

TEST_CASE("parse round trip on canonical forms") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    Poly p = random_poly(rng, 5);
    CHECK(Poly::parse(p.str(), kXY).str() == p.str());
  }
  CHECK_THROWS_AS(Poly::parse("1 + 1*z^2", kXY), ParseError);
}

TEST_CASE("circle polynomials") {
  Circle inside{1, Rat(0), Rat(0), Rat(1), Orientation::Inside};
  CHECK(circle_poly(inside).str() == "1 - 1*x1^2 - 1*x2^2");
  Circle outside{2, Rat(0), Rat(0), Rat(1), Orientation::Outside};
  CHECK(circle_poly(outside).str() == "-1 + 1*x1^2 + 1*x2^2");
  Circle shifted{3, Rat(2), Rat(0), Rat(1, 2), Orientation::Outside};
  CHECK(circle_poly(shifted).str() == "15/4 - 4*x1 + 1*x1^2 + 1*x2^2");
}

TEST_SUITE_END();
