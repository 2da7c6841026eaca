#include <doctest.h>

#include <json.hpp>

#include "momentforge/fixtures.hpp"
#include "momentforge/io.hpp"

using namespace momentforge;

namespace {

const char* kAnnulusDoc =
    "circle 1 center 0/1 0/1 radius 2/1 orientation inside\n"
    "circle 2 center 0/1 0/1 radius 1/1 orientation outside\n"
    "seed 3/2 0/1\n"
    "groups 1 1\n"
    "dims 1\n";

}  // namespace

TEST_SUITE_BEGIN("cli_io");

TEST_CASE("parse the annulus document") {
  MomentData d = parse_input(kAnnulusDoc);
  CHECK(d.l1 == 2);
  CHECK(d.l2 == 1);
  CHECK(d.m == 3);
  CHECK(d.region->hole_count == 1);
}

TEST_CASE("serialize-parse round trip is exact") {
  for (auto name : fixtures::names()) {
    auto d = fixtures::by_name(name);
    std::string doc = serialize_input(d);
    MomentData back = parse_input(doc);
    CHECK(serialize_input(back) == doc);
  }
  // canonical document text survives a parse
  MomentData d = parse_input(kAnnulusDoc);
  CHECK(serialize_input(d) == kAnnulusDoc);
}

TEST_CASE("parse errors carry line context") {
  CHECK_THROWS_WITH_AS(parse_input("circle 1 center 0/1 0/1 radius 1/1 orientation inside\n"
                                   "seed 0/1 0/1\n"
                                   "groups 1\n"),
                       doctest::Contains("dims"), ParseError);
  CHECK_THROWS_WITH_AS(parse_input("circle 1 center 0/1 0/1 radius 1/1 orientation inside\n"
                                   "circle 1 center 2/1 0/1 radius 1/1 orientation inside\n"),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(parse_input("nothing here\n"), ParseError);
}

TEST_CASE("general document") {
  std::string doc =
      "nvars 3\n"
      "poly 1 - 1*x1^2 - 1*x2^2 - 1*x3^2\n"
      "seed 0/1 0/1 0/1\n"
      "groups 1\n"
      "dims 2\n";
  MomentData d = parse_input(doc);
  CHECK(!d.hypotheses_verified);
  CHECK(d.n == 3);
  CHECK(serialize_input(d) == doc);
}

TEST_CASE("manifest json") {
  auto d = fixtures::disk();
  auto j = nlohmann::json::parse(manifest_json(d));
  CHECK(j["n"] == 2);
  CHECK(j["l1"] == 1);
  CHECK(j["l2"] == 1);
  CHECK(j["m"] == 3);
  CHECK(j["ambient_dim"] == 4);
  CHECK(j["system"][0]["text"] == "1 - 1*x1^2 - 1*x2^2 - 1*y_1_1^2 - 1*y_1_2^2");
}

TEST_CASE("reeb json and dot") {
  auto d = fixtures::annulus();
  auto g = reeb_graph(d);
  auto j = nlohmann::json::parse(reeb_json(d, g));
  CHECK(j["vertex_count"] == 4);
  CHECK(j["edge_count"] == 4);
  CHECK(j["betti1"] == 1);
  CHECK(j["hole_count"] == 1);
  CHECK(j["vertices"][0]["x_exact"] == "-2");
  CHECK(j["vertices"][0]["x_decimal"] == "-2.000000000000");
  CHECK(j["vertices"][0]["kind"] == "pole_extremum");
  std::string dot = reeb_dot(g);
  CHECK(dot ==
        "reeb {\n"
        "  v0 [x=\"-2.000000000000\" kind=pole_extremum]\n"
        "  v1 [x=\"-1.000000000000\" kind=pole_branch]\n"
        "  v2 [x=\"1.000000000000\" kind=pole_branch]\n"
        "  v3 [x=\"2.000000000000\" kind=pole_extremum]\n"
        "  v0 -- v1 [fiber=\"2\"]\n"
        "  v1 -- v2 [fiber=\"2\"]\n"
        "  v1 -- v2 [fiber=\"2\"]\n"
        "  v2 -- v3 [fiber=\"2\"]\n"
        "}\n");
}

TEST_CASE("svg output is deterministic and structured") {
  auto d = fixtures::annulus();
  auto g = reeb_graph(d);
  std::string svg1 = render_svg(d, &g);
  std::string svg2 = render_svg(d, &g);
  CHECK(svg1 == svg2);
  CHECK(svg1.find("<svg") == 0);
  CHECK(svg1.find("fill-rule=\"evenodd\"") != std::string::npos);
  // 4 boundary dots + 4 graph vertex dots + 2 circle strokes
  size_t dots = 0;
  for (size_t pos = svg1.find("fill=\"black\""); pos != std::string::npos;
       pos = svg1.find("fill=\"black\"", pos + 1))
    dots++;
  CHECK(dots == 8);
  std::string bare = render_svg(d, nullptr);
  CHECK(bare.find("<svg") == 0);
}

TEST_CASE("fiber table") {
  auto cp = fixtures::crossing_pair();
  auto j = nlohmann::json::parse(fiber_table_json(cp));
  CHECK(j["bound"] == 3);
  REQUIRE(j["strata"].size() >= 5);
  CHECK(j["strata"][0]["fiber"] == nlohmann::json::array({1, 2}));
  std::string text = fiber_table_text(cp);
  CHECK(text.find("interior: S^1 x S^2") != std::string::npos);
  CHECK(text.find("point") != std::string::npos);
}

TEST_SUITE_END();
