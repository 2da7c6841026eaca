#include "momentforge/fixtures.hpp"

#include "momentforge/errors.hpp"

namespace momentforge {
namespace fixtures {

MomentData disk() {
  Circle c{1, Rat(0), Rat(0), Rat(1), Orientation::Inside};
  return MomentData::from_region(region_from_seed({c}, Rat(0), Rat(0)), {1}, {1});
}

MomentData annulus() {
  Circle outer{1, Rat(0), Rat(0), Rat(2), Orientation::Inside};
  Circle inner{2, Rat(0), Rat(0), Rat(1), Orientation::Outside};
  return MomentData::from_region(region_from_seed({outer, inner}, Rat(3, 2), Rat(0)), {1, 1},
                                 {1});
}

MomentData two_hole() {
  Circle outer{1, Rat(0), Rat(0), Rat(3), Orientation::Inside};
  Circle hole1{2, Rat(-1), Rat(0), Rat(1, 2), Orientation::Outside};
  Circle hole2{3, Rat(3, 2), Rat(0), Rat(3, 4), Orientation::Outside};
  return MomentData::from_region(region_from_seed({outer, hole1, hole2}, Rat(0), Rat(3, 2)),
                                 {1, 1, 1}, {1});
}

MomentData crossing_pair() {
  Circle big{1, Rat(0), Rat(0), Rat(2), Orientation::Inside};
  Circle small{2, Rat(2), Rat(1, 2), Rat(1), Orientation::Outside};
  return MomentData::from_region(region_from_seed({big, small}, Rat(0), Rat(0)), {1, 2}, {1, 2});
}

MomentData disk_s2() {
  Circle c{1, Rat(0), Rat(0), Rat(1), Orientation::Inside};
  return MomentData::from_region(region_from_seed({c}, Rat(0), Rat(0)), {1}, {0});
}

std::vector<Circle> genericity_fail_circles() {
  return {{1, Rat(0), Rat(0), Rat(2), Orientation::Inside},
          {2, Rat(2), Rat(0), Rat(1), Orientation::Outside}};
}

Rat genericity_fail_seed_x() { return Rat(-1); }
Rat genericity_fail_seed_y() { return Rat(0); }

std::vector<std::string> names() {
  return {"disk", "annulus", "two_hole", "crossing_pair", "disk_s2"};
}

MomentData by_name(const std::string& name) {
  if (name == "disk") return disk();
  if (name == "annulus") return annulus();
  if (name == "two_hole") return two_hole();
  if (name == "crossing_pair") return crossing_pair();
  if (name == "disk_s2") return disk_s2();
  throw ValidationError("unknown fixture '" + name + "'");
}

}  // namespace fixtures
}  // namespace momentforge
