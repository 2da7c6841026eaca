#pragma once

#include <string>
#include <vector>

#include "momentforge/moment_map.hpp"

namespace momentforge {
namespace fixtures {

// Unit disk, one group of dimension 1 (the 3-sphere projection).
MomentData disk();
// Concentric radii 2 and 1, one group of dimension 1.
MomentData annulus();
// Radius-3 disk with two round holes, one group of dimension 1.
MomentData two_hole();
// Two crossing circles in distinct groups of dimensions 1 and 2.
MomentData crossing_pair();
// Unit disk with group dimension 0: every operation except the Reeb sweep.
MomentData disk_s2();
// Circles whose two crossings share an abscissa; the canonical sweep
// genericity regression. Returns the raw circles and seed.
std::vector<Circle> genericity_fail_circles();
Rat genericity_fail_seed_x();
Rat genericity_fail_seed_y();

std::vector<std::string> names();
MomentData by_name(const std::string& name);

}  // namespace fixtures
}  // namespace momentforge
