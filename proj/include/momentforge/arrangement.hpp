#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momentforge/poly.hpp"
#include "momentforge/quadext.hpp"

namespace momentforge {

enum class Orientation { Inside, Outside };

struct Circle {
  int id = 0;  // 1-based, unique
  Rat cx, cy, radius;
  Orientation orient = Orientation::Outside;
};

// Signed defining polynomial in variables x1, x2; positive side matches the
// orientation (Inside: positive within the disk, Outside: positive beyond).
Poly circle_poly(const Circle& c);
Rat circle_value(const Circle& c, const Rat& x, const Rat& y);
QuadExt circle_value(const Circle& c, const QuadExt& x, const QuadExt& y);

enum class PoleSide { Left, Right };

struct Pole {
  int circle = 0;
  PoleSide side = PoleSide::Left;
  Rat x, y;
  bool in_closure = false;
};

std::pair<Pole, Pole> vertical_poles(const Circle& c);

struct CrossingPoint {
  int c1 = 0, c2 = 0;  // ids, c1 < c2
  QuadExt x, y;
  bool in_closure = false;
};

enum class PairKind { Disjoint, Crossing, Tangent, Coincident };

struct PairRelation {
  PairKind kind = PairKind::Disjoint;
  std::vector<CrossingPoint> points;  // 2 crossings, or the 1 tangency point
};

PairRelation circle_relation(const Circle& a, const Circle& b);
// Throws TangencyError on tangent or coincident pairs.
std::vector<CrossingPoint> circle_intersections(const Circle& a, const Circle& b);

// One x-monotone branch of a circle.
struct Arc {
  int circle = 0;
  bool upper = false;
  bool operator==(const Arc&) const = default;
};

struct Event {
  enum class Kind { Pole, Crossing };
  Kind kind = Kind::Pole;
  QuadExt x, y;
  int c1 = 0, c2 = -1;
  PoleSide side = PoleSide::Left;
  bool touched = false;  // adjacent to the traced region
};

// Maximal interval of the positivity slice {y : all f_j(t, y) > 0}.
struct RawGap {
  bool lo_inf = false, hi_inf = false;
  Arc lo, hi;
  QuadExt lo_y, hi_y;
};

std::vector<RawGap> positive_slice(const std::vector<Circle>& circles, const Rat& t);

// One traced segment chain between two events: a Reeb-edge candidate carrying
// its bounding arcs.
struct Chain {
  Arc lo, hi;
  int start_event = -1, end_event = -1;  // indices into RegionTrace::events
  int first_slab = -1, last_slab = -1;
};

struct SlabSegment {
  bool lo_inf = false, hi_inf = false;
  Arc lo, hi;
  QuadExt lo_y, hi_y;
  bool traced = false;
  int chain = -1;
};

// Full sweep record of the seed's component: slabs between consecutive event
// abscissae, exact segment lists per slab, and the adjacency resolution.
struct RegionTrace {
  std::vector<Event> events;                    // sorted by (x, y)
  std::vector<QuadExt> boundary_x;              // distinct event x's, sorted
  std::vector<std::vector<int>> events_at;      // boundary -> event indices
  std::vector<Rat> samples;                     // slab sample abscissae
  std::vector<std::vector<SlabSegment>> slabs;  // slab -> segments by y
  std::vector<Chain> chains;
  std::vector<int> touched;  // event indices in x order
};

struct Box {
  Rat xmin, xmax, ymin, ymax;
};

struct Region {
  std::vector<Circle> circles;
  Rat seed_x, seed_y;
  std::vector<Pole> poles;               // every pole, closure flag set
  std::vector<CrossingPoint> crossings;  // every crossing, closure flag set
  int hole_count = 0;
  std::shared_ptr<const RegionTrace> trace;

  const Circle& circle_by_id(int id) const;
  std::vector<Pole> boundary_poles() const;
  std::vector<CrossingPoint> boundary_crossings() const;
  // Axis box of all circles inflated by 1; scopes sampling and rendering.
  Box bounding_box() const;
};

// Builds the region bounded by the circles that contains the seed.
// Throws TangencyError, SeedOutsideError, UnboundedRegionError,
// DegenerateEventError, ValidationError.
Region region_from_seed(std::vector<Circle> circles, const Rat& seed_x, const Rat& seed_y);

struct Stratum {
  enum class Kind { Interior, OnCircles, Outside };
  Kind kind = Kind::Outside;
  std::vector<int> circles;  // ids, nonempty iff OnCircles
};

Stratum locate_point(const Region& region, const QuadExt& x, const QuadExt& y);

struct ValidationIssue {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool passed() const { return issues.empty(); }
  bool has(const std::string& code) const;
  std::string summary() const;
};

ValidationReport validate_arrangement(const std::vector<Circle>& circles, const Rat& seed_x,
                                      const Rat& seed_y);

}  // namespace momentforge
