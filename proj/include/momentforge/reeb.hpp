#pragma once

#include <vector>

#include "momentforge/graph_ops.hpp"
#include "momentforge/moment_map.hpp"

namespace momentforge {

struct ReebVertex {
  enum class Kind { PoleExtremum, PoleBranch, Crossing };
  int id = 0;
  QuadExt x;
  Kind kind = Kind::PoleExtremum;
  int event_index = -1;  // into the region trace's event list
};

struct ReebEdge {
  int id = 0;
  int u = 0, v = 0;  // vertex ids, u at the smaller abscissa
  FiberClass fiber;
  Arc lower, upper;  // bounding arcs of the swept segment
};

struct ReebGraph {
  std::vector<ReebVertex> vertices;  // sorted by x
  std::vector<ReebEdge> edges;
  MultiGraph as_multigraph() const;
};

// Abscissae of all boundary poles and crossings, strictly sorted.
// Throws GenericityError when two such events share an abscissa.
std::vector<QuadExt> singular_x_values(const MomentData& d);

// Fiber over a segment bounded from below and above by the given circles.
FiberClass segment_fiber_class(const MomentData& d, int lower_circle, int upper_circle);

// Exact sweep. Throws DisconnectedFiberError when some group has sphere
// dimension 0, GenericityError on coinciding event abscissae.
ReebGraph reeb_graph(const MomentData& d);

const char* reeb_kind_name(ReebVertex::Kind k);

}  // namespace momentforge
