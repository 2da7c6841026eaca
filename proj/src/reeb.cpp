#include "momentforge/reeb.hpp"

#include <algorithm>
#include <map>

#include "momentforge/errors.hpp"

namespace momentforge {

MultiGraph ReebGraph::as_multigraph() const {
  MultiGraph g;
  g.n = (int)vertices.size();
  for (auto& e : edges) g.add_edge(e.u, e.v);
  return g;
}

namespace {

const RegionTrace& trace_of(const MomentData& d) {
  if (!d.region) throw ValidationError("the Reeb sweep needs exact circle data");
  return *d.region->trace;
}

void check_genericity(const RegionTrace& tr) {
  for (size_t b = 0; b < tr.boundary_x.size(); ++b) {
    int count = 0;
    for (int e : tr.events_at[b])
      if (tr.events[e].touched) count++;
    if (count > 1)
      throw GenericityError("two boundary events share the abscissa x=" +
                            tr.boundary_x[b].str() + " (" + tr.boundary_x[b].decimal(6) + ")");
  }
}

}  // namespace

std::vector<QuadExt> singular_x_values(const MomentData& d) {
  const RegionTrace& tr = trace_of(d);
  check_genericity(tr);
  std::vector<QuadExt> out;
  for (int e : tr.touched) out.push_back(tr.events[e].x);
  return out;  // already sorted by construction
}

FiberClass segment_fiber_class(const MomentData& d, int lower_circle, int upper_circle) {
  int g1 = d.group_map.at(lower_circle - 1);
  int g2 = d.group_map.at(upper_circle - 1);
  FiberClass fc;
  if (g1 == g2) {
    fc.sphere_dims.push_back(d.dim_map[g1 - 1] + 1);
    for (int i = 1; i <= d.l2; ++i)
      if (i != g1) fc.sphere_dims.push_back(d.dim_map[i - 1]);
  } else {
    fc.sphere_dims.push_back(d.dim_map[g1 - 1] + d.dim_map[g2 - 1] + 1);
    for (int i = 1; i <= d.l2; ++i)
      if (i != g1 && i != g2) fc.sphere_dims.push_back(d.dim_map[i - 1]);
  }
  return fc;
}

ReebGraph reeb_graph(const MomentData& d) {
  for (int i = 1; i <= d.l2; ++i) {
    if (d.dim_map[i - 1] == 0)
      throw DisconnectedFiberError(
          "group " + std::to_string(i) +
          " has sphere dimension 0, so generic fibers contain S^0 factors and level-set "
          "components split; the sweep requires every group dimension to be at least 1");
  }
  const RegionTrace& tr = trace_of(d);
  check_genericity(tr);

  ReebGraph g;
  std::map<int, int> vertex_of_event;
  for (int e : tr.touched) {
    const Event& ev = tr.events[e];
    ReebVertex v;
    v.id = (int)g.vertices.size();
    v.x = ev.x;
    v.event_index = e;
    if (ev.kind == Event::Kind::Crossing) {
      v.kind = ReebVertex::Kind::Crossing;
    } else {
      const Circle& c = d.region->circle_by_id(ev.c1);
      v.kind = c.orient == Orientation::Inside ? ReebVertex::Kind::PoleExtremum
                                               : ReebVertex::Kind::PoleBranch;
    }
    vertex_of_event[e] = v.id;
    g.vertices.push_back(std::move(v));
  }
  for (auto& ch : tr.chains) {
    ReebEdge e;
    e.id = (int)g.edges.size();
    e.u = vertex_of_event.at(ch.start_event);
    e.v = vertex_of_event.at(ch.end_event);
    e.lower = ch.lo;
    e.upper = ch.hi;
    e.fiber = segment_fiber_class(d, ch.lo.circle, ch.hi.circle);
    g.edges.push_back(std::move(e));
  }
  return g;
}

const char* reeb_kind_name(ReebVertex::Kind k) {
  switch (k) {
    case ReebVertex::Kind::PoleExtremum:
      return "pole_extremum";
    case ReebVertex::Kind::PoleBranch:
      return "pole_branch";
    case ReebVertex::Kind::Crossing:
      return "crossing";
  }
  return "?";
}

}  // namespace momentforge
