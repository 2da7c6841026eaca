#include "momentforge/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "momentforge/errors.hpp"

namespace momentforge {

namespace {

std::pair<Rat, Rat> circle_param(const Circle& c, const Rat& t) {
  Rat denom = Rat(1) + t.squared();
  Rat x = c.cx + c.radius * (Rat(1) - t.squared()) / denom;
  Rat y = c.cy + Rat(2) * c.radius * t / denom;
  return {x, y};
}

// Dyadic rational near lo + frac*(hi - lo), verified strictly inside.
Rat rational_in(const QuadExt& lo, const QuadExt& hi, double frac) {
  double dl = lo.to_double(), dh = hi.to_double();
  double target = dl + frac * (dh - dl);
  double scale = std::ldexp(1.0, 40);
  Rat cand(mpz_class((long)std::llround(target * scale)), mpz_class(mpz_class(1) << 40));
  QuadExt c{cand};
  if (quad_cmp(lo, c) < 0 && quad_cmp(c, hi) < 0) return cand;
  return rational_between(lo, hi);
}

// Parameter magnitude u > 0 whose point abscissa lands strictly inside
// (xlo, xhi); x is monotone decreasing in u along either branch.
Rat param_magnitude_for_window(const Circle& c, const QuadExt& xlo, const QuadExt& xhi) {
  auto x_of = [&](const Rat& u) {
    Rat denom = Rat(1) + u.squared();
    return c.cx + c.radius * (Rat(1) - u.squared()) / denom;
  };
  auto in_window = [&](const Rat& u) {
    QuadExt x{x_of(u)};
    return quad_cmp(x, xhi) < 0 && quad_cmp(xlo, x) < 0;
  };
  Rat ua(0);  // x(0) = cx + r, right pole: above every admissible window
  Rat ub(1);
  while (quad_cmp(QuadExt(x_of(ub)), xlo) >= 0) ub *= Rat(2);
  for (int iter = 0; iter < 512; ++iter) {
    Rat mid = (ua + ub) / Rat(2);
    QuadExt x{x_of(mid)};
    if (quad_cmp(x, xhi) >= 0) {
      ua = mid;
    } else if (quad_cmp(xlo, x) >= 0) {
      ub = mid;
    } else if (mid != Rat(1)) {
      return mid;
    } else {
      // the midpoint is the horizontal pole; x_of is continuous and strictly
      // monotone, so some nearby parameter still lands in the open window
      Rat step = (ub - ua) / Rat(8);
      for (int k = 0; k < 256; ++k, step = step / Rat(2)) {
        if (in_window(mid + step)) return mid + step;
        if (in_window(mid - step)) return mid - step;
      }
      throw PlacementFailure("could not sidestep the horizontal pole parameter");
    }
  }
  throw PlacementFailure("could not land a rational parameter inside the target window");
}

struct PendantSpec {
  int edge = 0;
  QuadExt window_lo, window_hi;
};

struct Placement {
  Circle circle;
  int edge = 0;
  Rat anchor_x;
  bool pole_left = false;  // side of the vertical pole that stays in the closure
};

const ReebEdge& edge_by_id(const ReebGraph& g, int id) {
  for (auto& e : g.edges)
    if (e.id == id) return e;
  throw UnknownEdgeError("base Reeb graph has no edge " + std::to_string(id));
}

// Events contributed by one added circle, for cluster-separation checks.
struct Cluster {
  QuadExt min_x, max_x;
};

Cluster cluster_of(const Region& region, int circle_id) {
  std::vector<QuadExt> xs;
  for (auto& p : region.poles)
    if (p.circle == circle_id && p.in_closure) xs.push_back(QuadExt(p.x));
  for (auto& c : region.crossings)
    if ((c.c1 == circle_id || c.c2 == circle_id) && c.in_closure) xs.push_back(c.x);
  if (xs.empty()) throw PlacementFailure("added circle contributes no boundary events");
  auto mm = std::minmax_element(xs.begin(), xs.end(),
                                [](const QuadExt& a, const QuadExt& b) { return quad_lt(a, b); });
  return {*mm.first, *mm.second};
}

struct AttachOutcome {
  Region region;
  std::vector<Placement> placements;  // sorted by (edge, anchor x)
};

// Shared placement loop for pendant circles: center on the host arc, radius
// shrunk until every exact check passes.
AttachOutcome place_pendants(const MomentData& base, const ReebGraph& base_reeb,
                             const std::vector<PendantSpec>& specs) {
  const Region& base_region = *base.region;
  for (int attempt = 3; attempt <= 26; ++attempt) {
    std::vector<Circle> circles = base_region.circles;
    std::vector<Placement> placements;
    bool ok = true;
    for (auto& spec : specs) {
      const ReebEdge& edge = edge_by_id(base_reeb, spec.edge);
      const Circle& host = base_region.circle_by_id(edge.upper.circle);
      Rat u = param_magnitude_for_window(host, spec.window_lo, spec.window_hi);
      Rat t = edge.upper.upper ? u : -u;
      auto [ax, ay] = circle_param(host, t);
      Rat rho = host.radius / Rat(2).pow((unsigned)attempt);
      Circle pendant{(int)circles.size() + 1, ax, ay, rho, Orientation::Outside};
      // exactly one vertical pole may sit inside the old region
      auto inside_old = [&](const Rat& px, const Rat& py) {
        for (auto& c : base_region.circles)
          if (circle_value(c, px, py).sign() <= 0) return false;
        return true;
      };
      bool left_in = inside_old(ax - rho, ay);
      bool right_in = inside_old(ax + rho, ay);
      if (left_in == right_in) {
        ok = false;
        break;
      }
      placements.push_back({pendant, spec.edge, ax, left_in});
      circles.push_back(pendant);
    }
    if (!ok) continue;

    try {
      Region region = region_from_seed(circles, base_region.seed_x, base_region.seed_y);
      if (!validate_arrangement(circles, base_region.seed_x, base_region.seed_y).passed())
        continue;
      bool structure_ok = true;
      std::vector<Cluster> clusters;
      for (auto& pl : placements) {
        int id = pl.circle.id;
        int crossings = 0, poles_in = 0;
        for (auto& cr : region.crossings) {
          if (cr.c1 != id && cr.c2 != id) continue;
          int other = cr.c1 == id ? cr.c2 : cr.c1;
          const ReebEdge& edge = edge_by_id(base_reeb, pl.edge);
          if (other != edge.upper.circle || !cr.in_closure) {
            structure_ok = false;
            break;
          }
          crossings++;
        }
        for (auto& p : region.poles)
          if (p.circle == id && p.in_closure) poles_in++;
        if (crossings != 2 || poles_in != 1) structure_ok = false;
        if (!structure_ok) break;
        clusters.push_back(cluster_of(region, id));
      }
      if (!structure_ok) continue;
      // clusters must not interleave, and must stay inside their host edge span
      for (size_t i = 0; i < clusters.size(); ++i) {
        const ReebEdge& edge = edge_by_id(base_reeb, placements[i].edge);
        const QuadExt& span_lo = base_reeb.vertices[edge.u].x;
        const QuadExt& span_hi = base_reeb.vertices[edge.v].x;
        if (quad_cmp(span_lo, clusters[i].min_x) >= 0 ||
            quad_cmp(clusters[i].max_x, span_hi) >= 0)
          structure_ok = false;
        for (size_t j = i + 1; j < clusters.size(); ++j) {
          bool i_before_j = quad_cmp(clusters[i].max_x, clusters[j].min_x) < 0;
          bool j_before_i = quad_cmp(clusters[j].max_x, clusters[i].min_x) < 0;
          if (!i_before_j && !j_before_i) structure_ok = false;
        }
      }
      if (!structure_ok) continue;
      std::sort(placements.begin(), placements.end(), [](const Placement& a, const Placement& b) {
        if (a.edge != b.edge) return a.edge < b.edge;
        return a.anchor_x < b.anchor_x;
      });
      return {std::move(region), std::move(placements)};
    } catch (const Error&) {
      continue;
    }
  }
  throw PlacementFailure("no pendant radius schedule satisfied every exact check");
}

std::vector<GraphDecoration> pendant_decorations(const std::vector<Placement>& placements) {
  std::vector<GraphDecoration> out;
  for (auto& pl : placements) {
    GraphDecoration d;
    d.edge = pl.edge;
    d.kind = GraphDecoration::Kind::Pendant;
    // a left in-closure pole sweeps before its crossings, so the leaf hangs
    // off the first of the two new chain vertices
    d.attach_first = pl.pole_left;
    out.push_back(d);
  }
  return out;
}

void require_valid_base(const MomentData& base) {
  if (!base.region) throw ValidationError("constructions need exact circle data");
  if (!validate_arrangement(base.region->circles, base.region->seed_x, base.region->seed_y)
           .passed() ||
      !validate_moment_data(base).passed())
    throw ValidationError("base data does not satisfy the arrangement hypotheses");
}

void require_disjoint_single_group(const MomentData& base) {
  if (base.l2 != 1)
    throw ValidationError("this construction needs a base with exactly one group");
  if (!base.region->crossings.empty())
    throw ValidationError("this construction needs mutually disjoint base circles");
}

std::vector<PendantSpec> specs_from_alloc(const ReebGraph& base_reeb,
                                          const std::map<int, int>& alloc) {
  std::vector<PendantSpec> specs;
  for (auto& [edge_id, count] : alloc) {
    if (count < 0) throw ValidationError("negative circle count in the allocation");
    const ReebEdge& edge = edge_by_id(base_reeb, edge_id);
    const QuadExt& lo = base_reeb.vertices[edge.u].x;
    const QuadExt& hi = base_reeb.vertices[edge.v].x;
    for (int i = 0; i < count; ++i) {
      PendantSpec s;
      s.edge = edge_id;
      s.window_lo = QuadExt(rational_in(lo, hi, (4.0 * i + 1) / (4.0 * count)));
      s.window_hi = QuadExt(rational_in(lo, hi, (4.0 * i + 3) / (4.0 * count)));
      specs.push_back(std::move(s));
    }
  }
  return specs;
}

}  // namespace

ConstructionResult attach_pendant_circles(const MomentData& base,
                                          const std::map<int, int>& alloc, int total_dim) {
  require_valid_base(base);
  require_disjoint_single_group(base);
  int m1 = base.dim_map[0];
  if (total_dim <= m1 + 2)
    throw DimensionError("total dimension must exceed dim(1) + 2 = " + std::to_string(m1 + 2));
  ReebGraph base_reeb = reeb_graph(base);
  auto specs = specs_from_alloc(base_reeb, alloc);

  ConstructionResult result;
  if (specs.empty()) {
    result.data = base;
    result.predicted = base_reeb.as_multigraph();
    return result;
  }
  AttachOutcome outcome = place_pendants(base, base_reeb, specs);
  std::vector<int> groups(base.l1, 1);
  groups.resize(outcome.region.circles.size(), 2);
  std::vector<int> dims{m1, total_dim - m1 - 2};
  result.data = MomentData::from_region(std::move(outcome.region), groups, dims);
  result.predicted =
      predict_decorated(base_reeb.as_multigraph(), pendant_decorations(outcome.placements));
  for (auto& pl : outcome.placements)
    result.decorations.push_back({pl.circle.id, pl.edge, Decoration::Kind::Pendant, 1, {}});
  return result;
}

ConstructionResult attach_factor_circle(const MomentData& base, int edge, int new_dim) {
  require_valid_base(base);
  if (new_dim < 1) throw DimensionError("the new group dimension must be positive");
  for (int d : base.dim_map)
    if (d < 1) throw ValidationError("every base group dimension must be positive");
  ReebGraph base_reeb = reeb_graph(base);
  const ReebEdge& e = edge_by_id(base_reeb, edge);
  PendantSpec spec;
  spec.edge = edge;
  const QuadExt& lo = base_reeb.vertices[e.u].x;
  const QuadExt& hi = base_reeb.vertices[e.v].x;
  spec.window_lo = QuadExt(rational_in(lo, hi, 0.375));
  spec.window_hi = QuadExt(rational_in(lo, hi, 0.625));
  AttachOutcome outcome = place_pendants(base, base_reeb, {spec});

  std::vector<int> groups = base.group_map;
  groups.push_back(base.l2 + 1);
  std::vector<int> dims = base.dim_map;
  dims.push_back(new_dim);
  ConstructionResult result;
  result.data = MomentData::from_region(std::move(outcome.region), groups, dims);
  result.predicted =
      predict_decorated(base_reeb.as_multigraph(), pendant_decorations(outcome.placements));
  result.decorations.push_back(
      {outcome.placements[0].circle.id, edge, Decoration::Kind::Pendant, 1, new_dim});
  return result;
}

namespace {

// Chord circles sit on the radial ray through a rational anchor point of the
// host arc, on the far side of the region, with radius just over the gap to
// the host. Center, radius, and both vertical poles stay rational, and the
// two crossings land symmetrically about the near-vertical radial line, so
// the short arc facing the region carries no vertical pole.
AttachOutcome place_chords(const MomentData& base, const ReebGraph& base_reeb,
                           const std::vector<PendantSpec>& specs) {
  const Region& base_region = *base.region;
  for (int attempt = 0; attempt <= 22; ++attempt) {
    std::vector<Circle> circles = base_region.circles;
    std::vector<Placement> placements;
    bool ok = true;
    for (auto& spec : specs) {
      const ReebEdge& edge = edge_by_id(base_reeb, spec.edge);
      const Circle& host = base_region.circle_by_id(edge.upper.circle);
      Rat u = param_magnitude_for_window(host, spec.window_lo, spec.window_hi);
      Rat t = edge.upper.upper ? u : -u;
      auto [ax, ay] = circle_param(host, t);
      Rat s = Rat(1, 4) / Rat(2).pow((unsigned)attempt);
      // center = anchor shifted radially away from the region
      Rat cx, cy;
      if (host.orient == Orientation::Inside) {
        cx = ax + s * (ax - host.cx);
        cy = ay + s * (ay - host.cy);
      } else {
        cx = ax - s * (ax - host.cx);
        cy = ay - s * (ay - host.cy);
      }
      Rat rho = s * host.radius * Rat(9, 8);
      Circle chord{(int)circles.size() + 1, cx, cy, rho, Orientation::Outside};
      // both vertical poles must lie strictly on the negative side of the host
      if (circle_value(host, cx + rho, cy).sign() >= 0 ||
          circle_value(host, cx - rho, cy).sign() >= 0) {
        ok = false;
        break;
      }
      placements.push_back({chord, spec.edge, ax, false});
      circles.push_back(chord);
    }
    if (!ok) continue;
    try {
      Region region = region_from_seed(circles, base_region.seed_x, base_region.seed_y);
      if (!validate_arrangement(circles, base_region.seed_x, base_region.seed_y).passed())
        continue;
      bool structure_ok = true;
      std::vector<Cluster> clusters;
      for (auto& pl : placements) {
        int id = pl.circle.id;
        int crossings = 0, poles_in = 0;
        for (auto& cr : region.crossings) {
          if (cr.c1 != id && cr.c2 != id) continue;
          int other = cr.c1 == id ? cr.c2 : cr.c1;
          const ReebEdge& edge = edge_by_id(base_reeb, pl.edge);
          if (other != edge.upper.circle || !cr.in_closure) {
            structure_ok = false;
            break;
          }
          crossings++;
        }
        for (auto& p : region.poles)
          if (p.circle == id && p.in_closure) poles_in++;
        if (crossings != 2 || poles_in != 0) structure_ok = false;
        if (!structure_ok) break;
        clusters.push_back(cluster_of(region, id));
      }
      if (!structure_ok) continue;
      for (size_t i = 0; i < clusters.size() && structure_ok; ++i) {
        const ReebEdge& edge = edge_by_id(base_reeb, placements[i].edge);
        if (quad_cmp(base_reeb.vertices[edge.u].x, clusters[i].min_x) >= 0 ||
            quad_cmp(clusters[i].max_x, base_reeb.vertices[edge.v].x) >= 0)
          structure_ok = false;
        for (size_t j = i + 1; j < clusters.size(); ++j) {
          bool sep = quad_cmp(clusters[i].max_x, clusters[j].min_x) < 0 ||
                     quad_cmp(clusters[j].max_x, clusters[i].min_x) < 0;
          if (!sep) structure_ok = false;
        }
      }
      if (!structure_ok) continue;
      std::sort(placements.begin(), placements.end(), [](const Placement& a, const Placement& b) {
        if (a.edge != b.edge) return a.edge < b.edge;
        return a.anchor_x < b.anchor_x;
      });
      return {std::move(region), std::move(placements)};
    } catch (const Error&) {
      continue;
    }
  }
  throw PlacementFailure("no chord schedule satisfied every exact check");
}

std::vector<GraphDecoration> chord_decorations(const std::vector<Placement>& placements) {
  std::vector<GraphDecoration> out;
  for (auto& pl : placements) out.push_back({pl.edge, GraphDecoration::Kind::Chord, false});
  return out;
}

}  // namespace

ConstructionResult attach_chord_circles(const MomentData& base, const std::map<int, int>& alloc,
                                        int total_dim) {
  require_valid_base(base);
  require_disjoint_single_group(base);
  int m1 = base.dim_map[0];
  if (total_dim <= m1 + 2)
    throw DimensionError("total dimension must exceed dim(1) + 2 = " + std::to_string(m1 + 2));
  ReebGraph base_reeb = reeb_graph(base);
  auto specs = specs_from_alloc(base_reeb, alloc);
  ConstructionResult result;
  if (specs.empty()) {
    result.data = base;
    result.predicted = base_reeb.as_multigraph();
    return result;
  }
  AttachOutcome outcome = place_chords(base, base_reeb, specs);
  std::vector<int> groups(base.l1, 1);
  groups.resize(outcome.region.circles.size(), 2);
  std::vector<int> dims{m1, total_dim - m1 - 2};
  result.data = MomentData::from_region(std::move(outcome.region), groups, dims);
  result.predicted =
      predict_decorated(base_reeb.as_multigraph(), chord_decorations(outcome.placements));
  for (auto& pl : outcome.placements)
    result.decorations.push_back({pl.circle.id, pl.edge, Decoration::Kind::Chord, 1, {}});
  return result;
}

ConstructionResult attach_chord_factor(const MomentData& base, int edge, int new_dim) {
  require_valid_base(base);
  if (new_dim < 1) throw DimensionError("the new group dimension must be positive");
  for (int d : base.dim_map)
    if (d < 1) throw ValidationError("every base group dimension must be positive");
  ReebGraph base_reeb = reeb_graph(base);
  const ReebEdge& e = edge_by_id(base_reeb, edge);
  PendantSpec spec;
  spec.edge = edge;
  const QuadExt& lo = base_reeb.vertices[e.u].x;
  const QuadExt& hi = base_reeb.vertices[e.v].x;
  spec.window_lo = QuadExt(rational_in(lo, hi, 0.375));
  spec.window_hi = QuadExt(rational_in(lo, hi, 0.625));
  AttachOutcome outcome = place_chords(base, base_reeb, {spec});
  std::vector<int> groups = base.group_map;
  groups.push_back(base.l2 + 1);
  std::vector<int> dims = base.dim_map;
  dims.push_back(new_dim);
  ConstructionResult result;
  result.data = MomentData::from_region(std::move(outcome.region), groups, dims);
  result.predicted =
      predict_decorated(base_reeb.as_multigraph(), chord_decorations(outcome.placements));
  result.decorations.push_back(
      {outcome.placements[0].circle.id, edge, Decoration::Kind::Chord, 1, new_dim});
  return result;
}

ConstructionResult construct_mt6(int nprime, int j1, int j2, int total_dim) {
  if (nprime < 0 || j1 < 0 || j2 < 0 || j1 + j2 != nprime)
    throw ArityError("need j1 + j2 = n' with all three non-negative");
  Circle disk{1, Rat(0), Rat(0), Rat(1), Orientation::Inside};
  Region region = region_from_seed({disk}, Rat(0), Rat(0));
  MomentData base = MomentData::from_region(std::move(region), {1}, {1});
  ReebGraph base_reeb = reeb_graph(base);

  std::vector<PendantSpec> specs;
  QuadExt minus_one{Rat(-1)}, zero{Rat(0)}, one{Rat(1)};
  for (int i = 0; i < j1; ++i) {
    PendantSpec s;
    s.edge = 0;
    s.window_lo = QuadExt(rational_in(minus_one, zero, (4.0 * i + 1) / (4.0 * j1)));
    s.window_hi = QuadExt(rational_in(minus_one, zero, (4.0 * i + 3) / (4.0 * j1)));
    specs.push_back(std::move(s));
  }
  for (int i = 0; i < j2; ++i) {
    PendantSpec s;
    s.edge = 0;
    s.window_lo = QuadExt(rational_in(zero, one, (4.0 * i + 1) / (4.0 * j2)));
    s.window_hi = QuadExt(rational_in(zero, one, (4.0 * i + 3) / (4.0 * j2)));
    specs.push_back(std::move(s));
  }

  ConstructionResult result;
  if (specs.empty()) {
    result.data = base;
    result.predicted = build_gp(0, 0, 0);
    return result;
  }
  AttachOutcome outcome = place_pendants(base, base_reeb, specs);
  std::vector<int> groups(1, 1);
  groups.resize(outcome.region.circles.size(), 2);
  int m1 = 1;
  if (total_dim <= m1 + 2)
    throw DimensionError("total dimension must exceed dim(1) + 2 = " + std::to_string(m1 + 2));
  std::vector<int> dims{m1, total_dim - m1 - 2};
  result.data = MomentData::from_region(std::move(outcome.region), groups, dims);
  result.predicted = build_gp(nprime, j1, j2);
  for (auto& pl : outcome.placements)
    result.decorations.push_back({pl.circle.id, 0, Decoration::Kind::Pendant, 1, {}});
  return result;
}

}  // namespace momentforge
