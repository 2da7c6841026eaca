#include "momentforge/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "momentforge/errors.hpp"

namespace momentforge {

Poly circle_poly(const Circle& c) {
  std::vector<std::string> vars{"x1", "x2"};
  Poly x1 = Poly::variable(vars, 0);
  Poly x2 = Poly::variable(vars, 1);
  Poly dx = x1 - Poly::constant(vars, c.cx);
  Poly dy = x2 - Poly::constant(vars, c.cy);
  Poly outside = dx * dx + dy * dy - Poly::constant(vars, c.radius.squared());
  return c.orient == Orientation::Outside ? outside : -outside;
}

Rat circle_value(const Circle& c, const Rat& x, const Rat& y) {
  Rat v = (x - c.cx).squared() + (y - c.cy).squared() - c.radius.squared();
  return c.orient == Orientation::Outside ? v : -v;
}

QuadExt circle_value(const Circle& c, const QuadExt& x, const QuadExt& y) {
  QuadExt dx = x - QuadExt(c.cx);
  QuadExt dy = y - QuadExt(c.cy);
  QuadExt v = dx * dx + dy * dy - QuadExt(c.radius.squared());
  return c.orient == Orientation::Outside ? v : -v;
}

std::pair<Pole, Pole> vertical_poles(const Circle& c) {
  Pole left{c.id, PoleSide::Left, c.cx - c.radius, c.cy};
  Pole right{c.id, PoleSide::Right, c.cx + c.radius, c.cy};
  return {left, right};
}

PairRelation circle_relation(const Circle& a, const Circle& b) {
  Rat dx = b.cx - a.cx, dy = b.cy - a.cy;
  Rat dist2 = dx.squared() + dy.squared();
  Rat sum2 = (a.radius + b.radius).squared();
  Rat diff2 = (a.radius - b.radius).squared();
  if (dist2.is_zero()) {
    if (a.radius == b.radius) return {PairKind::Coincident, {}};
    return {PairKind::Disjoint, {}};
  }
  if (dist2 > sum2 || dist2 < diff2) return {PairKind::Disjoint, {}};
  int lo_id = std::min(a.id, b.id), hi_id = std::max(a.id, b.id);
  if (dist2 == sum2 || dist2 == diff2) {
    // tangency point is rational: scale along the center line
    Rat denom = (dist2 == sum2) ? a.radius + b.radius : a.radius - b.radius;
    Rat t = a.radius / denom;
    CrossingPoint p{lo_id, hi_id, QuadExt(a.cx + t * dx), QuadExt(a.cy + t * dy)};
    return {PairKind::Tangent, {p}};
  }
  // radical line: 2*dx*x + 2*dy*y = rhs
  Rat rhs = (a.radius.squared() - b.radius.squared()) - (a.cx.squared() - b.cx.squared()) -
            (a.cy.squared() - b.cy.squared());
  std::vector<CrossingPoint> pts;
  if (dy.is_zero()) {
    Rat x0 = rhs / (Rat(2) * dx);
    Rat disc = a.radius.squared() - (x0 - a.cx).squared();
    QuadExt root = QuadExt::sqrt_of(disc);
    pts.push_back({lo_id, hi_id, QuadExt(x0), QuadExt(a.cy) + root});
    pts.push_back({lo_id, hi_id, QuadExt(x0), QuadExt(a.cy) - root});
  } else {
    Rat alpha = rhs / (Rat(2) * dy);
    Rat beta = -dx / dy;
    Rat A = Rat(1) + beta.squared();
    Rat B = Rat(-2) * a.cx + Rat(2) * beta * (alpha - a.cy);
    Rat C = a.cx.squared() + (alpha - a.cy).squared() - a.radius.squared();
    Rat disc = B.squared() - Rat(4) * A * C;
    QuadExt root = QuadExt::sqrt_of(disc);
    QuadExt half(Rat(1) / (Rat(2) * A));
    QuadExt xp = (QuadExt(-B) + root) * half;
    QuadExt xm = (QuadExt(-B) - root) * half;
    QuadExt al(alpha), be(beta);
    pts.push_back({lo_id, hi_id, xp, al + be * xp});
    pts.push_back({lo_id, hi_id, xm, al + be * xm});
  }
  return {PairKind::Crossing, std::move(pts)};
}

std::vector<CrossingPoint> circle_intersections(const Circle& a, const Circle& b) {
  PairRelation rel = circle_relation(a, b);
  switch (rel.kind) {
    case PairKind::Disjoint:
      return {};
    case PairKind::Crossing:
      return rel.points;
    case PairKind::Tangent:
      throw TangencyError("circles " + std::to_string(a.id) + " and " + std::to_string(b.id) +
                          " are tangent at (" + rel.points[0].x.str() + ", " +
                          rel.points[0].y.str() + ")");
    case PairKind::Coincident:
      throw TangencyError("circles " + std::to_string(a.id) + " and " + std::to_string(b.id) +
                          " coincide");
  }
  throw InternalError("unreachable");
}

namespace {

const Circle& find_circle(const std::vector<Circle>& circles, int id) {
  for (auto& c : circles)
    if (c.id == id) return c;
  throw InternalError("unknown circle id " + std::to_string(id));
}

struct Wall {
  Arc arc;
  QuadExt y;
};

}  // namespace

std::vector<RawGap> positive_slice(const std::vector<Circle>& circles, const Rat& t) {
  std::vector<Wall> walls;
  for (auto& c : circles) {
    Rat disc = c.radius.squared() - (t - c.cx).squared();
    if (disc.sign() <= 0) continue;  // line misses circle (tangent t is never sampled)
    QuadExt root = QuadExt::sqrt_of(disc);
    walls.push_back({{c.id, false}, QuadExt(c.cy) - root});
    walls.push_back({{c.id, true}, QuadExt(c.cy) + root});
  }
  std::sort(walls.begin(), walls.end(),
            [](const Wall& a, const Wall& b) { return quad_lt(a.y, b.y); });
  auto positive_at = [&](const Rat& y) {
    for (auto& c : circles)
      if (circle_value(c, t, y).sign() <= 0) return false;
    return true;
  };
  std::vector<RawGap> out;
  size_t n = walls.size();
  for (size_t g = 0; g <= n; ++g) {
    Rat sample;
    if (n == 0) {
      sample = Rat(0);
    } else if (g == 0) {
      sample = rational_below(walls[0].y);
    } else if (g == n) {
      sample = rational_above(walls[n - 1].y);
    } else {
      sample = rational_between(walls[g - 1].y, walls[g].y);
    }
    if (!positive_at(sample)) continue;
    RawGap gap;
    if (g == 0) {
      gap.lo_inf = true;
    } else {
      gap.lo = walls[g - 1].arc;
      gap.lo_y = walls[g - 1].y;
    }
    if (g == n) {
      gap.hi_inf = true;
    } else {
      gap.hi = walls[g].arc;
      gap.hi_y = walls[g].y;
    }
    out.push_back(std::move(gap));
  }
  return out;
}

namespace {

// Adjacency resolution across one slab boundary.
struct Link {
  std::vector<int> l2r, r2l;          // pass-through partners, -1 if none
  std::vector<int> l_event, r_event;  // consuming event index, -1 if none
};

int find_by_arc(const std::vector<SlabSegment>& segs, const Arc& a) {
  for (size_t i = 0; i < segs.size(); ++i) {
    if ((!segs[i].lo_inf && segs[i].lo == a) || (!segs[i].hi_inf && segs[i].hi == a))
      return (int)i;
  }
  return -1;
}

int find_by_pair(const std::vector<SlabSegment>& segs, const SlabSegment& like) {
  for (size_t i = 0; i < segs.size(); ++i) {
    auto& s = segs[i];
    if (s.lo_inf != like.lo_inf || s.hi_inf != like.hi_inf) continue;
    if (!s.lo_inf && !(s.lo == like.lo)) continue;
    if (!s.hi_inf && !(s.hi == like.hi)) continue;
    return (int)i;
  }
  return -1;
}

struct TraceBuilder {
  const std::vector<Circle>& circles;
  RegionTrace trace;
  std::vector<Link> links;                                  // per boundary
  std::vector<std::vector<std::pair<int, int>>> incident;   // event -> (slab, seg)

  explicit TraceBuilder(const std::vector<Circle>& cs) : circles(cs) {}

  void collect_events() {
    for (auto& c : circles) {
      auto [l, r] = vertical_poles(c);
      trace.events.push_back(
          {Event::Kind::Pole, QuadExt(l.x), QuadExt(l.y), c.id, -1, PoleSide::Left});
      trace.events.push_back(
          {Event::Kind::Pole, QuadExt(r.x), QuadExt(r.y), c.id, -1, PoleSide::Right});
    }
    for (size_t i = 0; i < circles.size(); ++i) {
      for (size_t j = i + 1; j < circles.size(); ++j) {
        for (auto& p : circle_intersections(circles[i], circles[j])) {
          trace.events.push_back({Event::Kind::Crossing, p.x, p.y, p.c1, p.c2});
        }
      }
    }
    std::sort(trace.events.begin(), trace.events.end(), [](const Event& a, const Event& b) {
      int c = quad_cmp(a.x, b.x);
      if (c != 0) return c < 0;
      return quad_cmp(a.y, b.y) < 0;
    });
    for (size_t e = 0; e < trace.events.size(); ++e) {
      if (trace.boundary_x.empty() || quad_cmp(trace.boundary_x.back(), trace.events[e].x) != 0) {
        trace.boundary_x.push_back(trace.events[e].x);
        trace.events_at.emplace_back();
      }
      trace.events_at.back().push_back((int)e);
    }
    incident.resize(trace.events.size());
  }

  void build_slabs() {
    size_t k = trace.boundary_x.size();
    trace.samples.resize(k + 1);
    trace.slabs.resize(k + 1);
    for (size_t i = 0; i <= k; ++i) {
      if (i == 0) {
        trace.samples[i] = rational_below(trace.boundary_x.front());
      } else if (i == k) {
        trace.samples[i] = rational_above(trace.boundary_x.back());
      } else {
        trace.samples[i] = rational_between(trace.boundary_x[i - 1], trace.boundary_x[i]);
      }
      for (auto& gap : positive_slice(circles, trace.samples[i])) {
        SlabSegment s;
        s.lo_inf = gap.lo_inf;
        s.hi_inf = gap.hi_inf;
        s.lo = gap.lo;
        s.hi = gap.hi;
        s.lo_y = gap.lo_y;
        s.hi_y = gap.hi_y;
        trace.slabs[i].push_back(std::move(s));
      }
    }
  }

  void consume(int boundary, bool left_side, int seg, int event) {
    Link& lk = links[boundary];
    auto& slot = left_side ? lk.l_event[seg] : lk.r_event[seg];
    slot = event;
    incident[event].push_back({left_side ? boundary : boundary + 1, seg});
  }

  void resolve_pole(int boundary, int eidx) {
    const Event& ev = trace.events[eidx];
    const Circle& c = find_circle(circles, ev.c1);
    bool full_on_left = ev.side == PoleSide::Right;  // arcs exist where the circle does
    int full_slab = full_on_left ? boundary : boundary + 1;
    auto& full = trace.slabs[full_slab];
    Arc lower{c.id, false}, upper{c.id, true};
    if (c.orient == Orientation::Inside) {
      // extremum: the segment between the two branches dies or is born
      for (size_t i = 0; i < full.size(); ++i) {
        if (!full[i].lo_inf && full[i].lo == lower && !full[i].hi_inf && full[i].hi == upper) {
          consume(boundary, full_on_left, (int)i, eidx);
          return;
        }
      }
      return;  // pole not adjacent to any positive segment
    }
    // branch point of a hole boundary: merge or split
    auto& other = trace.slabs[full_on_left ? boundary + 1 : boundary];
    for (size_t i = 0; i + 1 < full.size(); ++i) {
      if (full[i].hi_inf || !(full[i].hi == lower)) continue;
      if (full[i + 1].lo_inf || !(full[i + 1].lo == upper)) continue;
      SlabSegment merged;
      merged.lo_inf = full[i].lo_inf;
      merged.lo = full[i].lo;
      merged.hi_inf = full[i + 1].hi_inf;
      merged.hi = full[i + 1].hi;
      int m = find_by_pair(other, merged);
      if (m < 0) return;  // inconsistent; surfaces later if the region is involved
      consume(boundary, full_on_left, (int)i, eidx);
      consume(boundary, full_on_left, (int)i + 1, eidx);
      consume(boundary, !full_on_left, m, eidx);
      return;
    }
  }

  void resolve_crossing(int boundary, int eidx) {
    const Event& ev = trace.events[eidx];
    const Circle& a = find_circle(circles, ev.c1);
    const Circle& b = find_circle(circles, ev.c2);
    int ya = quad_cmp(ev.y, QuadExt(a.cy));
    int yb = quad_cmp(ev.y, QuadExt(b.cy));
    if (ya == 0 || yb == 0) return;  // crossing at a pole: degenerate, left unresolved
    Arc A{a.id, ya > 0}, B{b.id, yb > 0};
    auto& L = trace.slabs[boundary];
    auto& R = trace.slabs[boundary + 1];
    int sA = find_by_arc(L, A), sB = find_by_arc(L, B);
    int tA = find_by_arc(R, A), tB = find_by_arc(R, B);
    if (sA >= 0 && sA == sB) {  // segment pinched between the two arcs: death
      consume(boundary, true, sA, eidx);
      return;
    }
    if (tA >= 0 && tA == tB) {  // birth
      consume(boundary, false, tA, eidx);
      return;
    }
    // relabel: one endpoint switches circles across the crossing
    int s = sA >= 0 ? sA : sB;
    int t = tA >= 0 ? tA : tB;
    if (s < 0 || t < 0) return;
    if (sA >= 0 && sB >= 0) return;  // two distinct adjacent segments: degenerate
    if (tA >= 0 && tB >= 0) return;
    const Arc& sArc = sA >= 0 ? A : B;
    bool s_at_lo = !L[s].lo_inf && L[s].lo == sArc;
    const Arc& tArc = tA >= 0 ? A : B;
    bool t_at_lo = !R[t].lo_inf && R[t].lo == tArc;
    if (s_at_lo != t_at_lo) return;
    // far endpoints must agree
    if (s_at_lo) {
      if (L[s].hi_inf != R[t].hi_inf || (!L[s].hi_inf && !(L[s].hi == R[t].hi))) return;
    } else {
      if (L[s].lo_inf != R[t].lo_inf || (!L[s].lo_inf && !(L[s].lo == R[t].lo))) return;
    }
    consume(boundary, true, s, eidx);
    consume(boundary, false, t, eidx);
  }

  void resolve_boundaries() {
    links.resize(trace.boundary_x.size());
    for (size_t b = 0; b < trace.boundary_x.size(); ++b) {
      Link& lk = links[b];
      lk.l2r.assign(trace.slabs[b].size(), -1);
      lk.l_event.assign(trace.slabs[b].size(), -1);
      lk.r2l.assign(trace.slabs[b + 1].size(), -1);
      lk.r_event.assign(trace.slabs[b + 1].size(), -1);
      for (int e : trace.events_at[b]) {
        if (trace.events[e].kind == Event::Kind::Pole)
          resolve_pole((int)b, e);
        else
          resolve_crossing((int)b, e);
      }
      // pass-through matching by identical arc pairs
      auto& L = trace.slabs[b];
      auto& R = trace.slabs[b + 1];
      for (size_t i = 0; i < L.size(); ++i) {
        if (lk.l_event[i] >= 0) continue;
        for (size_t j = 0; j < R.size(); ++j) {
          if (lk.r_event[j] >= 0 || lk.r2l[j] >= 0) continue;
          if (L[i].lo_inf != R[j].lo_inf || L[i].hi_inf != R[j].hi_inf) continue;
          if (!L[i].lo_inf && !(L[i].lo == R[j].lo)) continue;
          if (!L[i].hi_inf && !(L[i].hi == R[j].hi)) continue;
          lk.l2r[i] = (int)j;
          lk.r2l[j] = (int)i;
          break;
        }
      }
    }
  }

  std::string seg_desc(int slab, int idx) const {
    std::ostringstream os;
    os << "slab " << slab << " (sample x=" << trace.samples[slab].str() << ") segment " << idx;
    return os.str();
  }

  void flood(int seed_slab, int seed_seg) {
    size_t last_slab = trace.slabs.size() - 1;
    std::deque<std::pair<int, int>> queue{{seed_slab, seed_seg}};
    trace.slabs[seed_slab][seed_seg].traced = true;
    std::set<int> touched_set;
    while (!queue.empty()) {
      auto [k, s] = queue.front();
      queue.pop_front();
      SlabSegment& seg = trace.slabs[k][s];
      if (seg.lo_inf || seg.hi_inf)
        throw UnboundedRegionError("the region is unbounded in the vertical direction at x=" +
                                   trace.samples[k].str());
      if (k == 0 || (size_t)k == last_slab)
        throw UnboundedRegionError("the region extends past every circle at x=" +
                                   trace.samples[k].str());
      auto touch_event = [&](int e) {
        if (touched_set.insert(e).second) {
          trace.events[e].touched = true;
          for (auto& [sl, si] : incident[e]) {
            if (!trace.slabs[sl][si].traced) {
              trace.slabs[sl][si].traced = true;
              queue.push_back({sl, si});
            }
          }
        }
      };
      // right boundary of slab k is boundary index k
      if ((size_t)k <= last_slab - 1) {
        Link& lk = links[k];
        if (lk.l_event[s] >= 0) {
          touch_event(lk.l_event[s]);
        } else if (lk.l2r[s] >= 0) {
          int j = lk.l2r[s];
          if (!trace.slabs[k + 1][j].traced) {
            trace.slabs[k + 1][j].traced = true;
            queue.push_back({k + 1, j});
          }
        } else {
          throw DegenerateEventError("no adjacency across x=" + trace.boundary_x[k].decimal(6) +
                                     " for " + seg_desc(k, s) +
                                     "; the arrangement is degenerate there");
        }
      }
      if (k >= 1) {
        Link& lk = links[k - 1];
        if (lk.r_event[s] >= 0) {
          touch_event(lk.r_event[s]);
        } else if (lk.r2l[s] >= 0) {
          int j = lk.r2l[s];
          if (!trace.slabs[k - 1][j].traced) {
            trace.slabs[k - 1][j].traced = true;
            queue.push_back({k - 1, j});
          }
        } else {
          throw DegenerateEventError("no adjacency across x=" +
                                     trace.boundary_x[k - 1].decimal(6) + " for " +
                                     seg_desc(k, s) + "; the arrangement is degenerate there");
        }
      }
    }
    for (size_t e = 0; e < trace.events.size(); ++e)
      if (trace.events[e].touched) trace.touched.push_back((int)e);
  }

  void build_chains() {
    for (size_t k = 0; k < trace.slabs.size(); ++k) {
      for (size_t s = 0; s < trace.slabs[k].size(); ++s) {
        SlabSegment& seg = trace.slabs[k][s];
        if (!seg.traced || seg.chain >= 0) continue;
        // only start a chain at its leftmost slab
        if (k >= 1 && links[k - 1].r2l[s] >= 0) continue;
        Chain ch;
        ch.lo = seg.lo;
        ch.hi = seg.hi;
        ch.first_slab = (int)k;
        ch.start_event = links[k - 1].r_event[s];
        int ck = (int)k, cs = (int)s;
        int id = (int)trace.chains.size();
        for (;;) {
          SlabSegment& cur = trace.slabs[ck][cs];
          cur.chain = id;
          if (!(cur.lo == ch.lo) || !(cur.hi == ch.hi))
            throw InternalError("segment chain changed arcs without an event");
          Link& lk = links[ck];
          if (lk.l_event[cs] >= 0) {
            ch.end_event = lk.l_event[cs];
            ch.last_slab = ck;
            break;
          }
          if (lk.l2r[cs] < 0) throw InternalError("chain broke without an event");
          cs = lk.l2r[cs];
          ck += 1;
        }
        trace.chains.push_back(ch);
      }
    }
    for (auto& ch : trace.chains)
      if (ch.start_event < 0 || ch.end_event < 0)
        throw InternalError("chain with an open end survived the sweep");
  }
};

}  // namespace

Region region_from_seed(std::vector<Circle> circles, const Rat& seed_x, const Rat& seed_y) {
  if (circles.empty()) throw ValidationError("no circles given");
  {
    std::set<int> ids;
    for (auto& c : circles) {
      if (c.radius.sign() <= 0)
        throw ValidationError("circle " + std::to_string(c.id) + " has non-positive radius");
      if (!ids.insert(c.id).second)
        throw ValidationError("duplicate circle id " + std::to_string(c.id));
    }
  }
  for (auto& c : circles) {
    if (circle_value(c, seed_x, seed_y).sign() <= 0)
      throw SeedOutsideError("seed (" + seed_x.str() + ", " + seed_y.str() +
                             ") is not strictly inside the positive side of circle " +
                             std::to_string(c.id));
  }

  TraceBuilder tb(circles);
  tb.collect_events();
  tb.build_slabs();

  // locate the seed's slab and segment
  QuadExt sx{seed_x};
  int seed_slab = 0;
  for (auto& bx : tb.trace.boundary_x) {
    int c = quad_cmp(bx, sx);
    if (c == 0)
      throw ValidationError("seed x-coordinate " + seed_x.str() +
                            " coincides with an event abscissa; nudge the seed");
    if (c < 0) seed_slab++;
  }
  auto seed_gaps = positive_slice(circles, seed_x);
  int gap_idx = -1;
  for (size_t i = 0; i < seed_gaps.size(); ++i) {
    bool above = seed_gaps[i].lo_inf || quad_lt(seed_gaps[i].lo_y, QuadExt(seed_y));
    bool below = seed_gaps[i].hi_inf || quad_lt(QuadExt(seed_y), seed_gaps[i].hi_y);
    if (above && below) {
      gap_idx = (int)i;
      break;
    }
  }
  if (gap_idx < 0) throw SeedOutsideError("seed is not in the positivity region");
  SlabSegment like;
  like.lo_inf = seed_gaps[gap_idx].lo_inf;
  like.hi_inf = seed_gaps[gap_idx].hi_inf;
  like.lo = seed_gaps[gap_idx].lo;
  like.hi = seed_gaps[gap_idx].hi;
  int seed_seg = find_by_pair(tb.trace.slabs[seed_slab], like);
  if (seed_seg < 0) throw InternalError("seed segment not found in its slab");

  tb.resolve_boundaries();
  tb.flood(seed_slab, seed_seg);
  tb.build_chains();

  Region region;
  region.circles = std::move(circles);
  region.seed_x = seed_x;
  region.seed_y = seed_y;
  for (auto& ev : tb.trace.events) {
    if (ev.kind == Event::Kind::Pole) {
      Pole p{ev.c1, ev.side, ev.x.as_rational(), ev.y.as_rational(), ev.touched};
      region.poles.push_back(p);
    } else {
      region.crossings.push_back({ev.c1, ev.c2, ev.x, ev.y, ev.touched});
    }
  }
  region.hole_count =
      (int)tb.trace.chains.size() - (int)tb.trace.touched.size() + 1;
  if (region.hole_count < 0)
    throw InternalError("negative hole count; sweep bookkeeping is inconsistent");
  region.trace = std::make_shared<RegionTrace>(std::move(tb.trace));
  return region;
}

const Circle& Region::circle_by_id(int id) const { return find_circle(circles, id); }

std::vector<Pole> Region::boundary_poles() const {
  std::vector<Pole> out;
  for (auto& p : poles)
    if (p.in_closure) out.push_back(p);
  return out;
}

std::vector<CrossingPoint> Region::boundary_crossings() const {
  std::vector<CrossingPoint> out;
  for (auto& c : crossings)
    if (c.in_closure) out.push_back(c);
  return out;
}

Box Region::bounding_box() const {
  Box b{circles[0].cx, circles[0].cx, circles[0].cy, circles[0].cy};
  for (auto& c : circles) {
    b.xmin = std::min(b.xmin, c.cx - c.radius);
    b.xmax = std::max(b.xmax, c.cx + c.radius);
    b.ymin = std::min(b.ymin, c.cy - c.radius);
    b.ymax = std::max(b.ymax, c.cy + c.radius);
  }
  b.xmin -= Rat(1);
  b.xmax += Rat(1);
  b.ymin -= Rat(1);
  b.ymax += Rat(1);
  return b;
}

Stratum locate_point(const Region& region, const QuadExt& x, const QuadExt& y) {
  std::vector<int> zeros;
  bool negative = false;
  for (auto& c : region.circles) {
    int s = circle_value(c, x, y).sign();
    if (s == 0) zeros.push_back(c.id);
    if (s < 0) negative = true;
  }
  if (negative) return {Stratum::Kind::Outside, {}};
  if (zeros.empty()) return {Stratum::Kind::Interior, {}};
  return {Stratum::Kind::OnCircles, zeros};
}

bool ValidationReport::has(const std::string& code) const {
  for (auto& i : issues)
    if (i.code == code) return true;
  return false;
}

std::string ValidationReport::summary() const {
  if (issues.empty()) return "pass";
  std::ostringstream os;
  for (auto& i : issues) os << "[" << i.code << "] " << i.message << "\n";
  return os.str();
}

ValidationReport validate_arrangement(const std::vector<Circle>& circles, const Rat& seed_x,
                                      const Rat& seed_y) {
  ValidationReport report;
  auto add = [&](const std::string& code, const std::string& msg) {
    report.issues.push_back({code, msg});
  };

  std::vector<CrossingPoint> meeting_points;
  bool pair_trouble = false;
  for (size_t i = 0; i < circles.size(); ++i) {
    for (size_t j = i + 1; j < circles.size(); ++j) {
      PairRelation rel = circle_relation(circles[i], circles[j]);
      if (rel.kind == PairKind::Tangent) {
        pair_trouble = true;
        add("tangency", "circles " + std::to_string(circles[i].id) + " and " +
                            std::to_string(circles[j].id) + " are tangent at (" +
                            rel.points[0].x.str() + ", " + rel.points[0].y.str() + ")");
      } else if (rel.kind == PairKind::Coincident) {
        pair_trouble = true;
        add("tangency", "circles " + std::to_string(circles[i].id) + " and " +
                            std::to_string(circles[j].id) + " coincide");
      }
      for (auto& p : rel.points) meeting_points.push_back(p);
    }
  }

  auto third_circles_through = [&](const CrossingPoint& p) {
    std::vector<int> extra;
    for (auto& c : circles) {
      if (c.id == p.c1 || c.id == p.c2) continue;
      if (circle_value(c, p.x, p.y).sign() == 0) extra.push_back(c.id);
    }
    return extra;
  };

  std::optional<Region> region;
  if (!pair_trouble) {
    try {
      region = region_from_seed(circles, seed_x, seed_y);
    } catch (const Error& e) {
      add(e.code(), e.what());
    }
  }

  // (b) no point of the closure on three or more circles
  for (auto& p : meeting_points) {
    if (region) {
      bool in_closure = false;
      for (auto& c : region->crossings)
        if (c.c1 == p.c1 && c.c2 == p.c2 && quad_eq(c.x, p.x) && quad_eq(c.y, p.y))
          in_closure = c.in_closure;
      if (!in_closure) continue;
    }
    auto extra = third_circles_through(p);
    if (!extra.empty()) {
      add("triple_point", "point (" + p.x.str() + ", " + p.y.str() + ") on circles " +
                              std::to_string(p.c1) + ", " + std::to_string(p.c2) + " also lies on circle " +
                              std::to_string(extra.front()));
    }
  }

  // (c) no circle through a vertical pole lying in the closure
  auto pole_hits = [&](const Pole& p, bool require_closure) {
    if (require_closure && !p.in_closure) return;
    for (auto& c : circles) {
      if (c.id == p.circle) continue;
      if (circle_value(c, p.x, p.y).sign() == 0)
        add("pole_on_circle", "circle " + std::to_string(c.id) + " passes through the " +
                                  (p.side == PoleSide::Left ? std::string("left") : std::string("right")) +
                                  " pole (" + p.x.str() + ", " + p.y.str() + ") of circle " +
                                  std::to_string(p.circle));
    }
  };
  if (region) {
    for (auto& p : region->poles) pole_hits(p, true);
  } else {
    for (auto& c : circles) {
      auto [l, r] = vertical_poles(c);
      pole_hits(l, false);
      pole_hits(r, false);
    }
  }

  if (region) {
    // (d) pairwise distinct event abscissae within the closure
    const RegionTrace& tr = *region->trace;
    for (size_t b = 0; b < tr.boundary_x.size(); ++b) {
      int count = 0;
      for (int e : tr.events_at[b])
        if (tr.events[e].touched) count++;
      if (count > 1)
        add("genericity", std::to_string(count) + " boundary events share the abscissa x=" +
                              tr.boundary_x[b].str() + " (" + tr.boundary_x[b].decimal(6) + ")");
    }
    // (e) every circle contributes boundary
    std::set<int> on_boundary;
    for (auto& ch : tr.chains) {
      on_boundary.insert(ch.lo.circle);
      on_boundary.insert(ch.hi.circle);
    }
    for (auto& c : circles) {
      if (!on_boundary.count(c.id))
        add("circle_off_boundary",
            "circle " + std::to_string(c.id) + " does not meet the boundary of the region");
    }
  }
  return report;
}

}  // namespace momentforge
