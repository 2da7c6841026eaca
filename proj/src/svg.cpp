#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include "momentforge/errors.hpp"
#include "momentforge/io.hpp"

namespace momentforge {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3f", v + 0.0);  // normalize -0
  return buf;
}

struct Mapper {
  double xmin, ymax, scale, margin;
  double X(double x) const { return (x - xmin) * scale + margin; }
  double Y(double y) const { return (ymax - y) * scale + margin; }
};

double arc_y(const Circle& c, bool upper, double x) {
  double r = c.radius.to_double();
  double cx = c.cx.to_double(), cy = c.cy.to_double();
  double disc = std::max(0.0, r * r - (x - cx) * (x - cx));
  return upper ? cy + std::sqrt(disc) : cy - std::sqrt(disc);
}

struct Piece {
  Arc arc;
  double x0, x1;        // sweep interval
  double px0, py0;      // endpoint at x0 (event point when the arc ends there)
  double px1, py1;
};

long key_of(double v) { return std::lround(v * 1e7); }

}  // namespace

std::string render_svg(const MomentData& d, const ReebGraph* graph) {
  if (!d.region) throw ValidationError("rendering needs exact circle data");
  const Region& region = *d.region;
  const RegionTrace& tr = *region.trace;

  Box box = region.bounding_box();
  double xmin = box.xmin.to_double(), xmax = box.xmax.to_double();
  double ymin = box.ymin.to_double(), ymax = box.ymax.to_double();
  double scale = 480.0 / std::max(xmax - xmin, 1e-9);
  Mapper map{xmin, ymax, scale, 20.0};
  double region_h = (ymax - ymin) * scale;
  double graph_base = region_h + 100.0;
  double total_h = graph ? graph_base + 90.0 : region_h + 40.0;
  double total_w = (xmax - xmin) * scale + 40.0;

  // boundary pieces from the traced chains
  std::vector<Piece> pieces;
  for (auto& ch : tr.chains) {
    const Event& a = tr.events[ch.start_event];
    const Event& b = tr.events[ch.end_event];
    double xa = a.x.to_double(), xb = b.x.to_double();
    for (Arc arc : {ch.lo, ch.hi}) {
      const Circle& c = region.circle_by_id(arc.circle);
      Piece p;
      p.arc = arc;
      p.x0 = xa;
      p.x1 = xb;
      auto endpoint = [&](const Event& ev, double x, double& px, double& py) {
        bool arc_ends_here = (ev.kind == Event::Kind::Pole && ev.c1 == arc.circle) ||
                             (ev.kind == Event::Kind::Crossing &&
                              (ev.c1 == arc.circle || ev.c2 == arc.circle) &&
                              std::abs(arc_y(c, arc.upper, x) - ev.y.to_double()) < 1e-6);
        px = x;
        py = arc_ends_here ? ev.y.to_double() : arc_y(c, arc.upper, x);
      };
      endpoint(a, xa, p.px0, p.py0);
      endpoint(b, xb, p.px1, p.py1);
      pieces.push_back(p);
    }
  }

  // assemble closed boundary loops: every endpoint joins exactly two pieces
  std::map<std::pair<long, long>, std::vector<int>> at_point;
  for (size_t i = 0; i < pieces.size(); ++i) {
    at_point[{key_of(pieces[i].px0), key_of(pieces[i].py0)}].push_back((int)i);
    at_point[{key_of(pieces[i].px1), key_of(pieces[i].py1)}].push_back((int)i);
  }
  std::vector<bool> used(pieces.size(), false);
  std::ostringstream region_path;
  const int kSamples = 48;
  for (size_t start = 0; start < pieces.size(); ++start) {
    if (used[start]) continue;
    int cur = (int)start;
    bool forward = true;  // traverse from px0 to px1
    bool first = true;
    for (;;) {
      used[cur] = true;
      const Piece& p = pieces[cur];
      const Circle& c = region.circle_by_id(p.arc.circle);
      double fx = forward ? p.px0 : p.px1;
      double fy = forward ? p.py0 : p.py1;
      double tx = forward ? p.px1 : p.px0;
      double ty = forward ? p.py1 : p.py0;
      if (first) {
        region_path << "M " << num(map.X(fx)) << " " << num(map.Y(fy)) << " ";
        first = false;
      }
      for (int s = 1; s < kSamples; ++s) {
        double t = (double)s / kSamples;
        double x = fx + (tx - fx) * t;
        region_path << "L " << num(map.X(x)) << " " << num(map.Y(arc_y(c, p.arc.upper, x)))
                    << " ";
      }
      region_path << "L " << num(map.X(tx)) << " " << num(map.Y(ty)) << " ";
      // step to the other piece at the target endpoint
      auto& bucket = at_point[{key_of(tx), key_of(ty)}];
      int next = -1;
      for (int cand : bucket)
        if (cand != cur && !used[cand]) next = cand;
      if (next < 0) {
        region_path << "Z ";
        break;
      }
      const Piece& np = pieces[next];
      forward = key_of(np.px0) == key_of(tx) && key_of(np.py0) == key_of(ty);
      cur = next;
    }
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(total_w) << "\" height=\""
      << num(total_h) << "\" viewBox=\"0 0 " << num(total_w) << " " << num(total_h) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<path d=\"" << region_path.str() << "\" fill=\"#c8c8c8\" fill-rule=\"evenodd\" "
      << "stroke=\"none\"/>\n";
  for (auto& c : region.circles) {
    svg << "<circle cx=\"" << num(map.X(c.cx.to_double())) << "\" cy=\""
        << num(map.Y(c.cy.to_double())) << "\" r=\"" << num(c.radius.to_double() * scale)
        << "\" fill=\"none\" stroke=\"#404040\" stroke-width=\"1\"/>\n";
  }
  for (int e : tr.touched) {
    const Event& ev = tr.events[e];
    svg << "<circle cx=\"" << num(map.X(ev.x.to_double())) << "\" cy=\""
        << num(map.Y(ev.y.to_double())) << "\" r=\"3.2\" fill=\"black\"/>\n";
  }

  if (graph) {
    std::map<std::pair<int, int>, int> parallel;
    svg << "<line x1=\"" << num(map.margin) << "\" y1=\"" << num(graph_base - 40.0)
        << "\" x2=\"" << num(total_w - map.margin) << "\" y2=\"" << num(graph_base - 40.0)
        << "\" stroke=\"#e0e0e0\" stroke-width=\"0.5\"/>\n";
    for (auto& e : graph->edges) {
      double xu = map.X(graph->vertices[e.u].x.to_double());
      double xv = map.X(graph->vertices[e.v].x.to_double());
      int idx = parallel[{e.u, e.v}]++;
      double bow = (idx == 0 ? 0.0 : (idx % 2 ? 1.0 : -1.0) * 16.0 * ((idx + 1) / 2));
      double cxm = (xu + xv) / 2.0;
      svg << "<path d=\"M " << num(xu) << " " << num(graph_base) << " Q " << num(cxm) << " "
          << num(graph_base + bow) << " " << num(xv) << " " << num(graph_base)
          << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
      std::ostringstream label;
      for (size_t i = 0; i < e.fiber.sphere_dims.size(); ++i)
        label << (i ? "," : "") << e.fiber.sphere_dims[i];
      svg << "<text x=\"" << num(cxm) << "\" y=\"" << num(graph_base + bow / 2.0 - 4.0)
          << "\" font-size=\"8\" text-anchor=\"middle\" fill=\"#606060\">S(" << label.str()
          << ")</text>\n";
    }
    for (auto& v : graph->vertices) {
      double x = map.X(v.x.to_double());
      svg << "<circle cx=\"" << num(x) << "\" cy=\"" << num(graph_base)
          << "\" r=\"3\" fill=\"black\"/>\n";
      svg << "<text x=\"" << num(x) << "\" y=\"" << num(graph_base + 22.0)
          << "\" font-size=\"8\" text-anchor=\"middle\" fill=\"#606060\">" << v.x.decimal(3)
          << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace momentforge
