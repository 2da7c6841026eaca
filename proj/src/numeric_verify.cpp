#include "momentforge/numeric_verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "momentforge/errors.hpp"

namespace momentforge {

namespace {

uint64_t splitmix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::mt19937_64 SampleRng::stream(uint64_t index) const {
  return std::mt19937_64(splitmix64(master_ ^ splitmix64(index)));
}

namespace {

struct System {
  EmittedSystem sys;
  std::vector<std::vector<Poly>> grads;  // per poly
  int ambient = 0;

  explicit System(const MomentData& d) : sys(emit_system(d)) {
    ambient = sys.ambient_dim;
    for (auto& p : sys.polys) grads.push_back(p.grad());
  }

  Eigen::MatrixXd jacobian(const std::vector<double>& pt) const {
    Eigen::MatrixXd J((int)sys.polys.size(), ambient);
    for (int i = 0; i < (int)sys.polys.size(); ++i)
      for (int j = 0; j < ambient; ++j) J(i, j) = grads[i][j].eval(pt);
    return J;
  }
};

std::vector<double> group_products(const MomentData& d, const std::vector<double>& x) {
  std::vector<Poly> fs = d.surface_polys();
  std::vector<double> prods(d.l2, 1.0);
  for (int j = 0; j < d.l1; ++j) prods[d.group_map[j] - 1] *= fs[j].eval(x);
  return prods;
}

std::vector<Rat> group_products_exact(const MomentData& d, const std::vector<Rat>& x) {
  std::vector<Poly> fs = d.surface_polys();
  std::vector<Rat> prods(d.l2, Rat(1));
  for (int j = 0; j < d.l1; ++j) prods[d.group_map[j] - 1] *= fs[j].eval(x);
  return prods;
}

// Ambient point over x: spheres of radius sqrt(product) per group, except
// zero_groups whose y block collapses to the origin.
std::vector<double> fiber_point(const MomentData& d, const std::vector<double>& x,
                                const std::vector<double>& prods,
                                const std::set<int>& zero_groups, std::mt19937_64& rng) {
  std::vector<double> pt = x;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 1; i <= d.l2; ++i) {
    int coords = d.dim_map[i - 1] + 1;
    if (zero_groups.count(i) || prods[i - 1] <= 0) {
      pt.insert(pt.end(), coords, 0.0);
      continue;
    }
    std::vector<double> v(coords);
    double norm2 = 0;
    do {
      norm2 = 0;
      for (auto& c : v) {
        c = gauss(rng);
        norm2 += c * c;
      }
    } while (norm2 < 1e-12);
    double scale = std::sqrt(prods[i - 1] / norm2);
    for (double c : v) pt.push_back(c * scale);
  }
  return pt;
}

}  // namespace

std::vector<std::vector<double>> sample_fiber(const MomentData& d, const std::vector<Rat>& p,
                                              int k, uint64_t rng_seed) {
  if ((int)p.size() != d.n) throw ValidationError("fiber base point has wrong arity");
  auto exact_prods = group_products_exact(d, p);
  for (int i = 0; i < d.l2; ++i)
    if (exact_prods[i].sign() <= 0)
      throw NotInteriorError("group " + std::to_string(i + 1) +
                             " product is not positive at the base point");
  std::vector<double> x(p.size());
  for (size_t i = 0; i < p.size(); ++i) x[i] = p[i].to_double();
  std::vector<double> prods(d.l2);
  for (int i = 0; i < d.l2; ++i) prods[i] = exact_prods[i].to_double();
  SampleRng rng(rng_seed);
  std::vector<std::vector<double>> out;
  for (int s = 0; s < k; ++s) {
    auto stream = rng.stream((uint64_t)s);
    out.push_back(fiber_point(d, x, prods, {}, stream));
  }
  return out;
}

SampleReport rank_check(const MomentData& d, const std::vector<std::vector<double>>& points,
                        const Tolerances& tol) {
  System system(d);
  SampleReport report;
  report.min_rank_gap = std::numeric_limits<double>::infinity();
  int l2 = d.l2;
  for (auto& pt : points) {
    report.samples++;
    for (size_t i = 0; i < system.sys.polys.size(); ++i) {
      double v = system.sys.polys[i].eval(pt);
      double prod = std::abs(group_products(d, std::vector<double>(pt.begin(), pt.begin() + d.n))[i]);
      report.max_residual = std::max(report.max_residual, std::abs(v) / (1.0 + prod));
    }
    Eigen::MatrixXd J = system.jacobian(pt);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
    auto sigma = svd.singularValues();
    double top = sigma(0);
    double floor_sv = std::numeric_limits<double>::epsilon() * std::max(top, 1.0);
    double next = sigma.size() > l2 ? std::max((double)sigma(l2), floor_sv) : floor_sv;
    double gap = sigma(l2 - 1) / next;
    report.min_rank_gap = std::min(report.min_rank_gap, gap);
    if (gap <= tol.rank_gap) {
      std::ostringstream os;
      os << "rank gap " << gap << " below " << tol.rank_gap;
      report.failures.push_back({os.str(), pt});
    }
  }
  return report;
}

SampleReport image_check(const MomentData& d, int grid, uint64_t rng_seed,
                         const Tolerances& tol) {
  SampleReport report;
  SampleRng rng(rng_seed);
  auto fs = d.surface_polys();
  Box box;
  if (d.region) {
    box = d.region->bounding_box();
  } else {
    box = {Rat(-10), Rat(10), Rat(-10), Rat(10)};
  }
  Rat w = box.xmax - box.xmin, hgt = box.ymax - box.ymin;
  for (int gi = 0; gi < grid; ++gi) {
    auto stream = rng.stream((uint64_t)gi);
    std::uniform_int_distribution<long> jit(1, (1 << 20) - 1);
    for (int gj = 0; gj < grid; ++gj) {
      Rat fx = (Rat(gi) + Rat(jit(stream), 1 << 20)) / Rat(grid);
      Rat fy = (Rat(gj) + Rat(jit(stream), 1 << 20)) / Rat(grid);
      Rat x = box.xmin + fx * w;
      Rat y = box.ymin + fy * hgt;
      report.samples++;
      std::vector<double> xd{x.to_double(), y.to_double()};
      std::vector<double> prods;
      Stratum st;
      if (d.region) {
        st = locate_point(*d.region, QuadExt(x), QuadExt(y));
        prods = group_products(d, xd);
      } else {
        if (d.n != 2)
          throw ValidationError("the grid image check is only available for two variables");
        std::vector<Rat> pt{x, y};
        std::vector<Poly> fs = d.surface_polys();
        prods = group_products(d, xd);
        bool zero = false, neg = false;
        for (auto& f : fs) {
          int s = f.eval(pt).sign();
          if (s == 0) zero = true;
          if (s < 0) neg = true;
        }
        st.kind = zero   ? Stratum::Kind::OnCircles
                  : neg  ? Stratum::Kind::Outside
                         : Stratum::Kind::Interior;
      }
      double min_prod = *std::min_element(prods.begin(), prods.end());
      double min_abs = std::abs(prods[0]);
      for (double p : prods) min_abs = std::min(min_abs, std::abs(p));
      if (st.kind == Stratum::Kind::Interior) {
        if (min_prod < -tol.boundary_band)
          report.failures.push_back({"interior point with a negative group product", xd});
      } else if (st.kind == Stratum::Kind::Outside) {
        if (min_prod > tol.boundary_band)
          report.failures.push_back({"point outside the closure but every group product is positive", xd});
      } else {
        if (min_abs > tol.boundary_band)
          report.failures.push_back({"boundary point with no near-zero group product", xd});
      }
    }
  }
  return report;
}

namespace {

// Orthonormal basis of the kernel of J (right singular vectors past the rank).
Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& J, int rank) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(J.cols() - rank);
}

}  // namespace

TangentPointReport tangent_check_at(const MomentData& d, const std::vector<double>& boundary_point,
                                    const std::vector<int>& stratum_circles,
                                    const Tolerances& tol) {
  if (!d.region) throw ValidationError("tangent checks need exact circle data");
  TangentPointReport rep;
  rep.l3 = (int)stratum_circles.size();
  std::vector<double> x = boundary_point;
  rep.x = x;

  std::set<int> zero_groups;
  for (int id : stratum_circles) zero_groups.insert(d.group_map[id - 1]);
  auto prods = group_products(d, x);
  std::mt19937_64 stream = SampleRng(20240915).stream(0);
  std::vector<double> q = fiber_point(d, x, prods, zero_groups, stream);

  System system(d);
  Eigen::MatrixXd J = system.jacobian(q);
  Eigen::MatrixXd K = kernel_basis(J, d.l2);  // ambient x m
  Eigen::MatrixXd P = K.topRows(d.n);         // pushforward directions
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(P, Eigen::ComputeFullU);
  auto sigma = svd.singularValues();
  double top = std::max(1.0, (double)sigma(0));
  int dim = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma(i) > 1e-7 * top) dim++;
  rep.pushforward_dim = dim;

  int expected = d.n - rep.l3;
  if (dim != expected) {
    rep.pass = false;
    rep.note = "pushforward dimension " + std::to_string(dim) + ", expected " +
               std::to_string(expected);
    return rep;
  }
  if (expected == 0) {
    rep.principal_angle = 0.0;
    rep.pass = true;
    return rep;
  }
  // principal angles between the pushforward span and the stratum tangent
  Eigen::MatrixXd U1 = svd.matrixU().leftCols(expected);
  Eigen::MatrixXd U2(d.n, expected);
  if (rep.l3 == 1) {
    const Circle& c = d.region->circle_by_id(stratum_circles[0]);
    double tx = -(x[1] - c.cy.to_double());
    double ty = x[0] - c.cx.to_double();
    double norm = std::hypot(tx, ty);
    U2(0, 0) = tx / norm;
    U2(1, 0) = ty / norm;
  } else {  // interior control: full space
    U2.setIdentity();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> angles(U1.transpose() * U2);
  double smallest_cos = angles.singularValues().minCoeff();
  rep.principal_angle = std::acos(std::min(1.0, smallest_cos));
  rep.pass = rep.principal_angle < tol.tangent_angle;
  if (!rep.pass) rep.note = "principal angle too large";
  return rep;
}

TangentPointReport tangent_check_at(const MomentData& d, const std::vector<Rat>& boundary_point,
                                    const std::vector<int>& stratum_circles,
                                    const Tolerances& tol) {
  std::vector<double> x;
  for (auto& c : boundary_point) x.push_back(c.to_double());
  return tangent_check_at(d, x, stratum_circles, tol);
}

std::vector<TangentPointReport> tangent_suite(const MomentData& d, int count,
                                              const Tolerances& tol) {
  if (!d.region) throw ValidationError("tangent checks need exact circle data");
  const Region& region = *d.region;
  std::vector<TangentPointReport> out;
  // boundary crossings first
  for (auto& cr : region.crossings) {
    if (!cr.in_closure) continue;
    out.push_back(tangent_check_at(d, std::vector<double>{cr.x.to_double(), cr.y.to_double()},
                                   {cr.c1, cr.c2}, tol));
  }
  // then rational points spread along each circle, kept when on the boundary
  int per_circle = std::max(1, count / std::max(1, (int)region.circles.size()));
  for (auto& c : region.circles) {
    int found = 0;
    for (int k = 1; found < per_circle && k <= 64 * per_circle; ++k) {
      Rat t(2 * k - 64 * per_circle, 64);
      Rat denom = Rat(1) + t.squared();
      Rat px = c.cx + c.radius * (Rat(1) - t.squared()) / denom;
      Rat py = c.cy + Rat(2) * c.radius * t / denom;
      Stratum st = locate_point(region, QuadExt(px), QuadExt(py));
      if (st.kind != Stratum::Kind::OnCircles || st.circles.size() != 1) continue;
      out.push_back(tangent_check_at(d, {px, py}, {c.id}, tol));
      found++;
    }
  }
  if ((int)out.size() > count) out.resize(count);
  return out;
}

double pole_second_difference(const Circle& c, PoleSide side, double h) {
  double r = c.radius.to_double();
  double sgn = side == PoleSide::Right ? 1.0 : -1.0;
  auto x_of = [&](double dy) { return sgn * std::sqrt(std::max(0.0, r * r - dy * dy)); };
  return (x_of(h) - 2.0 * x_of(0.0) + x_of(-h)) / (h * h);
}

double sweep_direction_norm(const MomentData& d, const std::vector<double>& x,
                            const std::vector<int>& zero_groups, uint64_t rng_seed) {
  System system(d);
  auto prods = group_products(d, x);
  std::set<int> zg(zero_groups.begin(), zero_groups.end());
  std::mt19937_64 stream = SampleRng(rng_seed).stream(1);
  std::vector<double> q = fiber_point(d, x, prods, zg, stream);
  Eigen::MatrixXd J = system.jacobian(q);
  Eigen::MatrixXd K = kernel_basis(J, d.l2);
  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(system.ambient);
  e1(0) = 1.0;
  return (K.transpose() * e1).norm();
}

namespace {

struct FloatInterval {
  double lo, hi;
  bool traced = false;
  int chain = -1;
};

std::vector<FloatInterval> float_slice(const std::vector<Circle>& circles, double t) {
  std::vector<double> walls;
  for (auto& c : circles) {
    double cx = c.cx.to_double(), cy = c.cy.to_double(), r = c.radius.to_double();
    double disc = r * r - (t - cx) * (t - cx);
    if (disc <= 0) continue;
    double s = std::sqrt(disc);
    walls.push_back(cy - s);
    walls.push_back(cy + s);
  }
  std::sort(walls.begin(), walls.end());
  auto positive = [&](double y) {
    for (auto& c : circles) {
      double cx = c.cx.to_double(), cy = c.cy.to_double(), r = c.radius.to_double();
      double v = (t - cx) * (t - cx) + (y - cy) * (y - cy) - r * r;
      if (c.orient == Orientation::Inside) v = -v;
      if (v <= 0) return false;
    }
    return true;
  };
  std::vector<FloatInterval> out;
  for (size_t g = 0; g + 1 < walls.size() + 2; ++g) {
    double lo = g == 0 ? -1e30 : walls[g - 1];
    double hi = g == walls.size() ? 1e30 : walls[g];
    if (hi - lo < 1e-14) continue;
    double mid = g == 0 ? hi - 1.0 : (g == walls.size() ? lo + 1.0 : (lo + hi) / 2);
    if (positive(mid)) out.push_back({lo, hi});
  }
  return out;
}

bool overlaps(const FloatInterval& a, const FloatInterval& b) {
  return std::max(a.lo, b.lo) < std::min(a.hi, b.hi) - 1e-13;
}

}  // namespace

namespace {

struct OracleColumn {
  double x = 0;
  int event_after = -1;  // event index at the boundary following this column
  std::vector<FloatInterval> ints;
};

// Bipartite overlap components between two interval columns.
struct OverlapComponents {
  std::vector<int> lcomp, rcomp;
  int count = 0;
};

OverlapComponents components(const std::vector<FloatInterval>& L,
                             const std::vector<FloatInterval>& R) {
  OverlapComponents oc;
  oc.lcomp.assign(L.size(), -1);
  oc.rcomp.assign(R.size(), -1);
  for (size_t i = 0; i < L.size(); ++i) {
    if (oc.lcomp[i] >= 0) continue;
    std::vector<size_t> stackL{i}, stackR;
    oc.lcomp[i] = oc.count;
    while (!stackL.empty() || !stackR.empty()) {
      if (!stackL.empty()) {
        size_t a = stackL.back();
        stackL.pop_back();
        for (size_t j = 0; j < R.size(); ++j)
          if (oc.rcomp[j] < 0 && overlaps(L[a], R[j])) {
            oc.rcomp[j] = oc.count;
            stackR.push_back(j);
          }
      } else {
        size_t b = stackR.back();
        stackR.pop_back();
        for (size_t a2 = 0; a2 < L.size(); ++a2)
          if (oc.lcomp[a2] < 0 && overlaps(L[a2], R[b])) {
            oc.lcomp[a2] = oc.count;
            stackL.push_back(a2);
          }
      }
    }
    oc.count++;
  }
  for (size_t j = 0; j < R.size(); ++j)
    if (oc.rcomp[j] < 0) oc.rcomp[j] = oc.count++;
  return oc;
}

}  // namespace

OracleGraph reeb_oracle(const MomentData& d, int resolution) {
  if (!d.region) throw ValidationError("the Reeb oracle needs exact circle data");
  if (resolution < 2) throw ResolutionError("resolution must be at least 2");
  for (int dim : d.dim_map)
    if (dim == 0)
      throw DisconnectedFiberError("the oracle requires every group dimension to be positive");
  const Region& region = *d.region;
  std::vector<double> ev, ev_y;
  {
    singular_x_values(d);  // genericity gate
    const RegionTrace& tr = *region.trace;
    for (int e : tr.touched) {
      ev.push_back(tr.events[e].x.to_double());
      ev_y.push_back(tr.events[e].y.to_double());
    }
  }
  if (ev.size() < 2) throw ResolutionError("fewer than two singular abscissae");

  struct Column {
    double x;
    std::vector<FloatInterval> ints;
  };
  std::vector<Column> cols;
  auto make_column = [&](double x) {
    Column c;
    c.x = x;
    c.ints = float_slice(region.circles, x);
    return c;
  };
  // regular samples per gap plus a tight column on each side of every event
  for (size_t g = 0; g + 1 < ev.size(); ++g) {
    double a = ev[g], b = ev[g + 1];
    double delta = (b - a) / (resolution * 256.0);
    cols.push_back(make_column(a + delta));
    for (int k = 0; k < resolution; ++k) cols.push_back(make_column(a + (b - a) * (k + 0.5) / resolution));
    cols.push_back(make_column(b - delta));
  }
  std::sort(cols.begin(), cols.end(), [](const Column& a, const Column& b) { return a.x < b.x; });
  // event index sitting between consecutive columns, recomputed on demand
  auto event_between = [&](double xa, double xb) {
    for (size_t e = 0; e < ev.size(); ++e)
      if (xa < ev[e] && ev[e] < xb) return (int)e;
    return -1;
  };

  // flood the seed component, refining plain boundaries until every traced
  // interval continues unambiguously
  double sx = region.seed_x.to_double(), sy = region.seed_y.to_double();
  int inserted = 0;
  for (int round = 0;; ++round) {
    if (round > 200) throw ResolutionError("oracle refinement did not stabilize");
    for (auto& c : cols)
      for (auto& iv : c.ints) iv.traced = false;
    size_t seed_col = 0;
    for (size_t c = 1; c < cols.size(); ++c)
      if (std::abs(cols[c].x - sx) < std::abs(cols[seed_col].x - sx)) seed_col = c;
    bool found = false;
    for (auto& iv : cols[seed_col].ints)
      if (iv.lo < sy && sy < iv.hi) {
        iv.traced = true;
        found = true;
      }
    if (!found) throw ResolutionError("no interval contains the seed");
    for (bool changed = true; changed;) {
      changed = false;
      for (size_t c = 0; c + 1 < cols.size(); ++c) {
        auto oc = components(cols[c].ints, cols[c + 1].ints);
        std::vector<bool> mark(oc.count, false);
        for (size_t i = 0; i < cols[c].ints.size(); ++i)
          if (cols[c].ints[i].traced) mark[oc.lcomp[i]] = true;
        for (size_t j = 0; j < cols[c + 1].ints.size(); ++j)
          if (cols[c + 1].ints[j].traced) mark[oc.rcomp[j]] = true;
        for (size_t i = 0; i < cols[c].ints.size(); ++i)
          if (mark[oc.lcomp[i]] && !cols[c].ints[i].traced) {
            cols[c].ints[i].traced = true;
            changed = true;
          }
        for (size_t j = 0; j < cols[c + 1].ints.size(); ++j)
          if (mark[oc.rcomp[j]] && !cols[c + 1].ints[j].traced) {
            cols[c + 1].ints[j].traced = true;
            changed = true;
          }
      }
    }
    // look for traced intervals without a unique traced partner across a
    // plain boundary; refine those boundaries and flood again
    std::vector<double> refine_at;
    for (size_t c = 0; c + 1 < cols.size(); ++c) {
      if (event_between(cols[c].x, cols[c + 1].x) >= 0) continue;
      auto& L = cols[c].ints;
      auto& R = cols[c + 1].ints;
      bool bad = false;
      std::vector<int> rhits(R.size(), 0);
      for (auto& li : L) {
        if (!li.traced) continue;
        int hits = 0;
        for (size_t j = 0; j < R.size(); ++j)
          if (R[j].traced && overlaps(li, R[j])) {
            hits++;
            rhits[j]++;
          }
        if (hits != 1) bad = true;
      }
      for (size_t j = 0; j < R.size(); ++j)
        if (R[j].traced && rhits[j] != 1) bad = true;
      if (bad) refine_at.push_back((cols[c].x + cols[c + 1].x) / 2.0);
    }
    if (refine_at.empty()) break;
    inserted += (int)refine_at.size();
    if (inserted > 4000)
      throw ResolutionError("interval tracking stayed ambiguous under refinement");
    for (double x : refine_at) cols.push_back(make_column(x));
    std::sort(cols.begin(), cols.end(), [](const Column& a, const Column& b) { return a.x < b.x; });
  }

  OracleGraph out;
  out.graph.n = (int)ev.size();
  out.vertex_x = ev;
  std::vector<int> chain_start;
  std::map<int, int> open;  // traced interval index in the current column -> chain
  for (size_t i = 0; i < cols[0].ints.size(); ++i) {
    if (!cols[0].ints[i].traced) continue;
    open[(int)i] = (int)chain_start.size();
    chain_start.push_back(0);
  }
  for (size_t c = 0; c + 1 < cols.size(); ++c) {
    auto& L = cols[c].ints;
    auto& R = cols[c + 1].ints;
    int vid = event_between(cols[c].x, cols[c + 1].x);
    std::map<int, int> next_open;
    if (vid < 0) {
      for (size_t i = 0; i < L.size(); ++i) {
        if (!L[i].traced) continue;
        int hit = -1;
        for (size_t j = 0; j < R.size(); ++j)
          if (R[j].traced && overlaps(L[i], R[j])) hit = (int)j;
        if (hit < 0 || next_open.count(hit))
          throw ResolutionError("interval tracking is ambiguous away from singular abscissae");
        next_open[hit] = open.at((int)i);
      }
    } else {
      double y0 = ev_y[vid];
      // slice exactly at the event: a pass-through tube is a vertex iff its
      // interval there carries the event point as an endpoint
      auto mid = float_slice(region.circles, ev[vid]);
      auto oc = components(L, R);
      for (int comp = 0; comp < oc.count; ++comp) {
        std::vector<size_t> ls, rs;
        for (size_t i = 0; i < L.size(); ++i)
          if (oc.lcomp[i] == comp && L[i].traced) ls.push_back(i);
        for (size_t j = 0; j < R.size(); ++j)
          if (oc.rcomp[j] == comp && R[j].traced) rs.push_back(j);
        if (ls.empty() && rs.empty()) continue;
        bool carries = false;
        if (ls.size() == 1 && rs.size() == 1) {
          for (auto& m : mid) {
            if (!overlaps(m, L[ls[0]]) || !overlaps(m, R[rs[0]])) continue;
            if (std::abs(m.lo - y0) < 1e-7 || std::abs(m.hi - y0) < 1e-7) carries = true;
          }
        } else {
          carries = true;  // births, deaths, merges, splits
        }
        if (!carries) {
          next_open[(int)rs[0]] = open.at((int)ls[0]);
          continue;
        }
        for (size_t i : ls) out.graph.add_edge(chain_start[open.at((int)i)], vid);
        for (size_t j : rs) {
          next_open[(int)j] = (int)chain_start.size();
          chain_start.push_back(vid);
        }
      }
    }
    open = std::move(next_open);
  }
  for (auto& [idx, chain] : open) out.graph.add_edge(chain_start[chain], (int)ev.size() - 1);
  return out;
}

bool x_order_isomorphic(const ReebGraph& exact, const OracleGraph& oracle) {
  if ((int)exact.vertices.size() != oracle.graph.n) return false;
  std::multiset<std::pair<int, int>> a, b;
  for (auto& e : exact.edges) a.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  for (auto& [u, v] : oracle.graph.edges) b.insert({std::min(u, v), std::max(u, v)});
  return a == b;
}

}  // namespace momentforge
