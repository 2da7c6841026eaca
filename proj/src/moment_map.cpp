#include "momentforge/moment_map.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "momentforge/errors.hpp"

namespace momentforge {

int FiberClass::total_dim() const {
  return std::accumulate(sphere_dims.begin(), sphere_dims.end(), 0);
}

std::string FiberClass::str() const {
  if (sphere_dims.empty()) return "point";
  std::ostringstream os;
  for (size_t i = 0; i < sphere_dims.size(); ++i) {
    if (i) os << " x ";
    os << "S^" << sphere_dims[i];
  }
  return os.str();
}

namespace {

void check_maps(int l1, const std::vector<int>& group_map, const std::vector<int>& dim_map) {
  if ((int)group_map.size() != l1)
    throw ValidationError("group map must assign a group to each of the " + std::to_string(l1) +
                          " surfaces");
  if (dim_map.empty()) throw ValidationError("dimension map is empty");
  int l2 = (int)dim_map.size();
  for (int g : group_map)
    if (g < 1 || g > l2)
      throw ValidationError("group index " + std::to_string(g) + " out of range 1.." +
                            std::to_string(l2));
  for (int d : dim_map)
    if (d < 0) throw ValidationError("negative sphere dimension in dimension map");
}

}  // namespace

MomentData MomentData::from_region(Region region, std::vector<int> group_map,
                                   std::vector<int> dim_map) {
  check_maps((int)region.circles.size(), group_map, dim_map);
  MomentData d;
  d.n = 2;
  d.l1 = (int)region.circles.size();
  d.l2 = (int)dim_map.size();
  d.m = d.n + std::accumulate(dim_map.begin(), dim_map.end(), 0);
  d.region = std::move(region);
  d.group_map = std::move(group_map);
  d.dim_map = std::move(dim_map);
  d.hypotheses_verified = true;
  return d;
}

MomentData MomentData::from_general(GeneralRegion general, std::vector<int> group_map,
                                    std::vector<int> dim_map) {
  check_maps((int)general.polys.size(), group_map, dim_map);
  if (general.nvars < 2) throw ValidationError("general data needs at least two variables");
  if ((int)general.seed.size() != general.nvars)
    throw ValidationError("seed arity does not match the variable count");
  for (auto& p : general.polys)
    if ((int)p.arity() != general.nvars)
      throw ValidationError("polynomial arity does not match the variable count");
  MomentData d;
  d.n = general.nvars;
  d.l1 = (int)general.polys.size();
  d.l2 = (int)dim_map.size();
  d.m = d.n + std::accumulate(dim_map.begin(), dim_map.end(), 0);
  d.general = std::move(general);
  d.group_map = std::move(group_map);
  d.dim_map = std::move(dim_map);
  d.hypotheses_verified = false;
  return d;
}

std::vector<Poly> MomentData::surface_polys() const {
  if (region) {
    std::vector<Poly> out;
    for (auto& c : region->circles) out.push_back(circle_poly(c));
    return out;
  }
  return general->polys;
}

std::vector<std::string> MomentData::ambient_variables() const {
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  for (int i = 1; i <= l2; ++i)
    for (int k = 1; k <= dim_map[i - 1] + 1; ++k)
      vars.push_back("y_" + std::to_string(i) + "_" + std::to_string(k));
  return vars;
}

ValidationReport validate_moment_data(const MomentData& d) {
  ValidationReport report;
  auto add = [&](const std::string& code, const std::string& msg) {
    report.issues.push_back({code, msg});
  };
  std::set<int> hit(d.group_map.begin(), d.group_map.end());
  for (int i = 1; i <= d.l2; ++i)
    if (!hit.count(i))
      add("not_surjective", "group " + std::to_string(i) + " has no surface assigned");
  if (d.region) {
    for (auto& cr : d.region->crossings) {
      if (!cr.in_closure) continue;
      int g1 = d.group_map[cr.c1 - 1], g2 = d.group_map[cr.c2 - 1];
      if (g1 == g2)
        add("injectivity_violation",
            "circles " + std::to_string(cr.c1) + " and " + std::to_string(cr.c2) +
                " cross at x=" + cr.x.decimal(6) + " but share group " + std::to_string(g1));
    }
  }
  return report;
}

EmittedSystem emit_system(const MomentData& d) {
  EmittedSystem sys;
  sys.variables = d.ambient_variables();
  sys.ambient_dim = (int)sys.variables.size();
  if (sys.ambient_dim != d.m + d.l2)
    throw InternalError("ambient dimension bookkeeping is off");

  std::vector<Poly> fs = d.surface_polys();
  // positions of x variables inside the ambient list are 0..n-1
  std::vector<size_t> xpos(d.n);
  for (int i = 0; i < d.n; ++i) xpos[i] = (size_t)i;

  size_t ybase = (size_t)d.n;
  for (int i = 1; i <= d.l2; ++i) {
    Poly prod = Poly::constant(sys.variables, Rat(1));
    std::ostringstream factored;
    bool first = true;
    for (int j = 0; j < d.l1; ++j) {
      if (d.group_map[j] != i) continue;
      Poly fj = fs[j].reindex(sys.variables, xpos);
      prod = prod * fj;
      factored << (first ? "(" : "*(") << fs[j].str() << ")";
      first = false;
    }
    int coords = d.dim_map[i - 1] + 1;
    for (int k = 0; k < coords; ++k) {
      Poly y = Poly::variable(sys.variables, ybase + (size_t)k);
      prod = prod - y * y;
      factored << " - " << sys.variables[ybase + (size_t)k] << "^2";
    }
    ybase += (size_t)coords;
    sys.polys.push_back(std::move(prod));
    sys.factored.push_back(factored.str());
  }
  return sys;
}

FiberClass fiber_class_for_stratum(const MomentData& d, const std::vector<int>& on_circles) {
  std::set<int> excluded;
  for (int id : on_circles) {
    if (id < 1 || id > d.l1) throw InternalError("surface id out of range");
    excluded.insert(d.group_map[id - 1]);
  }
  FiberClass fc;
  for (int i = 1; i <= d.l2; ++i)
    if (!excluded.count(i)) fc.sphere_dims.push_back(d.dim_map[i - 1]);
  return fc;
}

FiberClass fiber_class_at(const MomentData& d, const QuadExt& x, const QuadExt& y) {
  if (!d.region) throw ValidationError("fiber classification needs exact circle data");
  Stratum s = locate_point(*d.region, x, y);
  if (s.kind == Stratum::Kind::Outside)
    throw OutsideError("point (" + x.str() + ", " + y.str() +
                       ") is outside the closure of the region");
  if (s.kind == Stratum::Kind::Interior) return fiber_class_for_stratum(d, {});
  return fiber_class_for_stratum(d, s.circles);
}

int fiber_dim_bound(const MomentData& d) {
  int bound = d.m - d.n;
  auto check = [&](const std::vector<int>& stratum) {
    FiberClass fc = fiber_class_for_stratum(d, stratum);
    if (fc.total_dim() > bound)
      throw InternalError("stratum fiber dimension exceeds m - n");
  };
  check({});
  if (d.region) {
    for (auto& c : d.region->circles) check({c.id});
    for (auto& cr : d.region->crossings)
      if (cr.in_closure) check({cr.c1, cr.c2});
  }
  return bound;
}

}  // namespace momentforge
