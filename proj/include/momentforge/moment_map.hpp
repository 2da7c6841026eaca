#pragma once

#include <optional>
#include <string>
#include <vector>

#include "momentforge/arrangement.hpp"

namespace momentforge {

// Diffeomorphism type of a preimage: a product of spheres, or a point when
// the list is empty.
struct FiberClass {
  std::vector<int> sphere_dims;
  int total_dim() const;
  bool is_point() const { return sphere_dims.empty(); }
  std::string str() const;
  bool operator==(const FiberClass&) const = default;
};

// User-supplied hypersurface data in n >= 2 variables. Accepted without
// exact validation; only emission and numeric checks apply.
struct GeneralRegion {
  int nvars = 2;
  std::vector<Poly> polys;  // f_j over x1..xn
  std::vector<Rat> seed;
};

struct MomentData {
  std::optional<Region> region;
  std::optional<GeneralRegion> general;
  std::vector<int> group_map;  // 1-based group per surface, size l1
  std::vector<int> dim_map;    // sphere dimension per group, size l2
  int n = 2, l1 = 0, l2 = 0, m = 0;
  bool hypotheses_verified = false;

  static MomentData from_region(Region region, std::vector<int> group_map,
                                std::vector<int> dim_map);
  static MomentData from_general(GeneralRegion general, std::vector<int> group_map,
                                 std::vector<int> dim_map);

  bool exact() const { return region.has_value(); }
  // f_j in variables x1..xn, order matching group_map
  std::vector<Poly> surface_polys() const;
  std::vector<std::string> ambient_variables() const;  // x1..xn, y_i_k
};

ValidationReport validate_moment_data(const MomentData& d);

struct EmittedSystem {
  std::vector<std::string> variables;
  std::vector<Poly> polys;            // expanded, one per group
  std::vector<std::string> factored;  // display form per group
  int ambient_dim = 0;
};

EmittedSystem emit_system(const MomentData& d);

FiberClass fiber_class_for_stratum(const MomentData& d, const std::vector<int>& on_circles);
// Throws OutsideError when the point is not in the closure of the region.
FiberClass fiber_class_at(const MomentData& d, const QuadExt& x, const QuadExt& y);

// Returns m - n after checking every stratum's fiber dimension against it.
int fiber_dim_bound(const MomentData& d);

}  // namespace momentforge
