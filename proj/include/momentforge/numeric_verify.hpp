#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "momentforge/reeb.hpp"

namespace momentforge {

// Seedable, splittable sample streams: stream(i) is independent of stream(j)
// and identical across serial and parallel runs.
class SampleRng {
public:
  explicit SampleRng(uint64_t master) : master_(master) {}
  std::mt19937_64 stream(uint64_t index) const;

private:
  uint64_t master_;
};

struct Tolerances {
  double residual = 1e-9;
  double rank_gap = 1e3;
  double tangent_angle = 1e-5;
  double boundary_band = 1e-6;
};

struct Witness {
  std::string what;
  std::vector<double> point;
};

struct SampleReport {
  int samples = 0;
  double max_residual = 0.0;
  double min_rank_gap = 0.0;
  std::vector<Witness> failures;
  bool pass() const { return failures.empty(); }
};

// k ambient points over the strictly interior x = p, each on the fiber torus
// of spheres; throws NotInteriorError.
std::vector<std::vector<double>> sample_fiber(const MomentData& d, const std::vector<Rat>& p,
                                              int k, uint64_t rng_seed);

// Numerical rank of the emitted system's Jacobian at each point must be l2.
SampleReport rank_check(const MomentData& d, const std::vector<std::vector<double>>& points,
                        const Tolerances& tol = {});

// Grid classification over the bounding box: interior x carry fibers
// (all group products positive), points outside the closure reject them.
SampleReport image_check(const MomentData& d, int grid, uint64_t rng_seed,
                         const Tolerances& tol = {});

struct TangentPointReport {
  std::vector<double> x;
  int l3 = 0;
  int pushforward_dim = 0;
  double principal_angle = 0.0;
  bool pass = false;
  std::string note;
};

// Pushforward of the tangent space at a fiber point over a boundary point:
// dimension must be n - l3 and match the stratum's tangent space.
TangentPointReport tangent_check_at(const MomentData& d, const std::vector<double>& boundary_point,
                                    const std::vector<int>& stratum_circles,
                                    const Tolerances& tol = {});
TangentPointReport tangent_check_at(const MomentData& d, const std::vector<Rat>& boundary_point,
                                    const std::vector<int>& stratum_circles,
                                    const Tolerances& tol = {});

// Samples ~count boundary points (arcs and all boundary crossings).
std::vector<TangentPointReport> tangent_suite(const MomentData& d, int count,
                                              const Tolerances& tol = {});

struct OracleGraph {
  MultiGraph graph;
  std::vector<double> vertex_x;  // sorted ascending
};

// Independent floating-point Reeb construction: marches sample lines between
// singular abscissae and tracks interval components by overlap.
OracleGraph reeb_oracle(const MomentData& d, int resolution);

// Vertex-count equality plus edge-multiset equality under the x-order
// identification of vertices.
bool x_order_isomorphic(const ReebGraph& exact, const OracleGraph& oracle);

// Second difference of the sweep coordinate along a circle at its pole; the
// nondegeneracy witness for the function's critical submanifolds.
double pole_second_difference(const Circle& c, PoleSide side, double h);

// ||projection of the sweep direction onto the tangent space|| at a fiber
// point over x; near 0 exactly over the singular abscissae.
double sweep_direction_norm(const MomentData& d, const std::vector<double>& x,
                            const std::vector<int>& zero_groups, uint64_t rng_seed);

}  // namespace momentforge
