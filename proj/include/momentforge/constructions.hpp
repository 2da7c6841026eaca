#pragma once

#include <map>
#include <optional>
#include <vector>

#include "momentforge/reeb.hpp"

namespace momentforge {

struct Decoration {
  int host_circle = 0;
  int host_edge = 0;  // Reeb edge id in the base graph
  enum class Kind { Pendant, Chord } kind = Kind::Pendant;
  int count = 1;
  std::optional<int> new_group_dim;
};

struct ConstructionResult {
  MomentData data;
  MultiGraph predicted;
  std::vector<Decoration> decorations;
};

// Hang `alloc[edge]` small circles on each decorated Reeb edge of a base with
// one group and mutually disjoint circles; the new circles form group 2 of
// dimension total_dim - dim(1) - 2. Predicted graph: each circle subdivides
// its edge twice and adds a leaf.
ConstructionResult attach_pendant_circles(const MomentData& base,
                                          const std::map<int, int>& alloc, int total_dim);

// One pendant circle on the given edge, carrying a fresh group of dimension
// new_dim >= 1. Works for any valid base with all group dimensions >= 1.
ConstructionResult attach_factor_circle(const MomentData& base, int edge, int new_dim);

// Chord variant of attach_pendant_circles: each new circle crosses its host
// twice and keeps both vertical poles outside the closure, so each adds two
// degree-2 vertices and no leaf.
ConstructionResult attach_chord_circles(const MomentData& base, const std::map<int, int>& alloc,
                                        int total_dim);

// Chord variant of attach_factor_circle.
ConstructionResult attach_chord_factor(const MomentData& base, int edge, int new_dim);

// The disk family: nprime pendant circles on the unit disk, j1 on the left
// arc and j2 on the right. The computed Reeb graph realizes build_gp.
ConstructionResult construct_mt6(int nprime, int j1, int j2, int total_dim = 4);

}  // namespace momentforge
