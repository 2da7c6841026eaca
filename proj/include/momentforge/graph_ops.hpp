#pragma once

#include <string>
#include <utility>
#include <vector>

namespace momentforge {

// Finite loop-free multigraph on vertices 0..n-1.
struct MultiGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // unordered pairs, u != v

  void add_edge(int u, int v);
  int vertex_count() const { return n; }
  int edge_count() const { return (int)edges.size(); }
  std::vector<int> degrees() const;
  bool connected() const;
  std::string str() const;  // "V n" header then one "u v" line per edge

  static MultiGraph path(int vertices);
  static MultiGraph cycle(int vertices);
};

bool is_isomorphic(const MultiGraph& g, const MultiGraph& h);

// |E| - |V| + 1; throws NotConnectedError on disconnected input.
int betti1(const MultiGraph& g);

// Suppress degree-2 vertices (stopping where suppression would create a
// loop); two graphs are homeomorphic iff their smoothings are isomorphic.
MultiGraph smooth_degree_two(const MultiGraph& g);
bool is_homeomorphic(const MultiGraph& g, const MultiGraph& h);

// True iff some sequence of free-edge removals (drop a degree-1 vertex with
// its edge) turns g into a graph homeomorphic to h.
bool collapses_onto(const MultiGraph& g, const MultiGraph& h);

// Path on 2n'+2 labeled vertices plus n' pendant leaves: j1 leaves attached
// at labels 3, 5, ..., 2*j1+1 and j2 leaves at 2*j1+2, ..., 2*j1+2*j2.
MultiGraph build_gp(int nprime, int j1, int j2);

struct GraphDecoration {
  enum class Kind { Pendant, FactorPendant, Chord };
  int edge = 0;  // index into the base edge list
  Kind kind = Kind::Pendant;
  // for pendants: attach the leaf to the first (left) or second subdivision vertex
  bool attach_first = false;
};

// Subdivide each decorated edge twice; pendant kinds also hang a leaf off one
// of the two new vertices. Multiple decorations on one edge apply in order
// along it. Throws UnknownEdgeError.
MultiGraph predict_decorated(const MultiGraph& base, const std::vector<GraphDecoration>& decorations);

}  // namespace momentforge
