#ifndef TORLINK_TORUS_GRAPH_HPP
#define TORLINK_TORUS_GRAPH_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "core/torus_map.hpp"

namespace torlink {

// Z^2-periodic weighted multigraph: one fundamental domain of vertices,
// directed edge representatives with translation offsets.  Reversing a
// representative negates its offset.
struct TorusGraph {
  struct Edge {
    int tail = 0;
    int head = 0;
    Offset offset{0, 0};
    mpq_class weight = 1;
  };

  int n_vertices = 0;
  std::vector<Edge> edges;
  // Bipartition labels (0 = black, 1 = white), empty when not bipartite.
  std::vector<int> color;

  void validate() const;
  std::vector<int> degrees() const;  // loops count twice
  bool is_connected_quotient() const;  // connectivity of the n=1 quotient
};

// Finite weighted multigraph (self-loops permitted).
struct FiniteGraph {
  struct Edge {
    int u = 0;
    int v = 0;
    mpq_class weight = 1;
  };

  int n_vertices = 0;
  std::vector<Edge> edges;
  bool planar = false;  // planar cut vs torus quotient tag

  void validate() const;
  bool is_connected() const;  // loops do not connect
};

// Tait graph on the chosen checkerboard class: one vertex per face of that
// class, one edge per crossing, offsets from universal-cover lifts.
// `face_class` contains the per-face class ids from TorusMap::checkerboard
// and `cls` selects the class (0 or 1).
TorusGraph tait_graph(const TorusMap& m, const std::vector<int>& face_class,
                      int cls);

// Tait graph of the opposite class.
TorusGraph dual_graph(const TorusMap& m, const std::vector<int>& face_class,
                      int cls);

// Balanced bipartite overlaid graph: black vertices are faces (Tait and dual
// vertices together), white vertices are crossings, one edge per face corner.
// Edges are indexed by the corner's dart id for downstream face structure.
struct OverlaidGraph {
  TorusGraph graph;     // vertices: faces first (black), then crossings (white)
  int n_black = 0;
  int n_white = 0;
  // Quadrilateral faces of the overlaid graph, one per edge of the map; each
  // entry lists the four edge indices of `graph.edges` around the quad.
  std::vector<std::array<int, 4>> quads;
};

OverlaidGraph overlaid_graph(const TorusMap& m);

// Finite quotient by (nZ)^2: n^2 copies of the fundamental domain with
// wraparound determined by offsets mod n.
FiniteGraph torus_quotient(const TorusGraph& g, int n);

// Induced graph on an n-by-n window of fundamental domains; edges leaving
// the window are dropped.  Planar.
FiniteGraph planar_cut(const TorusGraph& g, int n);

// Periodic graph with a k-by-k block of fundamental domains as the new
// domain.  torus_quotient(blow_up(g,k), n) == torus_quotient(g, k*n).
TorusGraph blow_up(const TorusGraph& g, int k);

// Canonical one-domain lattices used by the entropy corollary.
TorusGraph square_lattice();      // 1 vertex, loops (1,0),(0,1)
TorusGraph triangular_lattice();  // 1 vertex, loops (1,0),(0,1),(1,1)
TorusGraph hexagonal_lattice();   // 2 vertices, edges (0,0),(1,0),(0,1)

}  // namespace torlink

#endif
