#ifndef TORLINK_TORUS_MAP_HPP
#define TORLINK_TORUS_MAP_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace torlink {

using Offset = std::array<int, 2>;

// Combinatorial map on the torus.  Darts are 0..n_darts-1; `pair_` is the
// edge involution alpha, `rot` the counterclockwise rotation sigma (next
// dart at the same vertex).  Each dart carries the Z^2 translation crossed
// from its tail vertex to its head vertex in the universal cover, with
// offset(alpha(d)) == -offset(d).
//
// Face traversal convention: next dart in a face is rot[pair_[d]].
class TorusMap {
 public:
  TorusMap(int n_vertices, std::vector<int> dart_vertex, std::vector<int> rot,
           std::vector<int> pair, std::vector<Offset> dart_offset);

  int n_vertices() const { return n_vertices_; }
  int n_darts() const { return static_cast<int>(pair_.size()); }
  int n_edges() const { return n_darts() / 2; }
  int n_faces() const { return static_cast<int>(faces_.size()); }

  int vertex_of(int d) const { return dart_vertex_[d]; }
  int rot(int d) const { return rot_[d]; }
  int pair(int d) const { return pair_[d]; }
  Offset offset(int d) const { return dart_offset_[d]; }

  // Darts at a vertex in counterclockwise rotation order, starting from the
  // smallest dart id.
  std::vector<int> vertex_darts(int v) const;

  bool four_valent() const;

  struct Face {
    std::vector<int> darts;   // in traversal order, starting at min dart
    Offset total_offset;      // (0,0) iff contractible
  };

  // Faces sorted by their minimal dart id.
  const std::vector<Face>& faces() const { return faces_; }
  // Face index containing a dart.
  int face_of(int d) const { return face_of_[d]; }
  // Cumulative translation from the face's base dart to dart d's tail
  // vertex, along the face traversal.
  Offset face_lift(int d) const { return face_lift_[d]; }

  bool all_faces_contractible() const;

  // Proper 2-coloring of faces (adjacent faces across every edge differ).
  // Returns one class id in {0,1} per face, with face 0 in class 0.
  // Throws ValidationError if the face adjacency graph is not bipartite.
  std::vector<int> checkerboard() const;

 private:
  void validate_and_build();

  int n_vertices_;
  std::vector<int> dart_vertex_;
  std::vector<int> rot_;
  std::vector<int> pair_;
  std::vector<Offset> dart_offset_;

  std::vector<Face> faces_;
  std::vector<int> face_of_;
  std::vector<Offset> face_lift_;
};

// Geometric helper for defining maps: vertices get positions in the plane
// (coordinates in the chosen lattice basis), edges get an endpoint pair and
// a Z^2 offset, and the rotation at each vertex is recovered by sorting
// darts by direction angle.
class MapBuilder {
 public:
  // Lattice basis vectors as Euclidean columns.
  MapBuilder(double b1x, double b1y, double b2x, double b2y);

  int add_vertex(double x, double y);  // position in lattice coordinates
  void add_edge(int tail, int head, int ax, int ay);

  TorusMap build() const;

 private:
  double b1x_, b1y_, b2x_, b2y_;
  std::vector<std::array<double, 2>> pos_;
  struct E {
    int tail, head, ax, ay;
  };
  std::vector<E> edges_;
};

// Built-in fundamental domains: "square-weave", "triaxial",
// "rhombitrihexagonal".
TorusMap build_builtin(std::string_view name);
const std::vector<std::string>& builtin_names();

// Checkerboard class shaded by convention for a builtin: square-weave takes
// the class of the face left of dart 0, triaxial the hexagon class,
// rhombitrihexagonal the square class.
int builtin_shaded_class(std::string_view name, const TorusMap& m);

// A map document: the map plus the optional face-class annotation from the
// file (face indices of the shaded class; empty when absent).
struct MapDocument {
  TorusMap map;
  std::vector<int> shaded_faces;
};

// Text serialization (see docs/map-format.md); round-trip bit-exact.
std::string export_map(const TorusMap& m, const std::vector<int>& shaded_faces = {});
MapDocument load_map(std::string_view text);

}  // namespace torlink

#endif
