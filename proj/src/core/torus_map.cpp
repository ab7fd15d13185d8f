#include "core/torus_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "core/error.hpp"

namespace torlink {

TorusMap::TorusMap(int n_vertices, std::vector<int> dart_vertex,
                   std::vector<int> rot, std::vector<int> pair,
                   std::vector<Offset> dart_offset)
    : n_vertices_(n_vertices),
      dart_vertex_(std::move(dart_vertex)),
      rot_(std::move(rot)),
      pair_(std::move(pair)),
      dart_offset_(std::move(dart_offset)) {
  validate_and_build();
}

void TorusMap::validate_and_build() {
  const int nd = n_darts();
  if (nd == 0 || nd % 2 != 0)
    throw ValidationError("dart count must be positive and even");
  if (static_cast<int>(dart_vertex_.size()) != nd ||
      static_cast<int>(rot_.size()) != nd ||
      static_cast<int>(dart_offset_.size()) != nd)
    throw ValidationError("inconsistent dart array sizes");
  if (n_vertices_ <= 0) throw ValidationError("vertex count must be positive");

  for (int d = 0; d < nd; ++d) {
    if (dart_vertex_[d] < 0 || dart_vertex_[d] >= n_vertices_)
      throw ValidationError("dart vertex out of range");
    if (pair_[d] < 0 || pair_[d] >= nd || rot_[d] < 0 || rot_[d] >= nd)
      throw ValidationError("dart permutation value out of range");
    if (pair_[d] == d) throw ValidationError("edge involution has a fixed point");
    if (pair_[pair_[d]] != d)
      throw ValidationError("edge pairing is not an involution");
    if (dart_offset_[pair_[d]][0] != -dart_offset_[d][0] ||
        dart_offset_[pair_[d]][1] != -dart_offset_[d][1])
      throw ValidationError("edge offsets do not negate under reversal");
  }

  // rot must permute the darts of each vertex in a single cycle.
  std::vector<int> seen(nd, 0);
  for (int d = 0; d < nd; ++d) {
    if (seen[d]) continue;
    int v = dart_vertex_[d];
    int cur = d;
    int len = 0;
    do {
      if (seen[cur])
        throw ValidationError("rotation is not a permutation of vertex darts");
      if (dart_vertex_[cur] != v)
        throw ValidationError("rotation mixes darts of different vertices");
      seen[cur] = 1;
      cur = rot_[cur];
      ++len;
      if (len > nd) throw ValidationError("rotation cycle does not close");
    } while (cur != d);
  }
  for (int v = 0, covered = 0; v < n_vertices_; ++v, covered = 0) {
    for (int d = 0; d < nd; ++d) covered += (dart_vertex_[d] == v);
    if (covered == 0) throw ValidationError("isolated vertex in map");
  }

  // Face extraction with next = rot[pair[d]].
  face_of_.assign(nd, -1);
  face_lift_.assign(nd, Offset{0, 0});
  faces_.clear();
  for (int d = 0; d < nd; ++d) {
    if (face_of_[d] != -1) continue;
    Face f;
    f.total_offset = {0, 0};
    Offset lift{0, 0};
    int cur = d;
    do {
      if (face_of_[cur] != -1)
        throw ValidationError("face traversal revisits a dart");
      face_of_[cur] = static_cast<int>(faces_.size());
      face_lift_[cur] = lift;
      f.darts.push_back(cur);
      lift[0] += dart_offset_[cur][0];
      lift[1] += dart_offset_[cur][1];
      cur = rot_[pair_[cur]];
    } while (cur != d);
    f.total_offset = lift;
    faces_.push_back(std::move(f));
  }

  if (n_vertices_ - n_edges() + n_faces() != 0)
    throw ValidationError("Euler characteristic is not zero (not a torus map)");
}

std::vector<int> TorusMap::vertex_darts(int v) const {
  int start = -1;
  for (int d = 0; d < n_darts(); ++d)
    if (dart_vertex_[d] == v) {
      start = d;
      break;
    }
  std::vector<int> out;
  int cur = start;
  do {
    out.push_back(cur);
    cur = rot_[cur];
  } while (cur != start);
  return out;
}

bool TorusMap::four_valent() const {
  std::vector<int> deg(n_vertices_, 0);
  for (int d = 0; d < n_darts(); ++d) ++deg[dart_vertex_[d]];
  return std::all_of(deg.begin(), deg.end(), [](int x) { return x == 4; });
}

bool TorusMap::all_faces_contractible() const {
  for (const auto& f : faces_)
    if (f.total_offset[0] != 0 || f.total_offset[1] != 0) return false;
  return true;
}

std::vector<int> TorusMap::checkerboard() const {
  std::vector<int> cls(n_faces(), -1);
  std::vector<int> stack;
  for (int f0 = 0; f0 < n_faces(); ++f0) {
    if (cls[f0] != -1) continue;
    cls[f0] = 0;
    stack.push_back(f0);
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int d : faces_[f].darts) {
        int g = face_of_[pair_[d]];
        if (cls[g] == -1) {
          cls[g] = 1 - cls[f];
          stack.push_back(g);
        } else if (cls[g] == cls[f]) {
          throw ValidationError(
              "face adjacency is not 2-colorable (non-checkerboard diagram)");
        }
      }
    }
  }
  return cls;
}

MapBuilder::MapBuilder(double b1x, double b1y, double b2x, double b2y)
    : b1x_(b1x), b1y_(b1y), b2x_(b2x), b2y_(b2y) {}

int MapBuilder::add_vertex(double x, double y) {
  pos_.push_back({x, y});
  return static_cast<int>(pos_.size()) - 1;
}

void MapBuilder::add_edge(int tail, int head, int ax, int ay) {
  edges_.push_back({tail, head, ax, ay});
}

TorusMap MapBuilder::build() const {
  const int ne = static_cast<int>(edges_.size());
  const int nv = static_cast<int>(pos_.size());
  std::vector<int> dart_vertex(2 * ne), pair(2 * ne);
  std::vector<Offset> off(2 * ne);
  std::vector<double> angle(2 * ne);
  for (int i = 0; i < ne; ++i) {
    const auto& e = edges_[i];
    dart_vertex[2 * i] = e.tail;
    dart_vertex[2 * i + 1] = e.head;
    pair[2 * i] = 2 * i + 1;
    pair[2 * i + 1] = 2 * i;
    off[2 * i] = {e.ax, e.ay};
    off[2 * i + 1] = {-e.ax, -e.ay};
    double lx = pos_[e.head][0] + e.ax - pos_[e.tail][0];
    double ly = pos_[e.head][1] + e.ay - pos_[e.tail][1];
    double ex = lx * b1x_ + ly * b2x_;
    double ey = lx * b1y_ + ly * b2y_;
    angle[2 * i] = std::atan2(ey, ex);
    angle[2 * i + 1] = std::atan2(-ey, -ex);
  }
  std::vector<int> rot(2 * ne, -1);
  for (int v = 0; v < nv; ++v) {
    std::vector<int> darts;
    for (int d = 0; d < 2 * ne; ++d)
      if (dart_vertex[d] == v) darts.push_back(d);
    std::sort(darts.begin(), darts.end(),
              [&](int a, int b) { return angle[a] < angle[b]; });
    for (std::size_t k = 0; k + 1 < darts.size(); ++k)
      if (angle[darts[k + 1]] - angle[darts[k]] < 1e-9)
        throw ValidationError("coincident edge directions at a vertex");
    for (std::size_t k = 0; k < darts.size(); ++k)
      rot[darts[k]] = darts[(k + 1) % darts.size()];
  }
  return TorusMap(nv, std::move(dart_vertex), std::move(rot), std::move(pair),
                  std::move(off));
}

namespace {

TorusMap make_square_weave() {
  MapBuilder b(1, 0, 0, 1);
  // 2x2 block of the square lattice: one lattice vertex per crossing.
  int v[2][2];
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) v[i][j] = b.add_vertex((i + 0.5) / 2, (j + 0.5) / 2);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) {
      b.add_edge(v[i][j], v[(i + 1) % 2][j], i == 1 ? 1 : 0, 0);
      b.add_edge(v[i][j], v[i][(j + 1) % 2], 0, j == 1 ? 1 : 0);
    }
  return b.build();
}

TorusMap make_triaxial() {
  // Trihexagonal projection: crossings at edge midpoints of the triangular
  // lattice with basis e1, e2 at 60 degrees.
  MapBuilder b(1, 0, 0.5, std::sqrt(3.0) / 2);
  int A = b.add_vertex(0.5, 0.0);   // midpoint of e1
  int B = b.add_vertex(0.0, 0.5);   // midpoint of e2
  int C = b.add_vertex(0.5, 0.5);   // midpoint of e1+e2
  b.add_edge(A, B, 0, 0);
  b.add_edge(B, C, 0, 0);
  b.add_edge(C, A, 0, 0);
  b.add_edge(C, B, 1, 0);
  b.add_edge(C, A, 0, 1);
  b.add_edge(B, A, -1, 1);
  return b.build();
}

TorusMap make_rhombitrihexagonal() {
  // 3.4.6.4 tiling: one hexagon per triangular-lattice cell, vertices at
  // angles 30 + 60k degrees, radius r = 1/(1+sqrt 3); squares sit between
  // adjacent hexagons, rung edges close them.
  const double s3 = std::sqrt(3.0);
  const double r = 1.0 / (1.0 + s3);
  MapBuilder b(1, 0, 0.5, s3 / 2);
  int P[6];
  for (int k = 0; k < 6; ++k) {
    double th = std::numbers::pi * (30.0 + 60.0 * k) / 180.0;
    double ex = r * std::cos(th), ey = r * std::sin(th);
    // Euclidean -> lattice coordinates for basis ((1,0),(1/2,s3/2)).
    double v = ey / (s3 / 2);
    double u = ex - 0.5 * v;
    P[k] = b.add_vertex(u, v);
  }
  for (int k = 0; k < 6; ++k) b.add_edge(P[k], P[(k + 1) % 6], 0, 0);
  b.add_edge(P[0], P[2], 1, 0);
  b.add_edge(P[5], P[3], 1, 0);
  b.add_edge(P[1], P[3], 0, 1);
  b.add_edge(P[0], P[4], 0, 1);
  b.add_edge(P[2], P[4], -1, 1);
  b.add_edge(P[1], P[5], -1, 1);
  return b.build();
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"square-weave", "triaxial",
                                                 "rhombitrihexagonal"};
  return names;
}

TorusMap build_builtin(std::string_view name) {
  if (name == "square-weave") return make_square_weave();
  if (name == "triaxial") return make_triaxial();
  if (name == "rhombitrihexagonal") return make_rhombitrihexagonal();
  throw ParseError("unknown builtin link: " + std::string(name));
}

int builtin_shaded_class(std::string_view name, const TorusMap& m) {
  auto cls = m.checkerboard();
  if (name == "square-weave") return cls[m.face_of(0)];
  if (name == "triaxial") {
    for (int f = 0; f < m.n_faces(); ++f)
      if (m.faces()[f].darts.size() == 6) return cls[f];
  }
  if (name == "rhombitrihexagonal") {
    for (int f = 0; f < m.n_faces(); ++f)
      if (m.faces()[f].darts.size() == 4) return cls[f];
  }
  throw ParseError("unknown builtin link: " + std::string(name));
}

std::string export_map(const TorusMap& m, const std::vector<int>& shaded_faces) {
  std::ostringstream os;
  os << "torlink-map 1\n";
  os << "vertices " << m.n_vertices() << "\n";
  os << "darts " << m.n_darts() << "\n";
  for (int v = 0; v < m.n_vertices(); ++v) {
    os << "rot " << v << " :";
    for (int d : m.vertex_darts(v)) os << " " << d;
    os << "\n";
  }
  for (int d = 0; d < m.n_darts(); ++d) {
    if (d > m.pair(d)) continue;
    os << "edge " << d << " " << m.pair(d) << " " << m.offset(d)[0] << " "
       << m.offset(d)[1] << "\n";
  }
  if (!shaded_faces.empty()) {
    std::vector<int> fs = shaded_faces;
    std::sort(fs.begin(), fs.end());
    os << "shaded";
    for (int f : fs) os << " " << f;
    os << "\n";
  }
  return os.str();
}

MapDocument load_map(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int nv = -1, nd = -1;
  bool got_header = false;
  std::vector<std::vector<int>> rot_lines;
  struct ERec {
    int d1, d2, ax, ay;
  };
  std::vector<ERec> erecs;
  std::vector<int> shaded;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    auto fail = [&](const std::string& why) {
      throw ParseError("map line " + std::to_string(lineno) + ": " + why);
    };
    if (tok == "torlink-map") {
      int ver;
      if (!(ls >> ver) || ver != 1) fail("unsupported format version");
      got_header = true;
    } else if (tok == "vertices") {
      if (!(ls >> nv)) fail("bad vertex count");
    } else if (tok == "darts") {
      if (!(ls >> nd)) fail("bad dart count");
    } else if (tok == "rot") {
      int v;
      std::string colon;
      if (!(ls >> v >> colon) || colon != ":") fail("bad rot record");
      if (v != static_cast<int>(rot_lines.size()))
        fail("rot records out of order");
      std::vector<int> ds;
      int d;
      while (ls >> d) ds.push_back(d);
      if (ds.empty()) fail("empty rotation");
      rot_lines.push_back(std::move(ds));
    } else if (tok == "edge") {
      ERec e;
      if (!(ls >> e.d1 >> e.d2 >> e.ax >> e.ay)) fail("bad edge record");
      erecs.push_back(e);
    } else if (tok == "shaded") {
      int f;
      while (ls >> f) shaded.push_back(f);
    } else {
      fail("unknown record '" + tok + "'");
    }
  }
  if (!got_header) throw ParseError("missing torlink-map header");
  if (nv <= 0 || nd <= 0) throw ParseError("missing vertices/darts counts");
  if (static_cast<int>(rot_lines.size()) != nv)
    throw ParseError("rot record count does not match vertex count");

  std::vector<int> dart_vertex(nd, -1), rot(nd, -1), pair(nd, -1);
  std::vector<Offset> off(nd, Offset{0, 0});
  for (int v = 0; v < nv; ++v) {
    const auto& ds = rot_lines[v];
    for (std::size_t k = 0; k < ds.size(); ++k) {
      int d = ds[k];
      if (d < 0 || d >= nd) throw ParseError("dart id out of range in rot");
      if (dart_vertex[d] != -1)
        throw ValidationError("dart appears twice in rotation records");
      dart_vertex[d] = v;
      rot[d] = ds[(k + 1) % ds.size()];
    }
  }
  for (const auto& e : erecs) {
    if (e.d1 < 0 || e.d1 >= nd || e.d2 < 0 || e.d2 >= nd)
      throw ParseError("dart id out of range in edge");
    if (pair[e.d1] != -1 || pair[e.d2] != -1)
      throw ValidationError("dart appears in more than one edge");
    pair[e.d1] = e.d2;
    pair[e.d2] = e.d1;
    off[e.d1] = {e.ax, e.ay};
    off[e.d2] = {-e.ax, -e.ay};
  }
  for (int d = 0; d < nd; ++d) {
    if (dart_vertex[d] == -1)
      throw ValidationError("dart missing from rotation records");
    if (pair[d] == -1) throw ValidationError("dart missing from edge records");
  }
  MapDocument doc{TorusMap(nv, std::move(dart_vertex), std::move(rot),
                           std::move(pair), std::move(off)),
                  std::move(shaded)};
  for (int f : doc.shaded_faces)
    if (f < 0 || f >= doc.map.n_faces())
      throw ValidationError("shaded face index out of range");
  return doc;
}

}  // namespace torlink
