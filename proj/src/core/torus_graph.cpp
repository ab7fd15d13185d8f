#include "core/torus_graph.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"

namespace torlink {

namespace {

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

int floordiv(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int floormod(int a, int b) { return a - floordiv(a, b) * b; }

}  // namespace

void TorusGraph::validate() const {
  if (n_vertices <= 0) throw ValidationError("graph needs at least one vertex");
  for (const auto& e : edges) {
    if (e.tail < 0 || e.tail >= n_vertices || e.head < 0 || e.head >= n_vertices)
      throw ValidationError("edge endpoint out of range");
    if (e.weight <= 0) throw ValidationError("edge weights must be positive");
  }
  if (!color.empty()) {
    if (static_cast<int>(color.size()) != n_vertices)
      throw ValidationError("bipartition label count mismatch");
    for (const auto& e : edges)
      if (color[e.tail] == color[e.head])
        throw ValidationError("bipartition violated by an edge");
  }
}

std::vector<int> TorusGraph::degrees() const {
  std::vector<int> deg(n_vertices, 0);
  for (const auto& e : edges) {
    ++deg[e.tail];
    ++deg[e.head];
  }
  return deg;
}

bool TorusGraph::is_connected_quotient() const {
  DSU dsu(n_vertices);
  for (const auto& e : edges) dsu.unite(e.tail, e.head);
  for (int v = 1; v < n_vertices; ++v)
    if (dsu.find(v) != dsu.find(0)) return false;
  return true;
}

void FiniteGraph::validate() const {
  if (n_vertices <= 0) throw ValidationError("graph needs at least one vertex");
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n_vertices || e.v < 0 || e.v >= n_vertices)
      throw ValidationError("edge endpoint out of range");
    if (e.weight <= 0) throw ValidationError("edge weights must be positive");
  }
}

bool FiniteGraph::is_connected() const {
  DSU dsu(n_vertices);
  for (const auto& e : edges)
    if (e.u != e.v) dsu.unite(e.u, e.v);
  for (int v = 1; v < n_vertices; ++v)
    if (dsu.find(v) != dsu.find(0)) return false;
  return true;
}

TorusGraph tait_graph(const TorusMap& m, const std::vector<int>& face_class,
                      int cls) {
  if (!m.four_valent())
    throw ValidationError("Tait graph requires a 4-valent map");
  if (static_cast<int>(face_class.size()) != m.n_faces())
    throw ValidationError("face class vector size mismatch");

  std::vector<int> tait_index(m.n_faces(), -1);
  int nv = 0;
  for (int f = 0; f < m.n_faces(); ++f)
    if (face_class[f] == cls) tait_index[f] = nv++;
  if (nv == 0) throw ValidationError("chosen class has no faces");

  TorusGraph g;
  g.n_vertices = nv;
  for (int v = 0; v < m.n_vertices(); ++v) {
    auto ds = m.vertex_darts(v);
    // Corner faces must alternate classes around the crossing.
    for (int i = 0; i < 4; ++i)
      if (face_class[m.face_of(ds[i])] == face_class[m.face_of(ds[(i + 1) % 4])])
        throw ValidationError("face classes do not alternate at a crossing");
    int i0 = face_class[m.face_of(ds[0])] == cls ? 0 : 1;
    int da = ds[i0], db = ds[i0 + 2];
    TorusGraph::Edge e;
    e.tail = tait_index[m.face_of(da)];
    e.head = tait_index[m.face_of(db)];
    e.offset = {m.face_lift(da)[0] - m.face_lift(db)[0],
                m.face_lift(da)[1] - m.face_lift(db)[1]};
    g.edges.push_back(e);
  }
  g.validate();
  return g;
}

TorusGraph dual_graph(const TorusMap& m, const std::vector<int>& face_class,
                      int cls) {
  return tait_graph(m, face_class, 1 - cls);
}

OverlaidGraph overlaid_graph(const TorusMap& m) {
  if (!m.four_valent())
    throw ValidationError("overlaid graph requires a 4-valent map");
  if (!m.all_faces_contractible())
    throw ValidationError("overlaid graph requires contractible faces");

  OverlaidGraph out;
  out.n_black = m.n_faces();
  out.n_white = m.n_vertices();
  out.graph.n_vertices = out.n_black + out.n_white;
  out.graph.color.assign(out.graph.n_vertices, 0);
  for (int v = 0; v < out.n_white; ++v) out.graph.color[out.n_black + v] = 1;
  // One edge per corner; corners are indexed by darts, so edge index == dart.
  for (int d = 0; d < m.n_darts(); ++d) {
    TorusGraph::Edge e;
    e.tail = m.face_of(d);
    e.head = out.n_black + m.vertex_of(d);
    e.offset = m.face_lift(d);
    out.graph.edges.push_back(e);
  }
  for (int d = 0; d < m.n_darts(); ++d) {
    if (d > m.pair(d)) continue;
    out.quads.push_back({d, m.rot(d), m.pair(d), m.rot(m.pair(d))});
  }
  out.graph.validate();
  return out;
}

FiniteGraph torus_quotient(const TorusGraph& g, int n) {
  if (n <= 0) throw ValidationError("quotient order must be positive");
  g.validate();
  FiniteGraph h;
  h.n_vertices = g.n_vertices * n * n;
  h.planar = false;
  auto idx = [&](int v, int i, int j) { return v + g.n_vertices * (i + n * j); };
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (const auto& e : g.edges) {
        FiniteGraph::Edge fe;
        fe.u = idx(e.tail, i, j);
        fe.v = idx(e.head, floormod(i + e.offset[0], n),
                   floormod(j + e.offset[1], n));
        fe.weight = e.weight;
        h.edges.push_back(fe);
      }
  return h;
}

FiniteGraph planar_cut(const TorusGraph& g, int n) {
  if (n <= 0) throw ValidationError("cut size must be positive");
  g.validate();
  FiniteGraph h;
  h.n_vertices = g.n_vertices * n * n;
  h.planar = true;
  auto idx = [&](int v, int i, int j) { return v + g.n_vertices * (i + n * j); };
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (const auto& e : g.edges) {
        int ti = i + e.offset[0], tj = j + e.offset[1];
        if (ti < 0 || ti >= n || tj < 0 || tj >= n) continue;
        FiniteGraph::Edge fe;
        fe.u = idx(e.tail, i, j);
        fe.v = idx(e.head, ti, tj);
        fe.weight = e.weight;
        h.edges.push_back(fe);
      }
  return h;
}

TorusGraph blow_up(const TorusGraph& g, int k) {
  if (k <= 0) throw ValidationError("blow-up factor must be positive");
  g.validate();
  TorusGraph b;
  b.n_vertices = g.n_vertices * k * k;
  auto idx = [&](int v, int i, int j) { return v + g.n_vertices * (i + k * j); };
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i)
      for (const auto& e : g.edges) {
        int ti = i + e.offset[0], tj = j + e.offset[1];
        TorusGraph::Edge be;
        be.tail = idx(e.tail, i, j);
        be.head = idx(e.head, floormod(ti, k), floormod(tj, k));
        be.offset = {floordiv(ti, k), floordiv(tj, k)};
        be.weight = e.weight;
        b.edges.push_back(be);
      }
  return b;
}

TorusGraph square_lattice() {
  TorusGraph g;
  g.n_vertices = 1;
  g.edges.push_back({0, 0, {1, 0}, 1});
  g.edges.push_back({0, 0, {0, 1}, 1});
  return g;
}

TorusGraph triangular_lattice() {
  TorusGraph g;
  g.n_vertices = 1;
  g.edges.push_back({0, 0, {1, 0}, 1});
  g.edges.push_back({0, 0, {0, 1}, 1});
  g.edges.push_back({0, 0, {1, 1}, 1});
  return g;
}

TorusGraph hexagonal_lattice() {
  TorusGraph g;
  g.n_vertices = 2;
  g.edges.push_back({0, 1, {0, 0}, 1});
  g.edges.push_back({0, 1, {1, 0}, 1});
  g.edges.push_back({0, 1, {0, 1}, 1});
  return g;
}

}  // namespace torlink
