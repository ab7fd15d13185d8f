#include <cmath>
#include <random>

#include "core/error.hpp"
#include "core/exact_count.hpp"
#include "core/torus_graph.hpp"
#include "core/torus_map.hpp"
#include "doctest.h"

using namespace torlink;

namespace {

FiniteGraph cycle(int n) {
  FiniteGraph g;
  g.n_vertices = n;
  for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n, 1});
  return g;
}

FiniteGraph complete(int n) {
  FiniteGraph g;
  g.n_vertices = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j, 1});
  return g;
}

FiniteGraph random_graph(std::mt19937& rng, int max_v, int max_e) {
  std::uniform_int_distribution<int> nv(2, max_v);
  FiniteGraph g;
  g.n_vertices = nv(rng);
  std::uniform_int_distribution<int> ne(1, max_e), pick(0, g.n_vertices - 1),
      wt(1, 3);
  int m = ne(rng);
  for (int i = 0; i < m; ++i)
    g.edges.push_back({pick(rng), pick(rng), wt(rng)});
  return g;
}

TorusGraph builtin_tait(const std::string& name) {
  TorusMap m = build_builtin(name);
  auto cls = m.checkerboard();
  return tait_graph(m, cls, builtin_shaded_class(name, m));
}

}  // namespace

TEST_CASE("determinants") {
  CHECK(det_bareiss({{mpz_class(7)}}) == 7);
  CHECK(det_bareiss({{1, 2}, {3, 4}}) == -2);
  CHECK(det_modular({{1, 2}, {3, 4}}) == -2);
  IntMatrix zero2 = {{0, 0}, {0, 0}};
  CHECK(det_bareiss(zero2) == 0);
  CHECK(det_modular(zero2) == 0);

  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> entry(-50, 50), dim(1, 7);
  for (int it = 0; it < 40; ++it) {
    int n = dim(rng);
    IntMatrix m(n, std::vector<mpz_class>(n));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    CHECK(det_bareiss(m) == det_modular(m));
  }

  // A determinant too large for one prime exercises the CRT path.
  IntMatrix big(6, std::vector<mpz_class>(6, 0));
  mpz_class huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 10, 30);
  for (int i = 0; i < 6; ++i) big[i][i] = huge + i;
  mpz_class want = 1;
  for (int i = 0; i < 6; ++i) want *= huge + i;
  CHECK(det_bareiss(big) == want);
  CHECK(det_modular(big) == want);
}

TEST_CASE("small graph spanning tree counts") {
  CHECK(brute_force_tree_count(cycle(3)) == 3);
  CHECK(tree_count(cycle(3)) == 3);
  CHECK(brute_force_tree_count(cycle(4)) == 4);
  CHECK(tree_count(complete(4)) == 16);  // Cayley: 4^2
  CHECK(brute_force_tree_count(complete(4)) == 16);
  CHECK(tree_count(complete(5)) == 125);

  // Single vertex: the empty tree.
  FiniteGraph trivial;
  trivial.n_vertices = 1;
  CHECK(tree_count(trivial) == 1);
  CHECK(brute_force_tree_count(trivial) == 1);
  // Loops do not affect the count.
  trivial.edges.push_back({0, 0, 1});
  CHECK(tree_count(trivial) == 1);

  // Disconnected graphs have no spanning tree.
  FiniteGraph disc;
  disc.n_vertices = 3;
  disc.edges.push_back({0, 1, 1});
  CHECK(tree_count(disc) == 0);
  CHECK(brute_force_tree_count(disc) == 0);

  // Weighted: a doubled edge counts twice.
  FiniteGraph dbl;
  dbl.n_vertices = 2;
  dbl.edges.push_back({0, 1, 2});
  CHECK(tree_count(dbl) == 2);
  CHECK(brute_force_tree_count(dbl) == 2);
}

TEST_CASE("route agreement on random graphs") {
  std::mt19937 rng(31415);
  for (int it = 0; it < 60; ++it) {
    FiniteGraph g = random_graph(rng, 6, 12);
    mpz_class oracle = brute_force_tree_count(g);
    CHECK(tree_count(g) == oracle);
    CHECK(tree_count_bareiss(g) == oracle);
    CHECK(tree_count_modular(g) == oracle);
  }
}

TEST_CASE("quotients and cuts of the builtin links") {
  // Square weave, n = 1: both Tait vertices joined by 4 parallel edges.
  TorusGraph w = builtin_tait("square-weave");
  CHECK(tree_count(torus_quotient(w, 1)) == 4);
  CHECK(brute_force_tree_count(torus_quotient(w, 1)) == 4);
  CHECK(tree_count(torus_quotient(w, 2)) == 4096);
  CHECK(brute_force_tree_count(torus_quotient(w, 2)) == 4096);

  // Triaxial (triangular lattice): known small values 1, 128.
  TorusGraph t = builtin_tait("triaxial");
  CHECK(tree_count(torus_quotient(t, 1)) == 1);
  CHECK(tree_count(torus_quotient(t, 2)) == 128);
  CHECK(brute_force_tree_count(torus_quotient(t, 2)) == 128);

  // Planar cuts of the square lattice: 1, 4, 192 (2x2 and 3x3 grids).
  TorusGraph sq = square_lattice();
  CHECK(tree_count(planar_cut(sq, 1)) == 1);
  CHECK(tree_count(planar_cut(sq, 2)) == 4);
  CHECK(brute_force_tree_count(planar_cut(sq, 2)) == 4);
  CHECK(tree_count(planar_cut(sq, 3)) == 192);
  CHECK(brute_force_tree_count(planar_cut(sq, 3)) == 192);
}

TEST_CASE("smith normal form") {
  auto s1 = smith_normal_form({{2, 0}, {0, 0}});
  CHECK(s1.divisors == std::vector<mpz_class>{2});
  CHECK(s1.zeros == 1);

  // Laplacian of C_3: divisors 1, 3 and one zero.
  auto s2 = smith_normal_form(laplacian_matrix(cycle(3)));
  CHECK(s2.divisors == std::vector<mpz_class>{1, 3});
  CHECK(s2.zeros == 1);
  CHECK(s2.nonzero_product() == 3);

  // Laplacian of K_4: divisors 1, 4, 4 and one zero.
  auto s3 = smith_normal_form(laplacian_matrix(complete(4)));
  CHECK(s3.divisors == std::vector<mpz_class>{1, 4, 4});
  CHECK(s3.zeros == 1);
  CHECK(s3.nonzero_product() == 16);

  auto s4 = smith_normal_form({{0}});
  CHECK(s4.divisors.empty());
  CHECK(s4.zeros == 1);

  // Divisibility chain and |det| invariance on random square matrices.
  std::mt19937 rng(999);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int it = 0; it < 50; ++it) {
    IntMatrix m(4, std::vector<mpz_class>(4));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    mpz_class d = det_bareiss(m);
    auto s = smith_normal_form(m);
    for (std::size_t i = 0; i + 1 < s.divisors.size(); ++i)
      CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
    if (d != 0) {
      CHECK(s.zeros == 0);
      CHECK(s.nonzero_product() == abs(d));
    } else {
      CHECK(s.zeros > 0);
    }
  }
}

TEST_CASE("torsion order equals the tree count on connected quotients") {
  for (const auto& name : {"square-weave", "triaxial", "rhombitrihexagonal"}) {
    TorusGraph g = builtin_tait(name);
    for (int n = 1; n <= 4; ++n) {
      FiniteGraph h = torus_quotient(g, n);
      CHECK(torsion_order(h) == tree_count(h));
    }
  }
  std::mt19937 rng(171717);
  for (int it = 0; it < 30; ++it) {
    FiniteGraph g = random_graph(rng, 6, 14);
    if (!g.is_connected()) continue;
    CHECK(torsion_order(g) == tree_count(g));
  }
}

TEST_CASE("fourier factorized tree counts") {
  TorusGraph tri = triangular_lattice();
  CHECK(fourier_tree_count(tri, 1) == 1);
  CHECK(fourier_tree_count(tri, 2) == 128);
  TorusGraph sq = square_lattice();
  for (const TorusGraph& g : {sq, tri, hexagonal_lattice(),
                              builtin_tait("square-weave"),
                              builtin_tait("rhombitrihexagonal")}) {
    for (int n = 1; n <= 4; ++n)
      CHECK(fourier_tree_count(g, n) == tree_count(torus_quotient(g, n)));
  }
  // Log variant agrees with the exact count.
  mpz_class tau = fourier_tree_count(sq, 8);
  double lg = fourier_log_tree_count(sq, 8);
  double lg_exact =
      mpz_get_d(tau.get_mpz_t()) == HUGE_VAL
          ? 0
          : std::log(mpz_get_d(tau.get_mpz_t()));
  CHECK(lg == doctest::Approx(lg_exact).epsilon(1e-9));
}

TEST_CASE("blow up preserves quotient tree counts") {
  for (const TorusGraph& g : {square_lattice(), triangular_lattice(),
                              builtin_tait("triaxial")}) {
    TorusGraph big = blow_up(g, 2);
    for (int n = 1; n <= 2; ++n)
      CHECK(tree_count(torus_quotient(big, n)) ==
            tree_count(torus_quotient(g, 2 * n)));
  }
}

TEST_CASE("input validation") {
  FiniteGraph g = complete(4);
  g.edges[0].weight = mpq_class(1, 3);
  CHECK_THROWS_AS(laplacian_matrix(g), ValidationError);

  FiniteGraph many = complete(8);  // 28 edges
  CHECK_THROWS_AS(brute_force_tree_count(many), ValidationError);

  FiniteGraph disc;
  disc.n_vertices = 2;
  CHECK_THROWS_AS(torsion_order(disc), ValidationError);
}
