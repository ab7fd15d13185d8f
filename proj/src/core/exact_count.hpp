#ifndef TORLINK_EXACT_COUNT_HPP
#define TORLINK_EXACT_COUNT_HPP

#include <gmpxx.h>

#include <vector>

#include "core/torus_graph.hpp"

namespace torlink {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Dense exact determinant, fraction-free (Bareiss) elimination.
mpz_class det_bareiss(IntMatrix m);

// Dense exact determinant by CRT over ~62-bit primes, prime count driven by
// the Hadamard bound.
mpz_class det_modular(const IntMatrix& m);

// Full graph Laplacian (loops dropped).  Requires integer weights.
IntMatrix laplacian_matrix(const FiniteGraph& g);

// Exact spanning tree count: determinant of a reduced Laplacian.
// Disconnected graphs give 0.
mpz_class tree_count(const FiniteGraph& g);
mpz_class tree_count_bareiss(const FiniteGraph& g);
mpz_class tree_count_modular(const FiniteGraph& g);

// Exhaustive test oracle; requires at most 20 non-loop edges.
mpz_class brute_force_tree_count(const FiniteGraph& g);

// Nonzero elementary divisors in divisibility order plus the count of zero
// diagonal entries.
struct ElementaryDivisors {
  std::vector<mpz_class> divisors;
  int zeros = 0;

  mpz_class nonzero_product() const;
};

ElementaryDivisors smith_normal_form(IntMatrix m);

// Order of the torsion part of coker(Laplacian): product of nonzero
// elementary divisors.  Requires a connected graph.
mpz_class torsion_order(const FiniteGraph& g);

// Spanning tree count of torus_quotient(g, n) by Fourier factorization:
// tau = [prod over (j,k) != (0,0) of D(zeta^j, zeta^k)] * tau(H_1) / n^2,
// evaluated in high-precision floating arithmetic and rounded with an
// integrality check (precision doubles on failure, capped at 8x the initial
// estimate).
mpz_class fourier_tree_count(const TorusGraph& g, int n);

// Natural log of the same quantity, double precision (no rounding step).
double fourier_log_tree_count(const TorusGraph& g, int n);

}  // namespace torlink

#endif
