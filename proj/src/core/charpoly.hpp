#ifndef TORLINK_CHARPOLY_HPP
#define TORLINK_CHARPOLY_HPP

#include <vector>

#include "core/laurent.hpp"
#include "core/torus_graph.hpp"

namespace torlink {

// Laplacian determinant polynomial D(x,y) = det L(x,y) of a periodic graph.
// Edge (u,v,(a,b),c) contributes -c*x^a*y^b to L[u][v] and the reciprocal to
// L[v][u]; a loop contributes c*(2 - x^a*y^b - x^-a*y^-b) to its diagonal.
// Requires a connected quotient and positive integer weights.
LaurentPoly2 laplacian_poly(const TorusGraph& g);

// Kasteleyn sign assignment on the overlaid graph: one sign in {+1,-1} per
// edge with an odd number of -1 around every quadrilateral face.  Found by
// solving the per-quad parity constraints over GF(2); `seed` randomizes the
// free variables, giving different valid gauges.
std::vector<int> kasteleyn_signs(const OverlaidGraph& gb, unsigned seed = 0);

// True iff every quad carries an odd number of negative signs.
bool check_kasteleyn(const OverlaidGraph& gb, const std::vector<int>& signs);

// Characteristic polynomial of the toroidal dimer model: det of the signed
// Kasteleyn matrix K(z,w), white rows by black columns, entries
// sign*weight*z^a*w^b summed over edges.  Result is canonicalized (see
// canonical_gauge).
LaurentPoly2 dimer_char_poly(const OverlaidGraph& gb,
                             const std::vector<int>& signs);

// Canonical representative of p under the gauge symmetries z -> -z,
// w -> -w, multiplication by monomial units and by -1.
LaurentPoly2 canonical_gauge(const LaurentPoly2& p);

}  // namespace torlink

#endif
