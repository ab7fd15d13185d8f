#ifndef TORLINK_MAHLER_HPP
#define TORLINK_MAHLER_HPP

#include <complex>
#include <string>
#include <vector>

#include "core/laurent.hpp"

namespace torlink {

// Lobachevsky function Lambda(theta) = -int_0^theta log|2 sin t| dt,
// absolute accuracy ~1e-12; odd and pi-periodic.
double lobachevsky(double theta);

struct VolumeConstants {
  double v_tet;  // volume of the regular ideal tetrahedron, 3*Lambda(pi/3)
  double v_oct;  // volume of the regular ideal octahedron, 8*Lambda(pi/4)
};
VolumeConstants volume_constants();

// All roots of q (degree >= 1), via Aberth simultaneous iteration with a
// companion-matrix fallback.
std::vector<std::complex<double>> poly_roots(const ComplexPoly1& q);

// Logarithmic Mahler measure of a one-variable polynomial by Jensen's
// formula: log|lead| + sum log max(1,|root|).  Throws on the zero
// polynomial.
double mahler_1var(const ComplexPoly1& q);

struct MahlerResult {
  double value = 0;
  double error_estimate = 0;  // a-posteriori, heuristic
  std::string method;         // "jensen-adaptive" | "grid"
  long samples = 0;
  bool tolerance_met = true;
};

// m(p) = (2pi)^-2 double-integral of log|p| over the unit torus, computed
// as an adaptive outer integral of the exact inner Jensen evaluation.
MahlerResult mahler_2var(const LaurentPoly2& p, double tol = 1e-6);

// Riemann-sum cross-check on the half-shifted N-by-N root-of-unity grid.
MahlerResult mahler_2var_grid(const LaurentPoly2& p, int N);

}  // namespace torlink

#endif
