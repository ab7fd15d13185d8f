#ifndef TORLINK_LAURENT_HPP
#define TORLINK_LAURENT_HPP

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace torlink {

// Exponent pair (a,b) of a monomial x^a*y^b.  Ordered lexicographically,
// which fixes the canonical term order everywhere (storage, printing,
// hashing).
using Exp2 = std::pair<int, int>;

// Two-variable Laurent polynomial with arbitrary-precision integer
// coefficients.  The support map never stores a zero coefficient, so
// operator== is structural equality of canonical forms.
class LaurentPoly2 {
 public:
  LaurentPoly2() = default;

  static LaurentPoly2 constant(mpz_class c);
  static LaurentPoly2 monomial(mpz_class c, int a, int b);

  // Adds c*x^a*y^b, pruning the term if the coefficient cancels to zero.
  void add_term(int a, int b, const mpz_class& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exp2, mpz_class>& terms() const { return terms_; }

  // Coefficient of x^a*y^b (zero if absent).
  mpz_class coeff(int a, int b) const;

  LaurentPoly2 operator-() const;
  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) {
    a += b;
    return a;
  }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  LaurentPoly2 scaled(const mpz_class& c) const;
  // Multiplies by the monomial x^a*y^b.
  LaurentPoly2 shifted(int a, int b) const;
  // Substitutes x -> sx*x, y -> sy*y for signs sx, sy in {+1,-1}.
  LaurentPoly2 sign_flipped(int sx, int sy) const;

  bool operator==(const LaurentPoly2& o) const = default;

  // True iff p(x,y) == p(x^-1, y^-1).
  bool conjugate_reciprocal() const;

  // Floating evaluation.  Intended for |x| = |y| = 1 but valid for any
  // nonzero arguments.
  std::complex<double> eval(std::complex<double> x,
                            std::complex<double> y) const;

  // Canonical textual form, round-trip exact with parse().
  std::string str(std::string_view xname = "x",
                  std::string_view yname = "y") const;
  static LaurentPoly2 parse(std::string_view text,
                            std::string_view xname = "x",
                            std::string_view yname = "y");

 private:
  std::map<Exp2, mpz_class> terms_;
};

// One-variable complex polynomial, coefficients in ascending degree order
// with trailing (leading-degree) zeros trimmed.
struct ComplexPoly1 {
  std::vector<std::complex<double>> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  std::complex<double> eval(std::complex<double> w) const;
};

// Result of specializing x := z0 in a LaurentPoly2: q(w) = p(z0, w) * w^shift
// with the minimal shift making q an honest polynomial.  `zero` flags an
// identically vanishing specialization (q meaningless in that case).
struct SpecializedPoly {
  ComplexPoly1 poly;
  int shift = 0;
  bool zero = false;
};

SpecializedPoly specialize_w(const LaurentPoly2& p, std::complex<double> z0);

// Square matrix over the Laurent ring.
class LaurentMatrix {
 public:
  explicit LaurentMatrix(int dim);

  int dim() const { return dim_; }
  LaurentPoly2& at(int i, int j);
  const LaurentPoly2& at(int i, int j) const;

  static LaurentMatrix identity(int dim);

  // Exact determinant.  Dimensions in this project stay <= ~12, so this is
  // a memoized Laplace expansion over column subsets.
  LaurentPoly2 det() const;

 private:
  int dim_;
  std::vector<LaurentPoly2> entries_;
};

}  // namespace torlink

#endif
