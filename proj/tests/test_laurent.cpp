#include <complex>
#include <random>

#include "core/error.hpp"
#include "core/laurent.hpp"
#include "doctest.h"

using namespace torlink;

namespace {

LaurentPoly2 random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 5), expo(-3, 3), co(-5, 5);
  LaurentPoly2 p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) p.add_term(expo(rng), expo(rng), co(rng));
  return p;
}

LaurentPoly2 square_D() {
  LaurentPoly2 p = LaurentPoly2::constant(4);
  p.add_term(1, 0, -1);
  p.add_term(-1, 0, -1);
  p.add_term(0, 1, -1);
  p.add_term(0, -1, -1);
  return p;
}

LaurentPoly2 triangular_D() {
  LaurentPoly2 p = LaurentPoly2::constant(6);
  p.add_term(1, 0, -1);
  p.add_term(-1, 0, -1);
  p.add_term(0, 1, -1);
  p.add_term(0, -1, -1);
  p.add_term(1, 1, -1);
  p.add_term(-1, -1, -1);
  return p;
}

LaurentPoly2 hexagonal_D() {
  LaurentPoly2 p = LaurentPoly2::constant(6);
  p.add_term(1, 0, -1);
  p.add_term(-1, 0, -1);
  p.add_term(0, 1, -1);
  p.add_term(0, -1, -1);
  p.add_term(1, -1, -1);
  p.add_term(-1, 1, -1);
  return p;
}

}  // namespace

TEST_CASE("basic arithmetic and canonical form") {
  LaurentPoly2 x = LaurentPoly2::monomial(1, 1, 0);
  LaurentPoly2 y = LaurentPoly2::monomial(1, 0, 1);
  LaurentPoly2 one = LaurentPoly2::constant(1);

  CHECK((x + y).term_count() == 2);
  CHECK(((x + y) - x) == y);
  CHECK((x - x).is_zero());
  CHECK((x + (-x)).is_zero());

  // (x + y) * x^-1 == 1 + x^-1 y
  LaurentPoly2 lhs = (x + y) * LaurentPoly2::monomial(1, -1, 0);
  LaurentPoly2 rhs = one + LaurentPoly2::monomial(1, -1, 1);
  CHECK(lhs == rhs);

  // (1 + x)(1 - x) == 1 - x^2
  LaurentPoly2 prod = (one + x) * (one - x);
  LaurentPoly2 expect = one - LaurentPoly2::monomial(1, 2, 0);
  CHECK(prod == expect);

  CHECK(square_D().coeff(0, 0) == 4);
  CHECK(square_D().coeff(1, 0) == -1);
  CHECK(square_D().coeff(2, 2) == 0);

  CHECK(x.shifted(-1, 2) == LaurentPoly2::monomial(1, 0, 2));
  CHECK(square_D().scaled(3).coeff(0, 0) == 12);
  CHECK(square_D().sign_flipped(-1, -1).coeff(1, 0) == 1);
  CHECK(square_D().sign_flipped(-1, -1).coeff(0, 0) == 4);
}

TEST_CASE("randomized ring axioms") {
  std::mt19937 rng(20260823);
  for (int it = 0; it < 200; ++it) {
    LaurentPoly2 a = random_poly(rng), b = random_poly(rng),
                 c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * LaurentPoly2::constant(1)) == a);
    CHECK((a * LaurentPoly2()).is_zero());
  }
}

TEST_CASE("conjugate reciprocal") {
  CHECK(square_D().conjugate_reciprocal());
  CHECK(triangular_D().conjugate_reciprocal());
  CHECK(hexagonal_D().conjugate_reciprocal());
  LaurentPoly2 p = LaurentPoly2::monomial(1, 1, 0);
  p.add_term(0, 0, 2);
  CHECK_FALSE(p.conjugate_reciprocal());
}

TEST_CASE("evaluation") {
  using C = std::complex<double>;
  CHECK(std::abs(square_D().eval(1, 1)) < 1e-14);
  CHECK(std::abs(triangular_D().eval(-1, -1) - C(8)) < 1e-12);
  LaurentPoly2 x = LaurentPoly2::monomial(1, 1, 0);
  CHECK(std::abs(x.eval(C(0, 1), 1) - C(0, 1)) < 1e-14);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ang(0, 6.28318);
  for (int it = 0; it < 50; ++it) {
    LaurentPoly2 a = random_poly(rng), b = random_poly(rng);
    C z = std::polar(1.0, ang(rng)), w = std::polar(1.0, ang(rng));
    CHECK(std::abs((a * b).eval(z, w) - a.eval(z, w) * b.eval(z, w)) < 1e-10);
    CHECK(std::abs((a + b).eval(z, w) - (a.eval(z, w) + b.eval(z, w))) <
          1e-10);
  }
}

TEST_CASE("specialization") {
  // p(1, w) for the square-lattice polynomial: 2 - w - w^-1 -> shift 1,
  // coefficients -1 + 2w - w^2.
  auto s = specialize_w(square_D(), 1.0);
  REQUIRE_FALSE(s.zero);
  CHECK(s.shift == 1);
  REQUIRE(s.poly.degree() == 2);
  CHECK(std::abs(s.poly.coeffs[0] - std::complex<double>(-1)) < 1e-14);
  CHECK(std::abs(s.poly.coeffs[1] - std::complex<double>(2)) < 1e-14);
  CHECK(std::abs(s.poly.coeffs[2] - std::complex<double>(-1)) < 1e-14);

  // x - 1 specialized at x = 1 vanishes identically.
  LaurentPoly2 p = LaurentPoly2::monomial(1, 1, 0);
  p.add_term(0, 0, -1);
  CHECK(specialize_w(p, 1.0).zero);

  // y alone normalizes to the constant 1 with shift -1.
  auto sy = specialize_w(LaurentPoly2::monomial(1, 0, 1), 1.0);
  CHECK_FALSE(sy.zero);
  CHECK(sy.shift == -1);
  CHECK(sy.poly.degree() == 0);

  // Specialize-then-evaluate agrees with direct evaluation on the circle.
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> ang(0, 6.28318);
  for (int it = 0; it < 50; ++it) {
    LaurentPoly2 a = random_poly(rng);
    std::complex<double> z = std::polar(1.0, ang(rng)),
                         w = std::polar(1.0, ang(rng));
    auto sp = specialize_w(a, z);
    std::complex<double> direct = a.eval(z, w);
    if (sp.zero) {
      CHECK(std::abs(direct) < 1e-9);
    } else {
      std::complex<double> via =
          sp.poly.eval(w) * std::pow(w, -sp.shift);
      CHECK(std::abs(via - direct) < 1e-9);
    }
  }
}

TEST_CASE("print/parse round trip") {
  CHECK(LaurentPoly2::parse("0").is_zero());
  CHECK(LaurentPoly2().str() == "0");
  CHECK(square_D().str() ==
        "-1*x^-1*y^0 - 1*x^0*y^-1 + 4*x^0*y^0 - 1*x^0*y^1 - 1*x^1*y^0");
  CHECK(LaurentPoly2::parse(square_D().str()) == square_D());
  CHECK(LaurentPoly2::parse(square_D().str("z", "w"), "z", "w") == square_D());
  std::mt19937 rng(12345);
  for (int it = 0; it < 100; ++it) {
    LaurentPoly2 a = random_poly(rng);
    CHECK(LaurentPoly2::parse(a.str()) == a);
  }
  CHECK_THROWS_AS(LaurentPoly2::parse("1*q^0"), ParseError);
  CHECK_THROWS_AS(LaurentPoly2::parse("x^"), ParseError);
}

TEST_CASE("determinants") {
  LaurentMatrix one = LaurentMatrix::identity(3);
  CHECK(one.det() == LaurentPoly2::constant(1));

  LaurentMatrix m1(1);
  m1.at(0, 0) = triangular_D();
  CHECK(m1.det() == triangular_D());

  // det [[3, -1-x-y], [-1-x^-1-y^-1, 3]] is the hexagonal-lattice
  // polynomial 6 - x - x^-1 - y - y^-1 - x y^-1 - x^-1 y.
  LaurentMatrix h(2);
  h.at(0, 0) = LaurentPoly2::constant(3);
  h.at(1, 1) = LaurentPoly2::constant(3);
  LaurentPoly2 s = LaurentPoly2::constant(-1);
  s.add_term(1, 0, -1);
  s.add_term(0, 1, -1);
  h.at(0, 1) = s;
  LaurentPoly2 sc = LaurentPoly2::constant(-1);
  sc.add_term(-1, 0, -1);
  sc.add_term(0, -1, -1);
  h.at(1, 0) = sc;
  CHECK(h.det() == hexagonal_D());

  // Block-diagonal multiplicativity.
  std::mt19937 rng(4242);
  for (int it = 0; it < 20; ++it) {
    LaurentMatrix a(2), b(2), blk(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        a.at(i, j) = random_poly(rng);
        b.at(i, j) = random_poly(rng);
        blk.at(i, j) = a.at(i, j);
        blk.at(2 + i, 2 + j) = b.at(i, j);
      }
    CHECK(blk.det() == a.det() * b.det());
  }

  // Row swap flips the sign.
  LaurentMatrix sw(2);
  sw.at(0, 0) = s;
  sw.at(0, 1) = LaurentPoly2::constant(3);
  sw.at(1, 0) = LaurentPoly2::constant(3);
  sw.at(1, 1) = sc;
  CHECK(sw.det() == -(h.det()));
}
