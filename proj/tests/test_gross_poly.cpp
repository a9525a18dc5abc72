#include "grossone/error.hpp"
#include "grossone/gross_poly.hpp"

#include "support/random_values.hpp"

#include <doctest.h>

using namespace grossone;

namespace {

const GrossPolynomial G = GrossPolynomial::grossone();

GrossPolynomial lin(long a, long b) { return GrossPolynomial(GrossLinear(a, b)); }

}  // namespace

TEST_CASE("canonical form") {
  GrossPolynomial p(std::vector<GrossTerm>{{1, 0}, {2, 1}, {-2, 1}, {3, 2}, {0, 5}});
  REQUIRE(p.terms().size() == 2);
  CHECK(p.terms()[0] == GrossTerm{3, 2});
  CHECK(p.terms()[1] == GrossTerm{1, 0});
  CHECK(GrossPolynomial(0).terms().empty());
  CHECK(GrossPolynomial(5).is_finite());
  CHECK_FALSE(G.is_finite());
}

TEST_CASE("poly_add") {
  CHECK(lin(1, -1) + 1 == G);
  GrossPolynomial g_plus_1 = G + 1;
  CHECK(g_plus_1 == lin(1, 1));
  CHECK(g_plus_1 != G);

  // (①³-2) + 2① = ①³ + 2① - 2; cross-checked at ① := 10 with plain integers.
  GrossPolynomial cube_minus_2 = poly_pow(G, 3L) - 2;
  GrossPolynomial sum = cube_minus_2 + G * 2;
  CHECK(sum.to_string() == "①^3+2*①-2");
  long m = 10;
  CHECK(poly_eval_at(sum, m) == (m * m * m - 2) + 2 * m);
}

TEST_CASE("poly_mul") {
  CHECK(G * G == GrossPolynomial::monomial(1, 2));
  CHECK(G * poly_pow(G, 2L) == GrossPolynomial::monomial(1, 3));
  GrossPolynomial prod = lin(1, -1) * lin(1, 1);
  CHECK(prod == poly_pow(G, 2L) - 1);
  CHECK(poly_eval_at(prod, 7) == 48);  // (7-1)(7+1)
}

TEST_CASE("poly_compare") {
  CHECK(poly_compare(G + 1, G) > 0);
  CHECK(poly_compare(lin(1, -1), G) < 0);
  GrossPolynomial sq = G * G;
  GrossPolynomial big_linear = G * 1000000;
  CHECK(poly_compare(sq, big_linear) > 0);
  // Substituting a large m agrees: 10^14 > 10^13.
  CHECK(poly_eval_at(sq, 10000000) > poly_eval_at(big_linear, 10000000));
  CHECK(poly_compare(GrossPolynomial::monomial(1, -1), 0) > 0);
  CHECK(poly_compare(GrossPolynomial::monomial(1, -1), make_rational(1, 1000000)) < 0);
}

TEST_CASE("poly_eval_at") {
  CHECK(poly_eval_at(lin(1, -1), 4) == 3);
  CHECK(poly_eval_at(poly_pow(G, 3L), 5) == 125);
  CHECK(poly_eval_at(poly_pow(G, 2L) - 1, 7) == 48);
  CHECK(poly_eval_at(GrossPolynomial::monomial(1, make_rational(1, 2)), 9) == 3);
  CHECK_THROWS_AS(poly_eval_at(GrossPolynomial::monomial(1, make_rational(1, 2)), 2),
                  ArithmeticError);
  try {
    poly_eval_at(GrossPolynomial::monomial(1, make_rational(1, 2)), 2);
  } catch (const ArithmeticError& e) {
    CHECK(e.kind() == ErrorKind::NonIntegralPower);
  }
  CHECK_THROWS_AS(poly_eval_at(GrossPolynomial::monomial(1, -1), 0), ArithmeticError);
  CHECK(poly_eval_at(GrossPolynomial(5), 0) == 5);
}

TEST_CASE("division only by single terms") {
  CHECK(poly_div(poly_pow(G, 3L), G) == G * G);
  CHECK(poly_div(G + 1, 2) == GrossPolynomial(std::vector<GrossTerm>{
                                  {make_rational(1, 2), 1}, {make_rational(1, 2), 0}}));
  try {
    poly_div(G, G + 1);
    FAIL("expected NotDivisible");
  } catch (const ArithmeticError& e) {
    CHECK(e.kind() == ErrorKind::NotDivisible);
  }
  CHECK_THROWS_AS(poly_div(G, 0), ArithmeticError);
}

TEST_CASE("powers") {
  CHECK(poly_pow(G + 1, 2L) == G * G + G * 2 + 1);
  CHECK(poly_pow(G * 2, -1L) == GrossPolynomial::monomial(make_rational(1, 2), -1));
  CHECK(poly_pow(GrossPolynomial::monomial(4, 2), make_rational(1, 2)) == G * 2);
  CHECK_THROWS_AS(poly_pow(G + 1, -1L), ArithmeticError);
  CHECK_THROWS_AS(poly_pow(G + 1, make_rational(1, 2)), ArithmeticError);
  CHECK_THROWS_AS(poly_pow(GrossPolynomial::monomial(2, 1), make_rational(1, 2)),
                  ArithmeticError);
  CHECK_THROWS_AS(poly_pow(G + 1, 1000L), ArithmeticError);
}

TEST_CASE("as_linear") {
  CHECK(lin(2, -3).as_linear() == GrossLinear(2, -3));
  CHECK(GrossPolynomial(7).as_linear() == GrossLinear(0, 7));
  CHECK_FALSE((G * G).as_linear());
  CHECK_FALSE(GrossPolynomial(make_rational(1, 2)).as_linear());
}

TEST_CASE("formatting") {
  CHECK(lin(1, -1).to_string() == "①-1");
  CHECK(GrossPolynomial(0).to_string() == "0");
  CHECK(GrossPolynomial::monomial(-1, 2).to_string() == "-①^2");
  CHECK(GrossPolynomial::monomial(make_rational(-1, 2), -1000).to_string() ==
        "-1/2*①^(-1000)");
  CHECK(GrossPolynomial::monomial(3, make_rational(1, 2)).to_string({.ascii = true}) ==
        "3*g1^(1/2)");
}

TEST_CASE("ring and order properties on random polynomials") {
  gen::Source src(20241018);
  for (int i = 0; i < 500; ++i) {
    auto a = src.polynomial();
    auto b = src.polynomial();
    auto c = src.polynomial();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);

    // Trichotomy, and equality exactly when the canonical forms agree.
    auto ord = poly_compare(a, b);
    CHECK(((ord < 0) + (ord == 0) + (ord > 0)) == 1);
    CHECK((ord == 0) == (a.terms() == b.terms()));

    if (poly_compare(a, b) <= 0 && poly_compare(b, c) <= 0) CHECK(poly_compare(a, c) <= 0);
    if (c.sign() > 0) CHECK(poly_compare(a + c, a) > 0);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  gen::Source src(7);
  for (int i = 0; i < 300; ++i) {
    auto a = src.polynomial(true);
    auto b = src.polynomial(true);
    Rational m = src.integer(1, 30);
    CHECK(poly_eval_at(a + b, m) == poly_eval_at(a, m) + poly_eval_at(b, m));
    CHECK(poly_eval_at(a * b, m) == poly_eval_at(a, m) * poly_eval_at(b, m));
  }
}
