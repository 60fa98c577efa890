#include <doctest.h>

#include <charp/parser.hpp>
#include <charp/polynomial.hpp>

#include "support.hpp"

using namespace charp;

namespace {

const VariableSet kXYZ({"x", "y", "z"});

Polynomial P(const std::string& s, PrimeModulus p, const VariableSet& vars = kXYZ) {
  return parse_poly(s, vars, p);
}

} // namespace

TEST_CASE("ring arithmetic basics") {
  PrimeModulus p5(5);
  CHECK(P("x+y", p5) + P("-y", p5) == P("x", p5));
  CHECK(P("x^2+3*y", p5) * Polynomial::zero(kXYZ, p5) == Polynomial::zero(kXYZ, p5));
  PrimeModulus p2(2);
  CHECK(P("x+y", p2) * P("x+y", p2) == P("x^2+y^2", p2));
  CHECK(P("x+y", p2).pow(2) == P("x^2+y^2", p2));
  CHECK(P("x-x", p5).is_zero());
}

TEST_CASE("operations reject mismatched rings") {
  PrimeModulus p5(5), p7(7);
  CHECK_THROWS_AS(P("x", p5) + P("x", p7), UsageError);
  VariableSet other({"x", "y"});
  CHECK_THROWS_AS(P("x", p5) * parse_poly("x", other, p5), UsageError);
}

TEST_CASE("frobenius power") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    PrimeModulus pm(p);
    Polynomial f = P("x+y", pm);
    Polynomial expected = P("x^" + std::to_string(p) + "+y^" + std::to_string(p), pm);
    CHECK(f.frobenius_power(p) == expected);
    CHECK(f.frobenius_power(1) == f);
  }
  PrimeModulus p5(5);
  CHECK(P("2*x", p5).frobenius_power(5) == P("2*x^5", p5));
  CHECK_THROWS_AS(P("x", p5).frobenius_power(10), DomainError);
  CHECK_THROWS_AS(P("x", p5).frobenius_power(0), DomainError);
}

TEST_CASE("frobenius power equals repeated squaring") {
  testing::Rng rng(11);
  int cases = 0;
  struct Shape {
    std::int64_t p;
    int emax;
    std::size_t terms;
  };
  // term budgets keep the repeated-squaring oracle affordable at q = p^3
  const Shape shapes[] = {{2, 3, 5}, {3, 3, 4}, {5, 3, 3}, {7, 2, 4}};
  while (cases < 220) {
    for (const Shape& s : shapes) {
      PrimeModulus pm(s.p);
      for (int e = 0; e <= s.emax; ++e) {
        Polynomial f = testing::random_poly(rng, kXYZ, pm, s.terms, 3);
        std::int64_t q = 1;
        for (int i = 0; i < e; ++i) q *= s.p;
        CHECK(f.frobenius_power(q) == f.pow(std::uint64_t(q)));
        ++cases;
      }
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("formal derivative") {
  PrimeModulus p3(3);
  VariableSet uxa({"U", "x0", "a"});
  // d/dU (U^q + U x0^q - a) = x0^q since q = 0 in F_p
  Polynomial r = parse_poly("U^9 + U*x0^9 - a", uxa, p3);
  CHECK(r.derivative("U") == parse_poly("x0^9", uxa, p3));
  CHECK(P("4", PrimeModulus(7)).derivative("x").is_zero());
  CHECK(P("x^3", p3).derivative("x").is_zero());
  CHECK(P("x^4", p3).derivative("x") == P("x^3", p3));
}

TEST_CASE("derivative satisfies the Leibniz rule") {
  testing::Rng rng(13);
  PrimeModulus p7(7);
  for (int i = 0; i < 60; ++i) {
    Polynomial f = testing::random_poly(rng, kXYZ, p7, 4, 4);
    Polynomial g = testing::random_poly(rng, kXYZ, p7, 4, 4);
    for (std::size_t v = 0; v < 3; ++v) {
      CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
    }
  }
}

TEST_CASE("monomial orders are sane on random triples") {
  testing::Rng rng(17);
  const MonomialOrder orders[] = {MonomialOrder::grevlex(), MonomialOrder::lex(),
                                  MonomialOrder::block(1)};
  for (const MonomialOrder& ord : orders) {
    for (int i = 0; i < 300; ++i) {
      Monomial a = testing::random_monomial(rng, 3, 6);
      Monomial b = testing::random_monomial(rng, 3, 6);
      Monomial c = testing::random_monomial(rng, 3, 6);
      // antisymmetry
      CHECK(ord.compare(a, b) == -ord.compare(b, a));
      CHECK((ord.compare(a, b) == 0) == (a == b));
      // transitivity
      if (ord.less(a, b) && ord.less(b, c)) CHECK(ord.less(a, c));
      // multiplicativity
      if (ord.less(a, b)) CHECK(ord.less(a * c, b * c));
      // 1 is least
      Monomial one = Monomial::one(3);
      if (!(a == one)) CHECK(ord.greater(a, one));
    }
  }
}

TEST_CASE("parser handles the grammar") {
  PrimeModulus p7(7);
  Polynomial f = P("x^2*y + 3*z", p7);
  CHECK(f.nterms() == 2);
  CHECK(f == P("3*z + y*x^2", p7));
  CHECK(P("x - x", p7).is_zero());

  VariableSet XYZ({"X", "Y", "Z"});
  Polynomial cubic = parse_poly("X^3+Y^3+Z^3", XYZ, p7);
  CHECK(cubic.nterms() == 3);
  CHECK(cubic.degree() == 3);

  // whitespace is insignificant; repeated factors multiply out
  CHECK(P(" x ^ 2 * y ", p7) == P("x^2*y", p7));
  CHECK(P("x*x*x", p7) == P("x^3", p7));
  CHECK(P("2*3*x", p7) == P("6*x", p7));
  // leading minus maps to p-1 times
  CHECK(P("-x", p7) == P("6*x", p7));
  // large coefficients reduce at parse time: that literal is 1 mod 7
  CHECK(P("123456789123456789123456789*x", p7) == P("x", p7));
}

TEST_CASE("parser reports errors with position") {
  PrimeModulus p7(7);
  CHECK_THROWS_AS(P("x + w", p7), ParseError);
  CHECK_THROWS_AS(P("x +", p7), ParseError);
  CHECK_THROWS_AS(P("x^", p7), ParseError);
  CHECK_THROWS_AS(P("x^99999999999", p7), ParseError);
  CHECK_THROWS_AS(P("x$y", p7), ParseError);
  try {
    P("x +\n qq", p7);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 2);
  }
}

TEST_CASE("format round-trips") {
  testing::Rng rng(19);
  for (std::int64_t p : {2, 5, 31}) {
    PrimeModulus pm(p);
    for (int i = 0; i < 100; ++i) {
      Polynomial f = testing::random_poly(rng, kXYZ, pm, 6, 5);
      CHECK(parse_poly(f.str(), kXYZ, pm) == f);
    }
  }
  CHECK(Polynomial::zero(kXYZ, PrimeModulus(5)).str() == "0");
}

TEST_CASE("variable sets validate names") {
  CHECK_THROWS_AS(VariableSet({"x", "x"}), UsageError);
  CHECK_THROWS_AS(VariableSet({"1x"}), UsageError);
  CHECK_THROWS_AS(VariableSet({""}), UsageError);
  VariableSet v({"x_1", "Y2", "_z"});
  CHECK(v.index_of("Y2") == 1);
  CHECK_FALSE(v.index_of("missing"));
  CHECK(v.fresh_name("x_1") == "x_1_");
}

TEST_CASE("substitution") {
  PrimeModulus p5(5);
  VariableSet xy({"x", "y"});
  VariableSet uv({"u", "v"});
  Polynomial f = parse_poly("x^2 + y", xy, p5);
  std::vector<Polynomial> images = {parse_poly("u+v", uv, p5), parse_poly("u*v", uv, p5)};
  CHECK(f.substitute(images) == parse_poly("u^2 + 2*u*v + v^2 + u*v", uv, p5));
}

TEST_CASE("exponent overflow is caught") {
  PrimeModulus p2(2);
  VariableSet x({"x"});
  Polynomial big = parse_poly("x^999999999", x, p2);
  CHECK_THROWS_AS(big* big* big* big* big, UsageError);
}
