#include <doctest.h>

#include <charp/parser.hpp>
#include <charp/separable.hpp>

#include "support.hpp"

using namespace charp;

namespace {

// Random valid witness in the plain polynomial ring: pick the x_i and
// auxiliary c_i, d_i, then set z = sum c_i x_i, a_i = c_i^q + d_i x_0^q for
// i >= 1 and a_0 = c_0^q - sum_{i>=1} d_i x_i^q, which satisfies
// z^q = sum a_i x_i^q identically.
FrobeniusWitness random_witness(testing::Rng& rng, std::int64_t p, std::int64_t q,
                                std::size_t n) {
  VariableSet vars({"s", "t", "u", "v", "w"});
  PrimeModulus pm(p);
  std::vector<Polynomial> xs, cs, ds;
  for (std::size_t i = 0; i <= n; ++i) {
    xs.push_back(testing::random_poly(rng, vars, pm, 3, 3, true));
    cs.push_back(testing::random_poly(rng, vars, pm, 3, 3, true));
    ds.push_back(testing::random_poly(rng, vars, pm, 2, 2));
  }
  Polynomial z = Polynomial::zero(vars, pm);
  for (std::size_t i = 0; i <= n; ++i) z = z + cs[i] * xs[i];
  std::vector<Polynomial> as;
  Polynomial a0 = cs[0].frobenius_power(q);
  for (std::size_t i = 1; i <= n; ++i) {
    a0 = a0 - ds[i] * xs[i].frobenius_power(q);
  }
  as.push_back(a0);
  for (std::size_t i = 1; i <= n; ++i) {
    as.push_back(cs[i].frobenius_power(q) + ds[i] * xs[0].frobenius_power(q));
  }
  return FrobeniusWitness::make(q, z, xs, as);
}

} // namespace

TEST_CASE("witness for the q = 2 hypersurface z^2 = a x^2 + b y^2") {
  PrimeModulus p2(2);
  VariableSet vars({"x", "y", "z", "a", "b"});
  auto P = [&](const char* s) { return parse_poly(s, vars, p2); };
  Polynomial rel = P("z^2 - a*x^2 - b*y^2");
  FrobeniusWitness w =
      FrobeniusWitness::make(2, P("z"), {P("x"), P("y")}, {P("a"), P("b")}, {rel});
  CHECK(w.e == 1);

  ExtensionPresentation E = build_extension(w);
  REQUIRE(E.u_names == std::vector<std::string>{"U1"});
  REQUIRE(E.relations.size() == 1);
  CHECK(E.relations[0] ==
        parse_poly("U1^2 + U1*x^2 - b", E.ext_vars, p2));
  CHECK(E.u0_numerator == parse_poly("z - y*U1", E.ext_vars, p2));
  CHECK(E.u0_denominator == parse_poly("x", E.ext_vars, p2));

  CHECK(verify_separability(E));
  // hand reduction: (z - y U)^2 = z^2 + y^2 U^2 = (a x^2 + b y^2) + y^2 (b + U x^2)
  //               = a x^2 + U x^2 y^2 = x^2 (a + U y^2) over F_2
  CHECK(verify_u0_identity(E));
}

TEST_CASE("degenerate witness with a single generator") {
  PrimeModulus p3(3);
  VariableSet vars({"x", "c"});
  auto P = [&](const char* s) { return parse_poly(s, vars, p3); };
  // z = c x, so z^3 = c^3 x^3
  FrobeniusWitness w = FrobeniusWitness::make(3, P("c*x"), {P("x")}, {P("c^3")});
  ExtensionPresentation E = build_extension(w);
  CHECK(E.u_names.empty());
  CHECK(E.relations.empty());
  CHECK(E.u0_numerator == parse_poly("c*x", E.ext_vars, p3));
  CHECK(verify_separability(E));
  CHECK(verify_u0_identity(E));
}

TEST_CASE("witness extracted from z^4 = z x^3 + z y^3 in the char-2 cubic") {
  PrimeModulus p2(2);
  VariableSet vars({"x", "y", "z"});
  auto P = [&](const char* s) { return parse_poly(s, vars, p2); };
  Polynomial cubic = P("x^3+y^3+z^3");
  // (z^2)^2 = (zx) x^2 + (zy) y^2 regroups the quartic identity
  FrobeniusWitness w = FrobeniusWitness::make(2, P("z^2"), {P("x"), P("y")},
                                              {P("z*x"), P("z*y")}, {cubic});
  ExtensionPresentation E = build_extension(w);
  CHECK(E.u_names.size() == 1);
  CHECK(verify_separability(E));
  CHECK(verify_u0_identity(E));
}

TEST_CASE("witness construction rejects a broken identity") {
  PrimeModulus p2(2);
  VariableSet vars({"x", "y", "z", "a", "b"});
  auto P = [&](const char* s) { return parse_poly(s, vars, p2); };
  CHECK_THROWS_AS(FrobeniusWitness::make(2, P("z"), {P("x"), P("y")},
                                         {P("a"), P("b")}, {}),
                  WitnessError);
  // x_i vanishing modulo the relations is also rejected
  CHECK_THROWS_AS(FrobeniusWitness::make(2, P("z"), {P("x"), P("y")},
                                         {P("a"), P("b")},
                                         {P("z^2 - a*x^2 - b*y^2"), P("x")}),
                  WitnessError);
  CHECK_THROWS_AS(FrobeniusWitness::make(3, P("z"), {P("x")}, {P("a")}, {}),
                  DomainError); // q not a power of p = 2
  CHECK_THROWS_AS(FrobeniusWitness::make(1, P("z"), {P("x")}, {P("a")}, {}),
                  DomainError); // e >= 1 required
}

TEST_CASE("diagnostic carries the nonzero normal form") {
  PrimeModulus p2(2);
  VariableSet vars({"x", "z"});
  auto P = [&](const char* s) { return parse_poly(s, vars, p2); };
  try {
    FrobeniusWitness::make(2, P("z"), {P("x")}, {P("1")}, {});
    CHECK(false);
  } catch (const WitnessError& e) {
    CHECK(e.normal_form == "x^2 + z^2"); // z^2 - 1*x^2 over F_2
  }
}

TEST_CASE("random witnesses verify and perturbations fail") {
  testing::Rng rng(41);
  int total = 0;
  for (std::int64_t p : {2, 3, 5}) {
    for (int rep = 0; rep < 4; ++rep) {
      for (std::int64_t q : {p, p * p}) {
        std::size_t n = testing::rand_below(rng, 3) + 1;
        FrobeniusWitness w = random_witness(rng, p, q, n);
        ExtensionPresentation E = build_extension(w);
        CHECK(verify_separability(E));
        CHECK(verify_u0_identity(E));

        // corrupt one a_i by +1: the identity must break
        std::vector<Polynomial> as = w.as;
        std::size_t idx = testing::rand_below(rng, std::uint32_t(as.size()));
        as[idx] = as[idx] + Polynomial::constant(w.z.vars(), w.p, 1);
        FrobeniusWitness bad = FrobeniusWitness::make_unchecked(
            w.q, w.z, w.xs, as, w.quotient_relations);
        CHECK_FALSE(verify_u0_identity(build_extension(bad)));
        ++total;
      }
    }
  }
  CHECK(total >= 24);
}

TEST_CASE("adversarial presentations fail verify_separability") {
  PrimeModulus p3(3);
  VariableSet vars({"x", "a"});
  auto P = [&](const char* s) { return parse_poly(s, vars, p3); };
  // z = a x, so z^3 = a^3 x^3 + 0 * (x^2)^3
  FrobeniusWitness w = FrobeniusWitness::make(3, P("a*x"), {P("x"), P("x^2")},
                                              {P("a^3"), P("0")});
  ExtensionPresentation E = build_extension(w);
  CHECK(verify_separability(E));

  // purely inseparable relation U^p - a: derivative vanishes
  ExtensionPresentation bad = E;
  Polynomial U = Polynomial::variable(bad.ext_vars, p3, bad.u_names[0]);
  bad.relations[0] = U.frobenius_power(3) - parse_poly("a", bad.ext_vars, p3);
  CHECK_FALSE(verify_separability(bad));

  // x_0 that vanishes modulo the quotient: derivative x_0^q reduces to 0
  ExtensionPresentation bad2 = E;
  bad2.quotient_relations.push_back(parse_poly("x", bad2.ext_vars, p3));
  CHECK_FALSE(verify_separability(bad2));

  // non-monic top slice in U_i
  ExtensionPresentation bad3 = E;
  bad3.relations[0] = bad3.relations[0].scaled(2);
  CHECK_FALSE(verify_separability(bad3));
}

TEST_CASE("corrupting a_0 breaks the identity by exactly x_0^q") {
  PrimeModulus p2(2);
  VariableSet vars({"x", "y", "z", "a", "b"});
  auto P = [&](const char* s) { return parse_poly(s, vars, p2); };
  Polynomial rel = P("z^2 - a*x^2 - b*y^2");
  FrobeniusWitness bad = FrobeniusWitness::make_unchecked(
      2, P("z"), {P("x"), P("y")}, {P("a+1"), P("b")}, {rel});
  CHECK_FALSE(verify_u0_identity(build_extension(bad)));
}

TEST_CASE("U-variable names avoid collisions") {
  PrimeModulus p2(2);
  VariableSet vars({"x", "U1", "c"});
  auto P = [&](const char* s) { return parse_poly(s, vars, p2); };
  // z = c x + U1 x = (c + U1) x with two generators to force one new variable
  Polynomial z = P("c*x + U1*x^2");
  Polynomial zq = z.frobenius_power(2);
  // a_0 = c^2, x_0 = x; a_1 = U1^2, x_1 = x^2 gives z^2 = a_0 x_0^2 + a_1 x_1^2
  FrobeniusWitness w = FrobeniusWitness::make(2, z, {P("x"), P("x^2")},
                                              {P("c^2"), P("U1^2")});
  CHECK(zq == P("c^2*x^2 + U1^2*x^4"));
  ExtensionPresentation E = build_extension(w);
  REQUIRE(E.u_names.size() == 1);
  CHECK(E.u_names[0] == "U1_");
  CHECK(verify_u0_identity(E));
}

TEST_CASE("symplectic invariant ring embedding") {
  for (std::int64_t q : {2, 3, 4, 5, 8, 9}) {
    SymplecticCheck c = symplectic_example_check(q);
    CHECK(c.pass);
    CHECK(c.relation_image.is_zero());
    CHECK(c.u_relation_image.is_zero());
    CHECK(verify_symplectic_example(q));
  }
  CHECK_THROWS_AS(verify_symplectic_example(6), DomainError);
  CHECK_THROWS_AS(verify_symplectic_example(1), DomainError);
}

TEST_CASE("the derived image of b matches symbolic expansion") {
  // b must map to (z^q - a x^q) / y^q with the images of z and a inserted;
  // expanding and dividing by Y^q must land exactly on V^q - U X^q.
  for (std::int64_t q : {2, 3, 4, 5, 8, 9}) {
    PrimeModulus p = prime_power_base(q);
    VariableSet dst({"X", "Y", "U", "V"});
    auto V = [&](const char* s) { return Polynomial::variable(dst, p, s); };
    Polynomial z_img = V("U") * V("X") + V("V") * V("Y");
    Polynomial a_img = V("U").frobenius_power(q) + V("U") * V("Y").frobenius_power(q);
    Polynomial num =
        z_img.pow(std::uint64_t(q)) - a_img * V("X").frobenius_power(q);
    auto b_img = exact_divide(num, V("Y").frobenius_power(q));
    REQUIRE(b_img.has_value());
    CHECK(*b_img == V("V").frobenius_power(q) - V("U") * V("X").frobenius_power(q));
  }
}

TEST_CASE("witness files parse and validate") {
  const char* good = R"(# hypersurface witness
p=2 q=2
vars=x,y,z,a,b
z=z
x0=x
x1=y
a0=a
a1=b
rel=z^2-a*x^2-b*y^2
)";
  FrobeniusWitness w = parse_witness_file(good);
  CHECK(w.p.value() == 2);
  CHECK(w.q == 2);
  CHECK(w.xs.size() == 2);
  CHECK(w.quotient_relations.size() == 1);

  CHECK_THROWS_AS(parse_witness_file("p=2 q=2\nz=z\n"), ParseError);
  CHECK_THROWS_AS(parse_witness_file(""), ParseError);
  const char* bad_identity = "p=2 q=2\nvars=x,z,a\nz=z\nx0=x\na0=a\n";
  CHECK_THROWS_AS(parse_witness_file(bad_identity), WitnessError);
  const char* gap = "p=2 q=2\nvars=x,z,a\nz=z\nx0=x\nx2=x\na0=a\na2=a\n";
  CHECK_THROWS_AS(parse_witness_file(gap), ParseError);
}
