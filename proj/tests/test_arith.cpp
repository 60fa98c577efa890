#include <doctest.h>

#include <charp/arith.hpp>

#include "support.hpp"

using namespace charp;

TEST_CASE("binomial_exact basics") {
  CHECK(binomial_exact(4, 2) == 6);
  CHECK(binomial_exact(0, 0) == 1);
  CHECK(binomial_exact(17, 0) == 1);
  CHECK(binomial_exact(-5, 0) == 1);
  // (-1)(-2)/2! = 1, evaluating the defining product by hand
  CHECK(binomial_exact(-1, 2) == 1);
  CHECK(binomial_exact(-2, 3) == -4);
  CHECK(binomial_exact(3, 5) == 0); // the product crosses zero
  CHECK(binomial_exact(52, 5) == BigInt("2598960"));
}

TEST_CASE("binomial_exact satisfies Pascal's rule up to 64") {
  for (std::int64_t n = 1; n <= 64; ++n) {
    for (std::int64_t m = 1; m <= n; ++m) {
      CHECK(binomial_exact(n, m) ==
            binomial_exact(n - 1, m - 1) + binomial_exact(n - 1, m));
    }
  }
}

TEST_CASE("binomial_mod_p examples") {
  PrimeModulus p7(7);
  CHECK(binomial_mod_p(6, 2, p7).value() == 1); // 15 mod 7
  for (std::int64_t p : {2, 3, 5, 7, 31}) {
    PrimeModulus pm(p);
    CHECK(binomial_mod_p(p, 1, pm).value() == 0);
    CHECK(binomial_mod_p(p + 3, 0, pm).value() == 1);
  }
}

TEST_CASE("binomial_mod_p agrees with the exact value") {
  testing::Rng rng(2024);
  const std::int64_t primes[] = {2, 3, 5, 7, 13, 97, 2147483647};
  for (std::int64_t p : primes) {
    PrimeModulus pm(p);
    for (int i = 0; i < 40; ++i) {
      std::int64_t n = testing::rand_below(rng, 400);
      std::int64_t m = testing::rand_below(rng, 400);
      BigInt exact = binomial_exact(n, m) % p;
      if (exact < 0) exact += p;
      CHECK(binomial_mod_p(n, m, pm).value() == exact);
    }
  }
}

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(7));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(91)); // 7 * 13
  CHECK_FALSE(is_prime(2147483645));
}

TEST_CASE("PrimeModulus validates its range") {
  CHECK_THROWS_AS(PrimeModulus(1), DomainError);
  CHECK_THROWS_AS(PrimeModulus(91), DomainError);
  CHECK_THROWS_AS(PrimeModulus(std::int64_t(1) << 31), DomainError);
  CHECK(PrimeModulus(2).value() == 2);
}

TEST_CASE("field axioms on random triples") {
  testing::Rng rng(7);
  for (std::int64_t p : {2, 3, 5, 7, 101, 65537}) {
    PrimeModulus pm(p);
    for (int i = 0; i < 50; ++i) {
      FieldElement a(testing::rand_below(rng, pm.value()), pm);
      FieldElement b(testing::rand_below(rng, pm.value()), pm);
      FieldElement c(testing::rand_below(rng, pm.value()), pm);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == FieldElement(0, pm));
      if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement(1, pm));
    }
  }
}

TEST_CASE("field elements with mixed moduli are rejected") {
  FieldElement a(1, PrimeModulus(5));
  FieldElement b(1, PrimeModulus(7));
  CHECK_THROWS_AS(a + b, UsageError);
}

TEST_CASE("negative values reduce to canonical representatives") {
  PrimeModulus p7(7);
  CHECK(FieldElement(-1, p7).value() == 6);
  CHECK(FieldElement(-14, p7).value() == 0);
  CHECK(FieldElement(20, p7).value() == 6);
}
