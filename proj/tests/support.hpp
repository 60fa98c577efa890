#ifndef CHARP_TESTS_SUPPORT_HPP
#define CHARP_TESTS_SUPPORT_HPP

#include <random>

#include <charp/polynomial.hpp>

namespace charp::testing {

using Rng = std::mt19937_64;

inline std::uint32_t rand_below(Rng& rng, std::uint32_t bound) {
  return std::uniform_int_distribution<std::uint32_t>(0, bound - 1)(rng);
}

inline Monomial random_monomial(Rng& rng, std::size_t nvars, std::uint32_t max_total_deg) {
  std::vector<std::uint32_t> e(nvars, 0);
  std::uint32_t budget = rand_below(rng, max_total_deg + 1);
  for (std::uint32_t i = 0; i < budget; ++i) {
    e[rand_below(rng, std::uint32_t(nvars))] += 1;
  }
  return Monomial::from_exponents(e);
}

inline Polynomial random_poly(Rng& rng, const VariableSet& vars, PrimeModulus p,
                              std::size_t max_terms, std::uint32_t max_total_deg,
                              bool nonzero = false) {
  std::vector<Term> terms;
  std::size_t k = rand_below(rng, std::uint32_t(max_terms)) + 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint32_t c = rand_below(rng, p.value());
    if (c == 0) continue;
    terms.push_back(Term{random_monomial(rng, vars.size(), max_total_deg), c});
  }
  Polynomial f = Polynomial::from_terms(vars, p, std::move(terms));
  if (nonzero && f.is_zero()) {
    return Polynomial::constant(vars, p, 1 + rand_below(rng, p.value() - 1));
  }
  return f;
}

} // namespace charp::testing

#endif // CHARP_TESTS_SUPPORT_HPP
