#ifndef CHARP_ARITH_HPP
#define CHARP_ARITH_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include <charp/errors.hpp>

namespace charp {

using BigInt = boost::multiprecision::cpp_int;
// cpp_rational keeps the denominator positive and the fraction reduced.
using BigRat = boost::multiprecision::cpp_rational;

bool is_prime(std::int64_t n);

/// A verified prime 2 <= p < 2^31. Field products fit in 64-bit intermediates.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::int64_t p);

  std::uint32_t value() const { return p_; }
  bool operator==(const PrimeModulus&) const = default;

 private:
  std::uint32_t p_;
};

// Raw residue arithmetic; inputs already reduced mod p.
inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t(a) + b;
  if (s >= p) s -= p;
  return std::uint32_t(s);
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : std::uint32_t(std::uint64_t(a) + p - b);
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return std::uint32_t(std::uint64_t(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

class FieldElement {
 public:
  FieldElement(std::int64_t value, PrimeModulus p);

  std::uint32_t value() const { return v_; }
  PrimeModulus modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement&) const = default;

 private:
  void check_same(const FieldElement& o) const;
  std::uint32_t v_;
  PrimeModulus p_;
};

/// n(n-1)...(n-m+1) / m!, exactly; defined for negative n by the same
/// product, and 1 for m = 0.
BigInt binomial_exact(std::int64_t n, std::int64_t m);

/// binomial_exact(n, m) mod p for n, m >= 0, via base-p digit decomposition.
FieldElement binomial_mod_p(std::int64_t n, std::int64_t m, PrimeModulus p);

} // namespace charp

#endif // CHARP_ARITH_HPP
