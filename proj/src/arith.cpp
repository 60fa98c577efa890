#include <charp/arith.hpp>

namespace charp {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t(1) << 31)) {
    throw DomainError("modulus " + std::to_string(p) +
                      " outside supported range [2, 2^31)");
  }
  if (!is_prime(p)) {
    throw DomainError("modulus " + std::to_string(p) + " is not prime");
  }
  p_ = std::uint32_t(p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t base = a % p, r = 1;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return std::uint32_t(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DomainError("inverse of zero mod " + std::to_string(p));
  return pow_mod(a % p, p - 2, p);
}

FieldElement::FieldElement(std::int64_t value, PrimeModulus p) : p_(p) {
  std::int64_t m = p.value();
  std::int64_t r = value % m;
  if (r < 0) r += m;
  v_ = std::uint32_t(r);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(p_ == o.p_)) throw UsageError("field elements with different moduli");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return FieldElement(add_mod(v_, o.v_, p_.value()), p_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return FieldElement(sub_mod(v_, o.v_, p_.value()), p_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return FieldElement(mul_mod(v_, o.v_, p_.value()), p_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return *this * o.inverse();
}

FieldElement FieldElement::operator-() const {
  return FieldElement(v_ == 0 ? 0 : p_.value() - v_, p_);
}

FieldElement FieldElement::inverse() const {
  return FieldElement(inv_mod(v_, p_.value()), p_);
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  return FieldElement(pow_mod(v_, e, p_.value()), p_);
}

BigInt binomial_exact(std::int64_t n, std::int64_t m) {
  if (m < 0) throw DomainError("binomial with negative lower index");
  BigInt num = 1;
  for (std::int64_t i = 0; i < m; ++i) num *= BigInt(n - i);
  BigInt den = 1;
  for (std::int64_t i = 2; i <= m; ++i) den *= i;
  return num / den; // exact: m! divides any product of m consecutive integers
}

namespace {

// C(n, m) mod p for digits n, m < p.
std::uint32_t small_binomial_mod(std::uint32_t n, std::uint32_t m, std::uint32_t p) {
  if (m > n) return 0;
  if (m > n - m) m = n - m;
  std::uint64_t num = 1, den = 1;
  for (std::uint32_t i = 1; i <= m; ++i) {
    num = num * ((n + 1 - i) % p) % p;
    den = den * (i % p) % p;
  }
  return mul_mod(std::uint32_t(num), inv_mod(std::uint32_t(den), p), p);
}

} // namespace

FieldElement binomial_mod_p(std::int64_t n, std::int64_t m, PrimeModulus p) {
  if (n < 0 || m < 0) {
    throw DomainError("binomial_mod_p requires nonnegative arguments");
  }
  const std::uint32_t pp = p.value();
  std::uint64_t nn = std::uint64_t(n), mm = std::uint64_t(m);
  std::uint32_t r = 1;
  while (mm > 0 || nn > 0) {
    std::uint32_t nd = std::uint32_t(nn % pp), md = std::uint32_t(mm % pp);
    r = mul_mod(r, small_binomial_mod(nd, md, pp), pp);
    if (r == 0) break;
    nn /= pp;
    mm /= pp;
  }
  return FieldElement(r, p);
}

} // namespace charp
