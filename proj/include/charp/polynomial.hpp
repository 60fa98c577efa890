#ifndef CHARP_POLYNOMIAL_HPP
#define CHARP_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <charp/arith.hpp>
#include <charp/monomial.hpp>

namespace charp {

struct Term {
  Monomial mon;
  std::uint32_t coef; // nonzero, already reduced mod p
};

/// Sparse multivariate polynomial over F_p. Terms are kept in canonical
/// form: descending grevlex, no zero coefficients. Immutable value type.
class Polynomial {
 public:
  static Polynomial zero(const VariableSet& vars, PrimeModulus p);
  static Polynomial constant(const VariableSet& vars, PrimeModulus p, std::int64_t c);
  static Polynomial variable(const VariableSet& vars, PrimeModulus p,
                             const std::string& name);
  static Polynomial from_term(const VariableSet& vars, PrimeModulus p,
                              std::int64_t coef, const Monomial& m);
  /// Canonicalizes an arbitrary term list (sorts, merges, drops zeros).
  static Polynomial from_terms(const VariableSet& vars, PrimeModulus p,
                               std::vector<Term> terms);

  const VariableSet& vars() const { return vars_; }
  PrimeModulus modulus() const { return mod_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }
  /// Total degree; 0 for the zero polynomial.
  std::uint64_t degree() const;
  /// Leading term under grevlex. Polynomial must be nonzero.
  const Term& leading() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(std::uint32_t c) const;                    // c * f
  Polynomial times_term(const Monomial& m, std::uint32_t c) const;

  /// f^e by repeated squaring, e >= 0.
  Polynomial pow(std::uint64_t e) const;

  /// f^q for q a power of the characteristic: multiplies every exponent
  /// vector by q, coefficients unchanged (c^p = c in F_p).
  Polynomial frobenius_power(std::int64_t q) const;

  Polynomial derivative(std::size_t var_index) const;
  Polynomial derivative(const std::string& var_name) const;

  /// Image under x_i -> images[i]; all images share one target ambient.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  /// Reinterpret over a larger ambient; index_map[i] is the target slot of
  /// source variable i.
  Polynomial lifted(const VariableSet& target,
                    const std::vector<std::size_t>& index_map) const;

  std::string str() const;

  bool operator==(const Polynomial& o) const;

 private:
  Polynomial(VariableSet vars, PrimeModulus p) : vars_(std::move(vars)), mod_(p) {}
  void check_compatible(const Polynomial& o) const;

  VariableSet vars_;
  PrimeModulus mod_;
  std::vector<Term> terms_;
};

/// Checks whether q = p^e for some e >= 0; returns e.
std::int64_t frobenius_exponent(std::int64_t q, PrimeModulus p);

/// Smallest prime p with q = p^e, e >= 1; rejects non prime powers.
PrimeModulus prime_power_base(std::int64_t q, std::int64_t* e_out = nullptr);

} // namespace charp

#endif // CHARP_POLYNOMIAL_HPP
