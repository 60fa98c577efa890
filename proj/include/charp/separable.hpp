#ifndef CHARP_SEPARABLE_HPP
#define CHARP_SEPARABLE_HPP

#include <string>
#include <vector>

#include <charp/groebner.hpp>

namespace charp {

/// The data of an equation z^q = sum_i a_i x_i^q (mod the quotient
/// relations), q = p^e with e >= 1. `make` verifies the identity and that
/// every x_i is nonzero modulo the relations; `make_unchecked` skips both
/// checks (used to study deliberately corrupted witnesses).
struct FrobeniusWitness {
  PrimeModulus p;
  std::int64_t q;
  std::int64_t e;
  Polynomial z;
  std::vector<Polynomial> xs; // x_0 ... x_n
  std::vector<Polynomial> as; // a_0 ... a_n
  std::vector<Polynomial> quotient_relations;

  static FrobeniusWitness make(std::int64_t q, Polynomial z,
                               std::vector<Polynomial> xs, std::vector<Polynomial> as,
                               std::vector<Polynomial> quotient_relations = {},
                               const GroebnerOptions& opts = {});
  static FrobeniusWitness make_unchecked(std::int64_t q, Polynomial z,
                                         std::vector<Polynomial> xs,
                                         std::vector<Polynomial> as,
                                         std::vector<Polynomial> quotient_relations = {});
};

/// Presentation of the separable module-finite extension built from a
/// witness: one new variable U_i and one monic relation
/// U_i^q + U_i x_0^q - a_i per index 1 <= i <= n, plus the element
/// u_0 = (z - sum x_i U_i) / x_0 carried as numerator and denominator.
struct ExtensionPresentation {
  VariableSet ext_vars;
  PrimeModulus p;
  std::int64_t q;
  std::vector<std::string> u_names;
  std::vector<Polynomial> relations;
  std::vector<Polynomial> xs; // lifted x_0 ... x_n
  Polynomial a0;              // lifted
  Polynomial u0_numerator;
  Polynomial u0_denominator;  // lifted x_0
  std::vector<Polynomial> quotient_relations; // lifted
};

ExtensionPresentation build_extension(const FrobeniusWitness& w);

/// Every relation is monic in its own U-variable and its U-derivative has
/// nonzero normal form modulo the quotient relations.
bool verify_separability(const ExtensionPresentation& E, const GroebnerOptions& opts = {});

/// (z - sum x_i U_i)^q - x_0^q (a_0 + sum U_i x_i^q) reduces to zero modulo
/// the ideal generated by the relations and the quotient relations.
bool verify_u0_identity(const ExtensionPresentation& E, const GroebnerOptions& opts = {});

/// The invariant ring of the symplectic group action, presented as
/// K[X,Y,Z,A,B]/(Z^q - A X^q - B Y^q), embeds into the polynomial ring
/// K[X,Y,U,V] by z -> UX + VY, a -> U^q + U Y^q, b -> V^q - U X^q. Both the
/// hypersurface equation and the defining relation of u must map to zero.
struct SymplecticCheck {
  std::int64_t q;
  PrimeModulus p;
  Polynomial relation_image;
  Polynomial u_relation_image;
  bool pass;
};

SymplecticCheck symplectic_example_check(std::int64_t q);
bool verify_symplectic_example(std::int64_t q);

/// Witness file: `#` comments and blank lines ignored; a header line
/// `p=<int> q=<int>`, a `vars=<name,...>` line, then `z=`, `x0=`, ...,
/// `a0=`, ..., and repeatable `rel=` lines, all in the polynomial grammar.
FrobeniusWitness parse_witness_file(const std::string& content,
                                    const GroebnerOptions& opts = {});

} // namespace charp

#endif // CHARP_SEPARABLE_HPP
