#ifndef CHARP_GROEBNER_HPP
#define CHARP_GROEBNER_HPP

#include <optional>
#include <vector>

#include <charp/polynomial.hpp>

namespace charp {

struct GroebnerOptions {
  // Caps on processed S-pairs and basis size; exceeding either aborts with
  // ResourceLimitError rather than returning a possibly wrong answer.
  std::uint64_t pair_limit = 100000;
  std::size_t basis_limit = 20000;
};

/// Generators plus optional quotient relations, all over one ambient and
/// modulus. Membership in R/(relations) is decided by appending the
/// relations to every generator set before a basis run. Zero generators
/// are dropped at construction.
class IdealPresentation {
 public:
  IdealPresentation(const VariableSet& vars, PrimeModulus p,
                    std::vector<Polynomial> generators,
                    std::vector<Polynomial> quotient_relations = {});

  const VariableSet& vars() const { return vars_; }
  PrimeModulus modulus() const { return mod_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Polynomial>& quotient_relations() const { return quotient_; }

  /// Same quotient and ambient, new generator list.
  IdealPresentation with_generators(std::vector<Polynomial> gens) const;

 private:
  VariableSet vars_;
  PrimeModulus mod_;
  std::vector<Polynomial> gens_;
  std::vector<Polynomial> quotient_;
};

class GroebnerBasis {
 public:
  GroebnerBasis(const VariableSet& vars, PrimeModulus p, MonomialOrder order,
                std::vector<Polynomial> elements, bool reduced)
      : vars_(vars), mod_(p), order_(order), elems_(std::move(elements)),
        reduced_(reduced) {}

  const VariableSet& vars() const { return vars_; }
  PrimeModulus modulus() const { return mod_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elems_; }
  bool reduced() const { return reduced_; }

 private:
  VariableSet vars_;
  PrimeModulus mod_;
  MonomialOrder order_;
  std::vector<Polynomial> elems_;
  bool reduced_;
};

/// Reduced Groebner basis of (generators + quotient_relations), via
/// Buchberger with normal pair selection and the Gebauer-Moeller criteria.
GroebnerBasis buchberger(const IdealPresentation& ideal,
                         MonomialOrder order = MonomialOrder::grevlex(),
                         const GroebnerOptions& opts = {});

/// Remainder of multivariate division of f by G: no term of the result is
/// divisible by any leading monomial of G, and f - result lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

bool ideal_membership(const Polynomial& f, const IdealPresentation& ideal,
                      MonomialOrder order = MonomialOrder::grevlex(),
                      const GroebnerOptions& opts = {});

/// Generators replaced by their q-th powers (q a power of p); quotient
/// relations unchanged.
IdealPresentation bracket_power(const IdealPresentation& ideal, std::int64_t q);

/// I cap J, computed with one auxiliary variable t via t*I + (1-t)*J and a
/// block order eliminating t. Quotient relations of the shared presentation
/// participate on both sides and are preserved in the result.
IdealPresentation ideal_intersection(const IdealPresentation& I,
                                     const IdealPresentation& J,
                                     const GroebnerOptions& opts = {});

/// (I : J) = {f : f*J in I}, as the intersection over generators g of J of
/// (I : g), each via elimination followed by exact division by g.
IdealPresentation colon_ideal(const IdealPresentation& I,
                              const IdealPresentation& J,
                              const GroebnerOptions& opts = {});

/// Exhaustive check that every S-polynomial of G reduces to zero.
bool spolynomials_reduce_to_zero(const GroebnerBasis& G);

/// Quotient f/g when the division is exact, else nullopt.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

} // namespace charp

#endif // CHARP_GROEBNER_HPP
