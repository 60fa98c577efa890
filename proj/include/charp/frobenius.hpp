#ifndef CHARP_FROBENIUS_HPP
#define CHARP_FROBENIUS_HPP

#include <optional>

#include <charp/groebner.hpp>

namespace charp {

/// Witnesses z^q in I^[q] for q = p^e (computed in the quotient when the
/// ideal carries relations).
struct FrobeniusCertificate {
  std::int64_t e = 0;
  std::int64_t q = 1;
  Polynomial element;
  IdealPresentation ideal;
};

/// Re-verifies a certificate through independent calls to frobenius_power,
/// bracket_power and ideal_membership.
bool replay_certificate(const FrobeniusCertificate& cert,
                        const GroebnerOptions& opts = {});

struct ClosureSearchResult {
  std::optional<FrobeniusCertificate> found; // engaged: smallest e that works
  std::int64_t e_max = 0;                    // every e <= e_max was checked
};

/// Smallest e <= e_max with z^{p^e} in I^[p^e], else an explicit
/// NotFoundUpTo(e_max). Resource errors are rethrown tagged with the
/// failing e.
ClosureSearchResult frobenius_closure_test(const Polynomial& z,
                                           const IdealPresentation& I,
                                           std::int64_t e_max = 6,
                                           const GroebnerOptions& opts = {});

/// Decision of z^p in (x_1^p, ..., x_k^p) + z*((x_1^p, ..., x_k^p) :
/// (x_1, ..., x_k)), the sufficient condition for forcing z into the
/// expansion of (x_1, ..., x_k) to a module-finite extension.
struct CriterionReport {
  bool holds = false;
  std::vector<Polynomial> colon_generators;
  Polynomial normal_form_value;
};

CriterionReport equational_criterion_check(const Polynomial& z,
                                           const std::vector<Polynomial>& xs,
                                           const std::vector<Polynomial>& quotient_relations,
                                           const GroebnerOptions& opts = {});

} // namespace charp

#endif // CHARP_FROBENIUS_HPP
