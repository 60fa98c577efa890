#include <charp/frobenius.hpp>

namespace charp {

bool replay_certificate(const FrobeniusCertificate& cert, const GroebnerOptions& opts) {
  Polynomial zq = cert.element.frobenius_power(cert.q);
  IdealPresentation iq = bracket_power(cert.ideal, cert.q);
  return ideal_membership(zq, iq, MonomialOrder::grevlex(), opts);
}

ClosureSearchResult frobenius_closure_test(const Polynomial& z,
                                           const IdealPresentation& I,
                                           std::int64_t e_max,
                                           const GroebnerOptions& opts) {
  if (e_max < 0) throw DomainError("frobenius_closure_test requires e_max >= 0");
  const std::int64_t p = I.modulus().value();
  std::int64_t q = 1;
  for (std::int64_t e = 0; e <= e_max; ++e) {
    try {
      if (ideal_membership(z.frobenius_power(q), bracket_power(I, q),
                           MonomialOrder::grevlex(), opts)) {
        return ClosureSearchResult{FrobeniusCertificate{e, q, z, I}, e_max};
      }
    } catch (const ResourceLimitError& err) {
      throw ResourceLimitError("closure search at e = " + std::to_string(e) + ": " +
                               err.what());
    }
    q *= p;
  }
  return ClosureSearchResult{std::nullopt, e_max};
}

CriterionReport equational_criterion_check(const Polynomial& z,
                                           const std::vector<Polynomial>& xs,
                                           const std::vector<Polynomial>& quotient_relations,
                                           const GroebnerOptions& opts) {
  if (xs.empty()) throw UsageError("equational criterion needs a nonempty ideal");
  for (const Polynomial& x : xs) {
    if (x.is_zero()) throw UsageError("equational criterion: zero generator");
  }
  const VariableSet& vars = z.vars();
  const PrimeModulus p = z.modulus();
  const std::int64_t pv = p.value();

  std::vector<Polynomial> bracket;
  bracket.reserve(xs.size());
  for (const Polynomial& x : xs) bracket.push_back(x.frobenius_power(pv));

  IdealPresentation bracket_ideal(vars, p, bracket, quotient_relations);
  IdealPresentation plain_ideal(vars, p, xs, quotient_relations);
  IdealPresentation colon = colon_ideal(bracket_ideal, plain_ideal, opts);

  std::vector<Polynomial> sum_gens = bracket;
  for (const Polynomial& c : colon.generators()) sum_gens.push_back(z * c);
  IdealPresentation sum_ideal(vars, p, std::move(sum_gens), quotient_relations);

  Polynomial nf = normal_form(z.frobenius_power(pv),
                              buchberger(sum_ideal, MonomialOrder::grevlex(), opts));
  return CriterionReport{nf.is_zero(), colon.generators(), nf};
}

} // namespace charp
