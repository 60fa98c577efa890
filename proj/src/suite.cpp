#include <charp/suite.hpp>

#include <chrono>

namespace charp {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class Body>
SuiteReport run_check(std::string name, Json params, Body body) {
  SuiteReport r;
  r.check = std::move(name);
  r.params = std::move(params);
  auto start = Clock::now();
  body(r.details);
  r.elapsed_ms = ms_since(start);
  r.pass = details_conjunction(r.details);
  return r;
}

void require_one_mod_three(const char* check, PrimeModulus p) {
  if (p.value() % 3 != 1) {
    throw DomainError(std::string(check) + ": requires p = 1 mod 3, got p = " +
                      std::to_string(p.value()));
  }
}

std::int64_t k_of(PrimeModulus p) { return (std::int64_t(p.value()) - 1) / 3; }

} // namespace

Json report_to_json(const SuiteReport& r) {
  Json j;
  j["check"] = r.check;
  j["params"] = r.params;
  j["pass"] = r.pass;
  j["elapsed_ms"] = r.elapsed_ms;
  j["details"] = r.details;
  return j;
}

bool details_conjunction(const Json& details) {
  if (details.is_boolean()) return details.get<bool>();
  bool ok = true;
  if (details.is_object() || details.is_array()) {
    for (const auto& item : details) ok = ok && details_conjunction(item);
  }
  return ok;
}

CubicRing::CubicRing(PrimeModulus p_)
    : p(p_), vars(std::vector<std::string>{"x", "y", "z"}),
      relation(Polynomial::zero(vars, p_)) {
  if (p.value() == 3) {
    throw DomainError("the cubic ring is studied in characteristic p != 3");
  }
  relation = mono(3, 0, 0) + mono(0, 3, 0) + mono(0, 0, 3);
}

Polynomial CubicRing::mono(std::uint32_t ex, std::uint32_t ey, std::uint32_t ez) const {
  std::array<std::uint32_t, 3> e{ex, ey, ez};
  return Polynomial::from_term(vars, p, 1, Monomial::from_exponents(e));
}

IdealPresentation CubicRing::ideal(std::vector<Polynomial> gens) const {
  return IdealPresentation(vars, p, std::move(gens), {relation});
}

SuiteReport check_lemma_general(PrimeModulus p, const GroebnerOptions& opts) {
  require_one_mod_three("lemma-general", p);
  const std::int64_t k = k_of(p);
  return run_check("lemma-general", Json{{"p", p.value()}}, [&](Json& d) {
    d["k"] = k;
    VariableSet vars(std::vector<std::string>{"A", "B"});
    auto mono = [&](std::uint32_t ea, std::uint32_t eb) {
      std::array<std::uint32_t, 2> e{ea, eb};
      return Polynomial::from_term(vars, p, 1, Monomial::from_exponents(e));
    };
    Polynomial apb = mono(1, 0) + mono(0, 1);
    IdealPresentation I(vars, p,
                        {mono(std::uint32_t(2 * k + 1), 0),
                         mono(0, std::uint32_t(2 * k + 1)),
                         apb.pow(std::uint64_t(2 * k))});
    GroebnerBasis G = buchberger(I, MonomialOrder::grevlex(), opts);
    Json members = Json::object();
    for (std::int64_t i = 0; i <= 3 * k; ++i) {
      Polynomial m = mono(std::uint32_t(i), std::uint32_t(3 * k - i));
      members[m.str()] = normal_form(m, G).is_zero();
    }
    d["monomial_members"] = members;
    DetComparison c = check_identity({2 * k, 0, k}, p);
    d["matrix_identity_equal"] = c.equal;
    d["matrix_invertible"] = *c.invertible_mod_p;
    d["det_residue"] = c.residue->value();
  });
}

SuiteReport check_lemma_colon(PrimeModulus p, const GroebnerOptions& opts) {
  require_one_mod_three("lemma-colon", p);
  const std::int64_t k = k_of(p);
  return run_check("lemma-colon", Json{{"p", p.value()}}, [&](Json& d) {
    d["k"] = k;
    CubicRing R(p);
    const auto u = [](std::int64_t v) { return std::uint32_t(v); };
    const std::int64_t pv = p.value();
    GroebnerBasis G = buchberger(
        R.ideal({R.mono(u(2 * pv), 0, 0), R.mono(0, u(2 * pv), 0),
                 R.mono(0, 0, u(2 * pv))}),
        MonomialOrder::grevlex(), opts);
    Polynomial f = R.mono(u(pv - 1), u(2 * pv - 2), 0);
    Json members = Json::object();
    const Polynomial tests[] = {R.mono(2, 0, 0), R.mono(0, 2, 0), R.mono(0, 0, 2)};
    for (const Polynomial& t : tests) {
      members[t.str()] = normal_form(f * t, G).is_zero();
    }
    d["colon_memberships"] = members;
    Polynomial g = R.mono(u(3 * k), u(6 * k), 0);
    d["sub_containment_first"] = ideal_membership(
        g,
        R.ideal({R.mono(u(6 * k), 0, 0), R.mono(0, u(6 * k + 3), 0),
                 R.mono(0, 0, u(6 * k + 3))}),
        MonomialOrder::grevlex(), opts);
    d["sub_containment_second"] = ideal_membership(
        g,
        R.ideal({R.mono(u(6 * k + 3), 0, 0), R.mono(0, u(6 * k + 3), 0),
                 R.mono(0, 0, u(6 * k))}),
        MonomialOrder::grevlex(), opts);
  });
}

SuiteReport check_theorem_plus(PrimeModulus p, const GroebnerOptions& opts) {
  require_one_mod_three("theorem-plus", p);
  const std::int64_t k = k_of(p);
  return run_check("theorem-plus", Json{{"p", p.value()}}, [&](Json& d) {
    d["k"] = k;
    CubicRing R(p);
    const auto u = [](std::int64_t v) { return std::uint32_t(v); };
    const std::int64_t pv = p.value();
    Polynomial xyz = R.mono(1, 1, 1);
    std::vector<Polynomial> xs = {R.mono(2, 0, 0), R.mono(0, 2, 0), R.mono(0, 0, 2)};

    CriterionReport crit = equational_criterion_check(xyz, xs, {R.relation}, opts);
    d["criterion_holds"] = crit.holds;
    d["criterion_normal_form"] = crit.normal_form_value.str();
    Json colon = Json::array();
    for (const Polynomial& c : crit.colon_generators) colon.push_back(c.str());
    d["colon_generators"] = colon;

    d["monomial_form_member"] = ideal_membership(
        xyz.frobenius_power(pv),
        R.ideal({R.mono(u(2 * pv), 0, 0), R.mono(0, u(2 * pv), 0),
                 R.mono(0, 0, u(2 * pv)), R.mono(u(pv), u(2 * pv - 1), 1),
                 R.mono(u(2 * pv - 1), u(pv), 1)}),
        MonomialOrder::grevlex(), opts);

    DetComparison c = check_identity({2 * k + 1, 2, k - 2}, p);
    d["matrix_identity_equal"] = c.equal;
    d["matrix_invertible"] = *c.invertible_mod_p;
    d["det_residue"] = c.residue->value();
  });
}

SuiteReport check_frobenius_case(PrimeModulus p, std::int64_t e_max,
                                 const GroebnerOptions& opts) {
  if (p.value() % 3 != 2) {
    throw DomainError("frobenius-case: requires p = 2 mod 3, got p = " +
                      std::to_string(p.value()));
  }
  return run_check("frobenius-case", Json{{"p", p.value()}, {"emax", e_max}},
                   [&](Json& d) {
    CubicRing R(p);
    Polynomial xyz = R.mono(1, 1, 1);
    IdealPresentation I = R.ideal({R.mono(2, 0, 0), R.mono(0, 2, 0), R.mono(0, 0, 2)});
    ClosureSearchResult res = frobenius_closure_test(xyz, I, e_max, opts);
    d["found"] = res.found.has_value();
    if (res.found) {
      d["e"] = res.found->e;
      d["q"] = res.found->q;
      d["certificate_replayed"] = replay_certificate(*res.found, opts);
    } else {
      d["e_max"] = res.e_max;
    }
  });
}

SuiteReport check_cubic_char2(const GroebnerOptions& opts) {
  return run_check("cubic-char2", Json::object(), [&](Json& d) {
    CubicRing R{PrimeModulus(2)};
    GroebnerBasis Grel =
        buchberger(R.ideal({}), MonomialOrder::grevlex(), opts);
    Polynomial lhs = R.mono(0, 0, 4) - R.mono(3, 0, 1) - R.mono(0, 3, 1);
    d["identity_normal_form_zero"] = normal_form(lhs, Grel).is_zero();
    ClosureSearchResult res = frobenius_closure_test(
        R.mono(0, 0, 2), R.ideal({R.mono(1, 0, 0), R.mono(0, 1, 0)}), 1, opts);
    d["closure_found"] = res.found.has_value();
    d["closure_minimal_e_is_1"] = res.found && res.found->e == 1;
  });
}

SuiteReport check_separable_example(std::int64_t q) {
  prime_power_base(q); // domain errors surface before any report exists
  return run_check("separable-example", Json{{"q", q}}, [&](Json& d) {
    SymplecticCheck c = symplectic_example_check(q);
    d["p"] = c.p.value();
    d["relation_image_zero"] = c.relation_image.is_zero();
    d["u_relation_image_zero"] = c.u_relation_image.is_zero();
  });
}

SuiteReport check_lemma_det(const BinomialMatrixSpec& s, std::optional<PrimeModulus> p) {
  Json params{{"n", s.n}, {"a", s.a}, {"k", s.k}};
  if (p) params["p"] = p->value();
  return run_check("lemma-det", std::move(params), [&](Json& d) {
    DetComparison c = check_identity(s, p);
    d["exact_det"] = c.exact_det.str();
    d["closed_form"] = c.closed_form.str();
    d["equal"] = c.equal;
    if (c.residue) d["residue"] = c.residue->value();
  });
}

SuiteReport check_lemma_det_sweep(std::int64_t amax, std::int64_t kmax,
                                  std::int64_t nmax, std::optional<PrimeModulus> p) {
  Json params{{"amax", amax}, {"kmax", kmax}, {"nmax", nmax}};
  if (p) params["p"] = p->value();
  return run_check("lemma-det-sweep", std::move(params), [&](Json& d) {
    std::int64_t cases = 0;
    bool all_equal = true;
    Json failures = Json::array();
    for (std::int64_t a = 0; a <= amax; ++a) {
      for (std::int64_t k = 0; k <= kmax; ++k) {
        for (std::int64_t n = a + 2 * k; n <= nmax; ++n) {
          DetComparison c = check_identity({n, a, k}, p);
          ++cases;
          if (!c.equal) {
            all_equal = false;
            failures.push_back("n=" + std::to_string(n) + " a=" + std::to_string(a) +
                               " k=" + std::to_string(k));
          }
        }
      }
    }
    d["cases"] = cases;
    d["all_equal"] = all_equal;
    d["failures"] = failures;
  });
}

} // namespace charp
