#include <charp/separable.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include <charp/parser.hpp>

namespace charp {

namespace {

void check_witness_shape(std::int64_t q, const Polynomial& z,
                         const std::vector<Polynomial>& xs,
                         const std::vector<Polynomial>& as, std::int64_t* e_out,
                         PrimeModulus* p_out) {
  if (xs.empty() || xs.size() != as.size()) {
    throw UsageError("witness needs equally many x_i and a_i, at least one each");
  }
  PrimeModulus p = z.modulus();
  std::int64_t e = frobenius_exponent(q, p);
  if (e < 1) throw DomainError("witness requires q = p^e with e >= 1");
  *e_out = e;
  *p_out = p;
}

Polynomial witness_defect(std::int64_t q, const Polynomial& z,
                          const std::vector<Polynomial>& xs,
                          const std::vector<Polynomial>& as) {
  Polynomial rhs = Polynomial::zero(z.vars(), z.modulus());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    rhs = rhs + as[i] * xs[i].frobenius_power(q);
  }
  return z.frobenius_power(q) - rhs;
}

} // namespace

FrobeniusWitness FrobeniusWitness::make(std::int64_t q, Polynomial z,
                                        std::vector<Polynomial> xs,
                                        std::vector<Polynomial> as,
                                        std::vector<Polynomial> quotient_relations,
                                        const GroebnerOptions& opts) {
  std::int64_t e = 0;
  PrimeModulus p(2);
  check_witness_shape(q, z, xs, as, &e, &p);
  GroebnerBasis Q = buchberger(
      IdealPresentation(z.vars(), p, quotient_relations), MonomialOrder::grevlex(), opts);
  Polynomial defect = normal_form(witness_defect(q, z, xs, as), Q);
  if (!defect.is_zero()) {
    throw WitnessError("witness identity z^q = sum a_i x_i^q fails", defect.str());
  }
  for (const Polynomial& x : xs) {
    if (normal_form(x, Q).is_zero()) {
      throw WitnessError("witness element x_i vanishes modulo the relations", x.str());
    }
  }
  return FrobeniusWitness{p, q, e, std::move(z), std::move(xs), std::move(as),
                          std::move(quotient_relations)};
}

FrobeniusWitness FrobeniusWitness::make_unchecked(std::int64_t q, Polynomial z,
                                                  std::vector<Polynomial> xs,
                                                  std::vector<Polynomial> as,
                                                  std::vector<Polynomial> quotient_relations) {
  std::int64_t e = 0;
  PrimeModulus p(2);
  check_witness_shape(q, z, xs, as, &e, &p);
  return FrobeniusWitness{p, q, e, std::move(z), std::move(xs), std::move(as),
                          std::move(quotient_relations)};
}

ExtensionPresentation build_extension(const FrobeniusWitness& w) {
  const std::size_t n = w.xs.size() - 1;
  const VariableSet& base = w.z.vars();

  std::vector<std::string> u_names;
  u_names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    u_names.push_back(base.fresh_name("U" + std::to_string(i)));
  }
  VariableSet ext = base.extended(u_names);

  std::vector<std::size_t> up(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) up[i] = i;
  auto lift = [&](const Polynomial& f) { return f.lifted(ext, up); };

  std::vector<Polynomial> xs;
  xs.reserve(w.xs.size());
  for (const Polynomial& x : w.xs) xs.push_back(lift(x));
  Polynomial a0 = lift(w.as[0]);
  std::vector<Polynomial> quotient;
  quotient.reserve(w.quotient_relations.size());
  for (const Polynomial& r : w.quotient_relations) quotient.push_back(lift(r));

  Polynomial x0q = xs[0].frobenius_power(w.q);
  std::vector<Polynomial> relations;
  relations.reserve(n);
  Polynomial u0_num = lift(w.z);
  for (std::size_t i = 1; i <= n; ++i) {
    Polynomial ui = Polynomial::variable(ext, w.p, u_names[i - 1]);
    relations.push_back(ui.frobenius_power(w.q) + ui * x0q - lift(w.as[i]));
    u0_num = u0_num - xs[i] * ui;
  }
  Polynomial u0_den = xs[0];

  return ExtensionPresentation{std::move(ext),     w.p,
                               w.q,                std::move(u_names),
                               std::move(relations), std::move(xs),
                               std::move(a0),      std::move(u0_num),
                               std::move(u0_den),  std::move(quotient)};
}

bool verify_separability(const ExtensionPresentation& E, const GroebnerOptions& opts) {
  GroebnerBasis Q = buchberger(IdealPresentation(E.ext_vars, E.p, E.quotient_relations),
                               MonomialOrder::grevlex(), opts);
  for (std::size_t i = 0; i < E.relations.size(); ++i) {
    const Polynomial& r = E.relations[i];
    auto uidx = E.ext_vars.index_of(E.u_names[i]);
    std::uint32_t top = 0;
    for (const Term& t : r.terms()) top = std::max(top, t.mon.exponent(*uidx));
    if (top == 0) return false;
    // the top U_i-slice must be exactly 1 * U_i^top
    for (const Term& t : r.terms()) {
      if (t.mon.exponent(*uidx) != top) continue;
      if (t.coef != 1 || t.mon.degree() != top) return false;
    }
    if (normal_form(r.derivative(*uidx), Q).is_zero()) return false;
  }
  return true;
}

bool verify_u0_identity(const ExtensionPresentation& E, const GroebnerOptions& opts) {
  Polynomial rhs = E.a0;
  for (std::size_t i = 1; i < E.xs.size(); ++i) {
    Polynomial ui = Polynomial::variable(E.ext_vars, E.p, E.u_names[i - 1]);
    rhs = rhs + ui * E.xs[i].frobenius_power(E.q);
  }
  Polynomial diff = E.u0_numerator.frobenius_power(E.q) -
                    E.xs[0].frobenius_power(E.q) * rhs;

  // Reorder with the U-variables in an elimination block: each relation is
  // then led by its pure power U_i^q, the leading terms are pairwise coprime,
  // and reduction is exactly the substitution U_i^q -> a_i - U_i x_0^q.
  const std::size_t nu = E.u_names.size();
  const std::size_t nbase = E.ext_vars.size() - nu;
  std::vector<std::string> names = E.u_names;
  for (std::size_t i = 0; i < nbase; ++i) names.push_back(E.ext_vars.name(i));
  VariableSet ufirst(names);
  std::vector<std::size_t> up(E.ext_vars.size());
  for (std::size_t i = 0; i < nbase; ++i) up[i] = nu + i;
  for (std::size_t j = 0; j < nu; ++j) up[nbase + j] = j;

  std::vector<Polynomial> gens, quotient;
  for (const Polynomial& r : E.relations) gens.push_back(r.lifted(ufirst, up));
  for (const Polynomial& r : E.quotient_relations) {
    quotient.push_back(r.lifted(ufirst, up));
  }
  GroebnerBasis G = buchberger(IdealPresentation(ufirst, E.p, gens, quotient),
                               MonomialOrder::block(std::uint32_t(nu)), opts);
  return normal_form(diff.lifted(ufirst, up), G).is_zero();
}

SymplecticCheck symplectic_example_check(std::int64_t q) {
  std::int64_t e = 0;
  PrimeModulus p = prime_power_base(q, &e);
  VariableSet src({"X", "Y", "Z", "A", "B", "U"});
  VariableSet dst({"X", "Y", "U", "V"});

  auto sv = [&](const char* n) { return Polynomial::variable(src, p, n); };
  auto dv = [&](const char* n) { return Polynomial::variable(dst, p, n); };

  Polynomial hyper = sv("Z").frobenius_power(q) -
                     sv("A") * sv("X").frobenius_power(q) -
                     sv("B") * sv("Y").frobenius_power(q);
  Polynomial u_rel = sv("U").frobenius_power(q) - sv("A") +
                     sv("U") * sv("Y").frobenius_power(q);

  Polynomial X = dv("X"), Y = dv("Y"), U = dv("U"), V = dv("V");
  std::vector<Polynomial> images = {
      X,
      Y,
      U * X + V * Y,
      U.frobenius_power(q) + U * Y.frobenius_power(q),
      V.frobenius_power(q) - U * X.frobenius_power(q),
      U,
  };

  Polynomial rel_img = hyper.substitute(images);
  Polynomial u_img = u_rel.substitute(images);
  bool pass = rel_img.is_zero() && u_img.is_zero();
  return SymplecticCheck{q, p, std::move(rel_img), std::move(u_img), pass};
}

bool verify_symplectic_example(std::int64_t q) {
  return symplectic_example_check(q).pass;
}

FrobeniusWitness parse_witness_file(const std::string& content,
                                    const GroebnerOptions& opts) {
  std::istringstream in(content);
  std::string line;
  std::vector<std::pair<std::string, std::string>> entries;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto notspace = [](char c) { return !std::isspace(std::uint8_t(c)); };
    auto b = std::find_if(line.begin(), line.end(), notspace);
    auto ee = std::find_if(line.rbegin(), line.rend(), notspace).base();
    if (b >= ee) continue;
    entries.emplace_back(std::string(b, ee), std::to_string(lineno));
  }
  if (entries.empty()) throw ParseError("empty witness file", 1, 1);

  auto bad = [&](const std::string& msg, const std::string& ln) {
    throw ParseError(msg, std::stoul(ln), 1);
  };

  // header: p=<int> q=<int>
  std::int64_t pval = 0, qval = 0;
  {
    std::istringstream hs(entries[0].first);
    std::string tp, tq;
    hs >> tp >> tq;
    if (tp.rfind("p=", 0) != 0 || tq.rfind("q=", 0) != 0) {
      bad("expected header 'p=<int> q=<int>'", entries[0].second);
    }
    pval = std::stoll(tp.substr(2));
    qval = std::stoll(tq.substr(2));
  }
  PrimeModulus p(pval);

  std::optional<VariableSet> vars;
  std::map<std::size_t, std::string> xmap, amap;
  std::optional<std::string> ztext;
  std::vector<std::string> rels;

  for (std::size_t i = 1; i < entries.size(); ++i) {
    const std::string& s = entries[i].first;
    auto eq = s.find('=');
    if (eq == std::string::npos) bad("expected key=value", entries[i].second);
    std::string key = s.substr(0, eq), val = s.substr(eq + 1);
    if (key == "vars") {
      std::vector<std::string> names;
      std::istringstream vs(val);
      std::string name;
      while (std::getline(vs, name, ',')) {
        std::erase_if(name, [](char c) { return std::isspace(std::uint8_t(c)); });
        if (!name.empty()) names.push_back(name);
      }
      vars = VariableSet(names);
    } else if (key == "z") {
      ztext = val;
    } else if (key == "rel") {
      rels.push_back(val);
    } else if (key.size() > 1 && (key[0] == 'x' || key[0] == 'a') &&
               std::all_of(key.begin() + 1, key.end(),
                           [](char c) { return std::isdigit(std::uint8_t(c)); })) {
      std::size_t idx = std::stoul(key.substr(1));
      (key[0] == 'x' ? xmap : amap)[idx] = val;
    } else {
      bad("unknown key '" + key + "'", entries[i].second);
    }
  }

  if (!vars) throw ParseError("missing vars= line", 1, 1);
  if (!ztext) throw ParseError("missing z= line", 1, 1);
  if (xmap.empty() || xmap.size() != amap.size()) {
    throw ParseError("need matching x0... and a0... lines", 1, 1);
  }
  for (std::size_t i = 0; i < xmap.size(); ++i) {
    if (!xmap.count(i) || !amap.count(i)) {
      throw ParseError("x/a indices must be contiguous from 0", 1, 1);
    }
  }

  Polynomial z = parse_poly(*ztext, *vars, p);
  std::vector<Polynomial> xs, as, quotient;
  for (std::size_t i = 0; i < xmap.size(); ++i) {
    xs.push_back(parse_poly(xmap[i], *vars, p));
    as.push_back(parse_poly(amap[i], *vars, p));
  }
  for (const std::string& r : rels) quotient.push_back(parse_poly(r, *vars, p));

  return FrobeniusWitness::make(qval, std::move(z), std::move(xs), std::move(as),
                                std::move(quotient), opts);
}

} // namespace charp
