#include <charp/polynomial.hpp>

#include <algorithm>

namespace charp {

namespace {

const MonomialOrder kCanonical = MonomialOrder::grevlex();

// Sort descending, merge equal monomials, drop zero coefficients.
void canonicalize(std::vector<Term>& t, std::uint32_t p) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) {
    return kCanonical.greater(a.mon, b.mon);
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    Monomial m = t[i].mon;
    std::uint64_t c = 0;
    while (i < t.size() && t[i].mon == m) {
      c += t[i].coef;
      c %= p;
      ++i;
    }
    if (c != 0) t[out++] = Term{m, std::uint32_t(c)};
  }
  t.resize(out);
}

// Merge two canonical term lists with coefficient combiners.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                        std::uint32_t p, bool subtract) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = kCanonical.compare(a[i].mon, b[j].mon);
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      std::uint32_t v = subtract ? sub_mod(0, b[j].coef, p) : b[j].coef;
      r.push_back(Term{b[j].mon, v});
      ++j;
    } else {
      std::uint32_t v = subtract ? sub_mod(a[i].coef, b[j].coef, p)
                                 : add_mod(a[i].coef, b[j].coef, p);
      if (v != 0) r.push_back(Term{a[i].mon, v});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) {
    std::uint32_t v = subtract ? sub_mod(0, b[j].coef, p) : b[j].coef;
    r.push_back(Term{b[j].mon, v});
  }
  return r;
}

} // namespace

Polynomial Polynomial::zero(const VariableSet& vars, PrimeModulus p) {
  return Polynomial(vars, p);
}

Polynomial Polynomial::constant(const VariableSet& vars, PrimeModulus p, std::int64_t c) {
  return from_term(vars, p, c, Monomial::one(vars.size()));
}

Polynomial Polynomial::variable(const VariableSet& vars, PrimeModulus p,
                                const std::string& name) {
  auto idx = vars.index_of(name);
  if (!idx) throw UsageError("unknown variable '" + name + "'");
  return from_term(vars, p, 1, Monomial::variable(vars.size(), *idx));
}

Polynomial Polynomial::from_term(const VariableSet& vars, PrimeModulus p,
                                 std::int64_t coef, const Monomial& m) {
  Polynomial r(vars, p);
  FieldElement c(coef, p);
  if (!c.is_zero()) r.terms_.push_back(Term{m, c.value()});
  return r;
}

Polynomial Polynomial::from_terms(const VariableSet& vars, PrimeModulus p,
                                  std::vector<Term> terms) {
  Polynomial r(vars, p);
  canonicalize(terms, p.value());
  r.terms_ = std::move(terms);
  return r;
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mon.degree());
  return d;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw UsageError("leading term of zero polynomial");
  return terms_.front();
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!(mod_ == o.mod_)) throw UsageError("polynomials with different moduli");
  if (!(vars_ == o.vars_)) throw UsageError("polynomials with different variable sets");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(vars_, mod_);
  r.terms_ = merge(terms_, o.terms_, mod_.value(), false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(vars_, mod_);
  r.terms_ = merge(terms_, o.terms_, mod_.value(), true);
  return r;
}

Polynomial Polynomial::operator-() const {
  return scaled(mod_.value() - 1);
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  const std::uint32_t p = mod_.value();
  c %= p;
  Polynomial r(vars_, mod_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.mon, mul_mod(t.coef, c, p)});
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, std::uint32_t c) const {
  const std::uint32_t p = mod_.value();
  c %= p;
  Polynomial r(vars_, mod_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    r.terms_.push_back(Term{t.mon * m, mul_mod(t.coef, c, p)});
  }
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  const std::uint32_t p = mod_.value();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : o.terms_) {
      prod.push_back(Term{a.mon * b.mon, mul_mod(a.coef, b.coef, p)});
    }
  }
  return from_terms(vars_, mod_, std::move(prod));
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial acc = constant(vars_, mod_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

Polynomial Polynomial::frobenius_power(std::int64_t q) const {
  frobenius_exponent(q, mod_); // rejects q that is not a power of p
  Polynomial r(vars_, mod_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    r.terms_.push_back(Term{t.mon.scaled(std::uint64_t(q)), t.coef});
  }
  // exponent scaling preserves the grevlex order of distinct monomials
  return r;
}

Polynomial Polynomial::derivative(std::size_t var_index) const {
  const std::uint32_t p = mod_.value();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::uint32_t e = t.mon.exponent(var_index);
    if (e == 0) continue;
    std::uint32_t c = mul_mod(t.coef, e % p, p);
    if (c == 0) continue;
    auto m = t.mon.divided_by(Monomial::variable(t.mon.nvars(), var_index));
    out.push_back(Term{*m, c});
  }
  return from_terms(vars_, mod_, std::move(out));
}

Polynomial Polynomial::derivative(const std::string& var_name) const {
  auto idx = vars_.index_of(var_name);
  if (!idx) throw UsageError("unknown variable '" + var_name + "'");
  return derivative(*idx);
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != vars_.size()) {
    throw UsageError("substitute: one image per variable required");
  }
  const VariableSet& target = images.empty() ? vars_ : images[0].vars();
  Polynomial acc = Polynomial::zero(target, mod_);
  for (const Term& t : terms_) {
    Polynomial term = Polynomial::constant(target, mod_, t.coef);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      std::uint32_t e = t.mon.exponent(i);
      if (e != 0) term = term * images[i].pow(e);
    }
    acc = acc + term;
  }
  return acc;
}

Polynomial Polynomial::lifted(const VariableSet& target,
                              const std::vector<std::size_t>& index_map) const {
  if (index_map.size() != vars_.size()) {
    throw UsageError("lifted: index map size mismatch");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::vector<std::uint32_t> e(target.size(), 0);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      e[index_map[i]] = t.mon.exponent(i);
    }
    out.push_back(Term{Monomial::from_exponents(e), t.coef});
  }
  return from_terms(target, mod_, std::move(out));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) s += " + ";
    first = false;
    bool printed = false;
    if (t.coef != 1 || t.mon.is_one()) {
      s += std::to_string(t.coef);
      printed = true;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      std::uint32_t e = t.mon.exponent(i);
      if (e == 0) continue;
      if (printed) s += "*";
      s += vars_.name(i);
      if (e > 1) s += "^" + std::to_string(e);
      printed = true;
    }
  }
  return s;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(mod_ == o.mod_) || !(vars_ == o.vars_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coef != o.terms_[i].coef || !(terms_[i].mon == o.terms_[i].mon)) {
      return false;
    }
  }
  return true;
}

std::int64_t frobenius_exponent(std::int64_t q, PrimeModulus p) {
  if (q < 1) throw DomainError(std::to_string(q) + " is not a power of the characteristic");
  std::int64_t e = 0, v = q;
  while (v > 1) {
    if (v % p.value() != 0) {
      throw DomainError(std::to_string(q) + " is not a power of " +
                        std::to_string(p.value()));
    }
    v /= p.value();
    ++e;
  }
  return e;
}

PrimeModulus prime_power_base(std::int64_t q, std::int64_t* e_out) {
  if (q < 2) throw DomainError(std::to_string(q) + " is not a prime power");
  std::int64_t b = 2;
  while (b * b <= q && q % b != 0) ++b;
  if (b * b > q) b = q; // q itself is prime
  PrimeModulus p(b);
  std::int64_t e = frobenius_exponent(q, p);
  if (e_out) *e_out = e;
  return p;
}

} // namespace charp
