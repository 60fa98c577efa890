#include <charp/groebner.hpp>

#include <algorithm>
#include <set>

namespace charp {

namespace {

// ---------------------------------------------------------------------------
// Term-list primitives under an explicit order (descending storage).

using Terms = std::vector<Term>;

void sort_terms(Terms& t, const MonomialOrder& ord) {
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mon, b.mon); });
}

Terms merge_ord(const Terms& a, const Terms& b, const MonomialOrder& ord,
                std::uint32_t p, bool subtract) {
  Terms r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ord.compare(a[i].mon, b[j].mon);
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

Terms scale_terms(std::span<const Term> src, const Monomial& m, std::uint32_t c,
                  std::uint32_t p) {
  Terms r;
  r.reserve(src.size());
  for (const Term& t : src) r.push_back(Term{t.mon * m, mul_mod(t.coef, c, p)});
  return r;
}

// ---------------------------------------------------------------------------
// Geobucket accumulator for long divisions (Yan's buckets of geometrically
// growing capacity; keeps repeated tail subtractions near-linear).

class Geobucket {
 public:
  Geobucket(const MonomialOrder& ord, std::uint32_t p) : ord_(&ord), p_(p) {}

  void add(Terms&& t) {
    if (t.empty()) return;
    std::size_t i = 0;
    while (cap(i) < t.size()) ++i;
    while (true) {
      if (i >= buckets_.size()) buckets_.resize(i + 1);
      Bucket& b = buckets_[i];
      if (b.empty()) {
        b.t = std::move(t);
        b.beg = 0;
        return;
      }
      Terms merged = merge_ord(b.view(), t, *ord_, p_, false);
      b.t.clear();
      b.beg = 0;
      if (merged.size() <= cap(i)) {
        b.t = std::move(merged);
        return;
      }
      t = std::move(merged);
      ++i;
    }
  }

  void add_scaled(std::span<const Term> src, const Monomial& m, std::uint32_t c) {
    add(scale_terms(src, m, c, p_));
  }

  std::optional<Term> extract_leading() {
    while (true) {
      int best = -1;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty()) continue;
        if (best < 0 ||
            ord_->greater(buckets_[i].front().mon, buckets_[best].front().mon)) {
          best = int(i);
        }
      }
      if (best < 0) return std::nullopt;
      Monomial m = buckets_[best].front().mon;
      std::uint32_t c = 0;
      for (auto& b : buckets_) {
        if (!b.empty() && b.front().mon == m) {
          c = add_mod(c, b.front().coef, p_);
          b.pop_front();
        }
      }
      if (c != 0) return Term{m, c};
    }
  }

 private:
  struct Bucket {
    Terms t;
    std::size_t beg = 0;
    bool empty() const { return beg >= t.size(); }
    const Term& front() const { return t[beg]; }
    void pop_front() {
      ++beg;
      if (beg == t.size()) {
        t.clear();
        beg = 0;
      }
    }
    Terms view() const { return Terms(t.begin() + std::ptrdiff_t(beg), t.end()); }
  };

  static std::size_t cap(std::size_t i) { return std::size_t(1) << (2 * (i + 1)); }

  std::vector<Bucket> buckets_;
  const MonomialOrder* ord_;
  std::uint32_t p_;
};

// ---------------------------------------------------------------------------
// Division against a fixed divisor list.

struct Divisor {
  Terms t; // monic, sorted descending under the active order
  Monomial lm;
};

struct DivisorSet {
  const MonomialOrder* ord;
  std::vector<Divisor> elems;
  // scan order: single-term divisors first (each hit just deletes a term),
  // then by ascending leading monomial
  std::vector<std::uint32_t> scan;

  void push(Terms t) {
    Divisor d;
    d.lm = t.front().mon;
    d.t = std::move(t);
    elems.push_back(std::move(d));
    std::uint32_t idx = std::uint32_t(elems.size() - 1);
    auto rank = [&](std::uint32_t k) {
      return std::pair<bool, const Monomial*>(elems[k].t.size() > 1, &elems[k].lm);
    };
    auto cmp = [&](std::uint32_t a, std::uint32_t b) {
      auto [ma, la] = rank(a);
      auto [mb, lb] = rank(b);
      if (ma != mb) return !ma;
      int c = ord->compare(*la, *lb);
      if (c != 0) return c < 0;
      return a < b;
    };
    scan.insert(std::lower_bound(scan.begin(), scan.end(), idx, cmp), idx);
  }

  const Divisor* find(const Monomial& m) const {
    for (std::uint32_t k : scan) {
      if (elems[k].lm.divides(m)) return &elems[k];
    }
    return nullptr;
  }
};

Terms reduce_full(Terms f, const DivisorSet& D, const MonomialOrder& ord,
                  std::uint32_t p) {
  Geobucket W(ord, p);
  W.add(std::move(f));
  Terms rem;
  while (auto lt = W.extract_leading()) {
    const Divisor* g = D.find(lt->mon);
    if (!g) {
      rem.push_back(*lt);
      continue;
    }
    Monomial quot = *lt->mon.divided_by(g->lm);
    if (g->t.size() > 1) {
      W.add_scaled(std::span<const Term>(g->t).subspan(1), quot,
                   sub_mod(0, lt->coef, p));
    }
  }
  return rem;
}

void make_monic(Terms& t, std::uint32_t p) {
  if (t.empty() || t.front().coef == 1) return;
  std::uint32_t inv = inv_mod(t.front().coef, p);
  for (Term& x : t) x.coef = mul_mod(x.coef, inv, p);
}

// ---------------------------------------------------------------------------
// Buchberger with Gebauer-Moeller pair pruning.

struct Engine {
  Engine(const VariableSet& vars, PrimeModulus mod, MonomialOrder order,
         const GroebnerOptions& options)
      : vs(vars), p(mod), ord(order), opts(options) {
    D.ord = &ord;
  }

  const VariableSet& vs;
  PrimeModulus p;
  MonomialOrder ord;
  GroebnerOptions opts;
  DivisorSet D;

  struct Pair {
    std::uint32_t i, j;
    Monomial lcm;
  };
  struct PairCmp {
    const MonomialOrder* o;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      int c = o->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };
  std::set<Pair, PairCmp> pairs{PairCmp{&ord}};
  std::uint64_t processed = 0;

  const Monomial& lm(std::uint32_t k) const { return D.elems[k].lm; }

  void add_element(Terms t) {
    if (D.elems.size() >= opts.basis_limit) {
      throw ResourceLimitError("basis size limit of " +
                               std::to_string(opts.basis_limit) + " exceeded");
    }
    const std::uint32_t nt = std::uint32_t(D.elems.size());
    const Monomial Lt = t.front().mon;

    // Gebauer-Moeller criterion B: drop old pairs strictly superseded by nt.
    for (auto it = pairs.begin(); it != pairs.end();) {
      const Monomial li = lm(it->i).lcm(Lt);
      const Monomial lj = lm(it->j).lcm(Lt);
      if (Lt.divides(it->lcm) && !(li == it->lcm) && !(lj == it->lcm)) {
        it = pairs.erase(it);
      } else {
        ++it;
      }
    }

    // Candidate pairs (i, nt), pruned by criteria M and F, with the product
    // criterion applied per lcm class.
    struct Cand {
      std::uint32_t i;
      Monomial l;
      bool coprime;
    };
    std::vector<Cand> cand;
    cand.reserve(nt);
    for (std::uint32_t i = 0; i < nt; ++i) {
      cand.push_back(Cand{i, lm(i).lcm(Lt), lm(i).coprime(Lt)});
    }
    std::vector<bool> drop(cand.size(), false);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b) continue;
        if (cand[b].l.divides(cand[a].l) && !(cand[b].l == cand[a].l)) {
          drop[a] = true;
          break;
        }
      }
    }
    // group equal lcms: keep one representative, none if any is coprime
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      bool coprime_class = cand[a].coprime;
      for (std::size_t b = a + 1; b < cand.size(); ++b) {
        if (drop[b]) continue;
        if (cand[b].l == cand[a].l) {
          coprime_class = coprime_class || cand[b].coprime;
          drop[b] = true;
        }
      }
      if (coprime_class) drop[a] = true;
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!drop[a]) pairs.insert(Pair{cand[a].i, nt, cand[a].l});
    }

    D.push(std::move(t));
  }

  Terms spoly(std::uint32_t i, std::uint32_t j) const {
    const Monomial l = lm(i).lcm(lm(j));
    Terms a = scale_terms(D.elems[i].t, *l.divided_by(lm(i)), 1, p.value());
    Terms b = scale_terms(D.elems[j].t, *l.divided_by(lm(j)), 1, p.value());
    return merge_ord(a, b, ord, p.value(), true);
  }

  void run(const std::vector<Polynomial>& inputs) {
    for (const Polynomial& f : inputs) {
      Terms t = f.terms();
      sort_terms(t, ord);
      t = reduce_full(std::move(t), D, ord, p.value());
      if (t.empty()) continue;
      make_monic(t, p.value());
      add_element(std::move(t));
    }
    while (!pairs.empty()) {
      if (++processed > opts.pair_limit) {
        throw ResourceLimitError("pair limit of " + std::to_string(opts.pair_limit) +
                                 " exceeded after " + std::to_string(D.elems.size()) +
                                 " basis elements");
      }
      Pair pr = *pairs.begin();
      pairs.erase(pairs.begin());
      Terms s = spoly(pr.i, pr.j);
      if (s.empty()) continue;
      Terms r = reduce_full(std::move(s), D, ord, p.value());
      if (r.empty()) continue;
      make_monic(r, p.value());
      add_element(std::move(r));
    }
  }

  // Minimal, tail-reduced, monic basis sorted ascending by leading monomial.
  std::vector<Polynomial> reduced_elements() const {
    std::vector<std::uint32_t> idx(D.elems.size());
    for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
      return ord.less(lm(a), lm(b));
    });
    std::vector<std::uint32_t> kept;
    for (std::uint32_t k : idx) {
      bool redundant = false;
      for (std::uint32_t m : kept) {
        if (lm(m).divides(lm(k))) {
          redundant = true;
          break;
        }
      }
      if (!redundant) kept.push_back(k);
    }
    DivisorSet minimal;
    minimal.ord = &ord;
    for (std::uint32_t k : kept) minimal.push(D.elems[k].t);
    std::vector<Polynomial> out;
    out.reserve(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
      const Divisor& self = minimal.elems[i];
      Terms tail(self.t.begin() + 1, self.t.end());
      Terms red = reduce_with_exclusion(std::move(tail), minimal, i);
      Terms full;
      full.reserve(red.size() + 1);
      full.push_back(self.t.front());
      full.insert(full.end(), red.begin(), red.end());
      out.push_back(Polynomial::from_terms(vs, p, std::move(full)));
    }
    return out;
  }

  Terms reduce_with_exclusion(Terms f, const DivisorSet& D0, std::size_t self) const {
    Geobucket W(ord, p.value());
    W.add(std::move(f));
    Terms rem;
    while (auto lt = W.extract_leading()) {
      const Divisor* g = nullptr;
      for (std::uint32_t k : D0.scan) {
        if (k == self) continue;
        if (D0.elems[k].lm.divides(lt->mon)) {
          g = &D0.elems[k];
          break;
        }
      }
      if (!g) {
        rem.push_back(*lt);
        continue;
      }
      Monomial quot = *lt->mon.divided_by(g->lm);
      if (g->t.size() > 1) {
        W.add_scaled(std::span<const Term>(g->t).subspan(1), quot,
                     sub_mod(0, lt->coef, p.value()));
      }
    }
    return rem;
  }
};

DivisorSet divisor_set_of(const GroebnerBasis& G, const MonomialOrder& ord) {
  DivisorSet D;
  D.ord = &ord;
  for (const Polynomial& g : G.elements()) {
    Terms t = g.terms();
    sort_terms(t, ord);
    D.push(std::move(t));
  }
  return D;
}

std::vector<Polynomial> drop_zeros(std::vector<Polynomial> v) {
  std::erase_if(v, [](const Polynomial& f) { return f.is_zero(); });
  return v;
}

// Ideal generators lifted into an ambient with one fresh variable in front.
struct FrontExtension {
  VariableSet ext;
  std::vector<std::size_t> up;   // source index -> ext index
};

FrontExtension extend_front(const VariableSet& vars) {
  FrontExtension fe{vars.with_front("t"), {}};
  fe.up.resize(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) fe.up[i] = i + 1;
  return fe;
}

Polynomial drop_front_var(const Polynomial& f, const VariableSet& target) {
  std::vector<Term> out;
  out.reserve(f.nterms());
  for (const Term& t : f.terms()) {
    std::vector<std::uint32_t> e(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) e[i] = t.mon.exponent(i + 1);
    out.push_back(Term{Monomial::from_exponents(e), t.coef});
  }
  return Polynomial::from_terms(target, f.modulus(), std::move(out));
}

// Intersection of two generator lists in the plain polynomial ring (no
// quotient semantics); the t*I + (1-t)*J elimination.
std::vector<Polynomial> intersect_plain(const VariableSet& vars, PrimeModulus p,
                                        const std::vector<Polynomial>& A,
                                        const std::vector<Polynomial>& B,
                                        const GroebnerOptions& opts) {
  if (A.empty() || B.empty()) return {};
  FrontExtension fe = extend_front(vars);
  Polynomial t = Polynomial::variable(fe.ext, p, fe.ext.name(0));
  std::vector<Polynomial> big;
  big.reserve(A.size() + B.size());
  for (const Polynomial& a : A) big.push_back(t * a.lifted(fe.ext, fe.up));
  for (const Polynomial& b : B) {
    Polynomial bl = b.lifted(fe.ext, fe.up);
    big.push_back(bl - t * bl);
  }
  IdealPresentation ext_ideal(fe.ext, p, std::move(big));
  GroebnerBasis G = buchberger(ext_ideal, MonomialOrder::block(1), opts);
  std::vector<Polynomial> out;
  for (const Polynomial& g : G.elements()) {
    bool free_of_t = std::all_of(g.terms().begin(), g.terms().end(),
                                 [](const Term& tm) { return tm.mon.exponent(0) == 0; });
    if (free_of_t) out.push_back(drop_front_var(g, vars));
  }
  return out;
}

void check_same_ring(const IdealPresentation& I, const IdealPresentation& J) {
  if (!(I.modulus() == J.modulus()) || !(I.vars() == J.vars())) {
    throw UsageError("ideals live in different rings");
  }
  if (!(I.quotient_relations() == J.quotient_relations())) {
    throw UsageError("ideals have different quotient relations");
  }
}

} // namespace

// ---------------------------------------------------------------------------

IdealPresentation::IdealPresentation(const VariableSet& vars, PrimeModulus p,
                                     std::vector<Polynomial> generators,
                                     std::vector<Polynomial> quotient_relations)
    : vars_(vars), mod_(p) {
  gens_ = drop_zeros(std::move(generators));
  quotient_ = drop_zeros(std::move(quotient_relations));
  auto check = [&](const Polynomial& f) {
    if (!(f.modulus() == mod_) || !(f.vars() == vars_)) {
      throw UsageError("ideal generators must share ambient and modulus");
    }
  };
  for (const Polynomial& f : gens_) check(f);
  for (const Polynomial& f : quotient_) check(f);
}

IdealPresentation IdealPresentation::with_generators(std::vector<Polynomial> gens) const {
  return IdealPresentation(vars_, mod_, std::move(gens), quotient_);
}

GroebnerBasis buchberger(const IdealPresentation& ideal, MonomialOrder order,
                         const GroebnerOptions& opts) {
  std::vector<Polynomial> inputs = ideal.generators();
  inputs.insert(inputs.end(), ideal.quotient_relations().begin(),
                ideal.quotient_relations().end());
  Engine eng(ideal.vars(), ideal.modulus(), order, opts);
  eng.run(inputs);
  return GroebnerBasis(ideal.vars(), ideal.modulus(), order,
                       eng.reduced_elements(), true);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (!(f.modulus() == G.modulus()) || !(f.vars() == G.vars())) {
    throw UsageError("polynomial and basis live in different rings");
  }
  DivisorSet D = divisor_set_of(G, G.order());
  Terms t = f.terms();
  sort_terms(t, G.order());
  Terms r = reduce_full(std::move(t), D, G.order(), G.modulus().value());
  return Polynomial::from_terms(f.vars(), f.modulus(), std::move(r));
}

bool ideal_membership(const Polynomial& f, const IdealPresentation& ideal,
                      MonomialOrder order, const GroebnerOptions& opts) {
  return normal_form(f, buchberger(ideal, order, opts)).is_zero();
}

IdealPresentation bracket_power(const IdealPresentation& ideal, std::int64_t q) {
  frobenius_exponent(q, ideal.modulus()); // validates q = p^e
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Polynomial& g : ideal.generators()) gens.push_back(g.frobenius_power(q));
  return ideal.with_generators(std::move(gens));
}

IdealPresentation ideal_intersection(const IdealPresentation& I,
                                     const IdealPresentation& J,
                                     const GroebnerOptions& opts) {
  check_same_ring(I, J);
  auto with_quot = [&](const IdealPresentation& K) {
    std::vector<Polynomial> v = K.generators();
    v.insert(v.end(), K.quotient_relations().begin(), K.quotient_relations().end());
    return v;
  };
  std::vector<Polynomial> gens =
      intersect_plain(I.vars(), I.modulus(), with_quot(I), with_quot(J), opts);
  return I.with_generators(std::move(gens));
}

IdealPresentation colon_ideal(const IdealPresentation& I, const IdealPresentation& J,
                              const GroebnerOptions& opts) {
  check_same_ring(I, J);
  if (J.generators().empty()) throw UsageError("colon by the zero ideal");
  std::vector<Polynomial> lifted = I.generators();
  lifted.insert(lifted.end(), I.quotient_relations().begin(),
                I.quotient_relations().end());
  std::optional<std::vector<Polynomial>> acc;
  for (const Polynomial& g : J.generators()) {
    std::vector<Polynomial> inter =
        intersect_plain(I.vars(), I.modulus(), lifted, {g}, opts);
    std::vector<Polynomial> colon_g;
    colon_g.reserve(inter.size());
    for (const Polynomial& h : inter) {
      auto quo = exact_divide(h, g);
      if (!quo) {
        throw std::logic_error("colon_ideal: post-intersection element not "
                               "divisible (internal bug)");
      }
      colon_g.push_back(std::move(*quo));
    }
    if (!acc) {
      acc = std::move(colon_g);
    } else {
      *acc = intersect_plain(I.vars(), I.modulus(), *acc, colon_g, opts);
    }
    if (acc->empty()) break;
  }
  return I.with_generators(std::move(*acc));
}

bool spolynomials_reduce_to_zero(const GroebnerBasis& G) {
  const auto& e = G.elements();
  DivisorSet D = divisor_set_of(G, G.order());
  const std::uint32_t p = G.modulus().value();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const Monomial l = D.elems[i].lm.lcm(D.elems[j].lm);
      Terms a = scale_terms(D.elems[i].t, *l.divided_by(D.elems[i].lm),
                            inv_mod(D.elems[i].t.front().coef, p), p);
      Terms b = scale_terms(D.elems[j].t, *l.divided_by(D.elems[j].lm),
                            inv_mod(D.elems[j].t.front().coef, p), p);
      Terms s = merge_ord(a, b, G.order(), p, true);
      if (!reduce_full(std::move(s), D, G.order(), p).empty()) return false;
    }
  }
  return true;
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw UsageError("division by zero polynomial");
  if (!(f.modulus() == g.modulus()) || !(f.vars() == g.vars())) {
    throw UsageError("polynomials with different rings in exact_divide");
  }
  const std::uint32_t p = f.modulus().value();
  if (g.nterms() == 1) {
    const Term& d = g.terms().front();
    std::uint32_t inv = inv_mod(d.coef, p);
    std::vector<Term> out;
    out.reserve(f.nterms());
    for (const Term& t : f.terms()) {
      auto m = t.mon.divided_by(d.mon);
      if (!m) return std::nullopt;
      out.push_back(Term{*m, mul_mod(t.coef, inv, p)});
    }
    return Polynomial::from_terms(f.vars(), f.modulus(), std::move(out));
  }
  const MonomialOrder ord = MonomialOrder::grevlex();
  Terms gt = g.terms();
  const Monomial glm = gt.front().mon;
  const std::uint32_t ginv = inv_mod(gt.front().coef, p);
  Geobucket W(ord, p);
  W.add(Terms(f.terms()));
  std::vector<Term> quot;
  while (auto lt = W.extract_leading()) {
    auto m = lt->mon.divided_by(glm);
    if (!m) return std::nullopt; // nonzero remainder
    std::uint32_t c = mul_mod(lt->coef, ginv, p);
    quot.push_back(Term{*m, c});
    W.add_scaled(std::span<const Term>(gt).subspan(1), *m, sub_mod(0, c, p));
  }
  return Polynomial::from_terms(f.vars(), f.modulus(), std::move(quot));
}

} // namespace charp
