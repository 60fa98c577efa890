#include <charp/monomial.hpp>

#include <limits>

namespace charp {

Monomial Monomial::one(std::size_t nvars) {
  Monomial m;
  m.n_ = std::uint32_t(nvars);
  return m;
}

Monomial Monomial::from_exponents(std::span<const std::uint32_t> e) {
  if (e.size() > kMaxVars) throw UsageError("too many variables in monomial");
  Monomial m;
  m.n_ = std::uint32_t(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    m.e_[i] = e[i];
    m.deg_ += e[i];
  }
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t exp) {
  Monomial m = one(nvars);
  m.e_[index] = exp;
  m.deg_ = exp;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.n_ = n_;
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint64_t s = std::uint64_t(e_[i]) + o.e_[i];
    if (s > std::numeric_limits<std::uint32_t>::max()) {
      throw UsageError("monomial exponent overflow");
    }
    r.e_[i] = std::uint32_t(s);
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

Monomial Monomial::scaled(std::uint64_t factor) const {
  Monomial r;
  r.n_ = n_;
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint64_t s = std::uint64_t(e_[i]) * factor;
    if (s > std::numeric_limits<std::uint32_t>::max()) {
      throw UsageError("monomial exponent overflow");
    }
    r.e_[i] = std::uint32_t(s);
  }
  r.deg_ = deg_ * factor;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (e_[i] > o.e_[i]) return false;
  }
  return true;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
  if (!o.divides(*this)) return std::nullopt;
  Monomial r;
  r.n_ = n_;
  for (std::uint32_t i = 0; i < n_; ++i) r.e_[i] = e_[i] - o.e_[i];
  r.deg_ = deg_ - o.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  r.n_ = n_;
  for (std::uint32_t i = 0; i < n_; ++i) {
    r.e_[i] = e_[i] > o.e_[i] ? e_[i] : o.e_[i];
    r.deg_ += r.e_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (e_[i] != 0 && o.e_[i] != 0) return false;
  }
  return true;
}

bool Monomial::operator==(const Monomial& o) const {
  if (n_ != o.n_ || deg_ != o.deg_) return false;
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (e_[i] != o.e_[i]) return false;
  }
  return true;
}

namespace {

// grevlex on the index range [lo, hi): higher total degree wins, ties broken
// by the last differing exponent, where the smaller exponent wins.
int grevlex_range(const Monomial& a, const Monomial& b, std::uint32_t lo, std::uint32_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::uint32_t i = lo; i < hi; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::uint32_t i = hi; i-- > lo;) {
    std::uint32_t xa = a.exponent(i), xb = b.exponent(i);
    if (xa != xb) return xa > xb ? -1 : 1;
  }
  return 0;
}

int lex_full(const Monomial& a, const Monomial& b) {
  for (std::uint32_t i = 0; i < a.nvars(); ++i) {
    std::uint32_t xa = a.exponent(i), xb = b.exponent(i);
    if (xa != xb) return xa < xb ? -1 : 1;
  }
  return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const auto n = std::uint32_t(a.nvars());
  switch (kind_) {
    case Kind::grevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::uint32_t i = n; i-- > 0;) {
        std::uint32_t xa = a.exponent(i), xb = b.exponent(i);
        if (xa != xb) return xa > xb ? -1 : 1;
      }
      return 0;
    }
    case Kind::lex:
      return lex_full(a, b);
    case Kind::block: {
      int c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, n);
    }
  }
  return 0;
}

} // namespace charp
