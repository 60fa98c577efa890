#ifndef CHARP_MONOMIAL_HPP
#define CHARP_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include <charp/variables.hpp>

namespace charp {

/// Exponent vector with cached total degree. Exponent arithmetic is
/// overflow-checked (32-bit per variable).
class Monomial {
 public:
  static Monomial one(std::size_t nvars);
  static Monomial from_exponents(std::span<const std::uint32_t> e);
  /// Single variable to a power.
  static Monomial variable(std::size_t nvars, std::size_t index,
                           std::uint32_t exp = 1);

  std::size_t nvars() const { return n_; }
  std::uint32_t exponent(std::size_t i) const { return e_[i]; }
  std::uint64_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const;
  /// Raise every exponent by an integer factor (the Frobenius action).
  Monomial scaled(std::uint64_t factor) const;
  bool divides(const Monomial& o) const;
  std::optional<Monomial> divided_by(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const;

 private:
  std::array<std::uint32_t, kMaxVars> e_{};
  std::uint64_t deg_ = 0;
  std::uint32_t n_ = 0;
};

/// Total order on monomials compatible with multiplication and with 1 as
/// least element: grevlex, lex, or a degree-compatible block order that
/// eliminates the first k variables.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder block(std::uint32_t eliminated) {
    return MonomialOrder(Kind::block, eliminated);
  }

  Kind kind() const { return kind_; }
  std::uint32_t eliminated() const { return block_; }

  /// -1 if a < b, 0 if equal, +1 if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind k, std::uint32_t b) : kind_(k), block_(b) {}
  Kind kind_;
  std::uint32_t block_;
};

} // namespace charp

#endif // CHARP_MONOMIAL_HPP
