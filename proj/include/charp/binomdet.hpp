#ifndef CHARP_BINOMDET_HPP
#define CHARP_BINOMDET_HPP

#include <optional>
#include <vector>

#include <charp/arith.hpp>

namespace charp {

/// The (k+1) x (k+1) matrix with entry C(n, a+k-r+c) at row r, column c.
struct BinomialMatrixSpec {
  std::int64_t n = 0; // >= 0
  std::int64_t a = 0; // >= 0
  std::int64_t k = 0; // >= 0
};

using IntMatrix = std::vector<std::vector<BigInt>>;

struct DetComparison {
  BigInt exact_det;
  BigRat closed_form;
  bool equal = false;
  std::optional<FieldElement> residue;    // det mod p, when p supplied
  std::optional<bool> invertible_mod_p;
};

IntMatrix build_binomial_matrix(const BinomialMatrixSpec& s);

/// Exact determinant via fraction-free (Bareiss) elimination.
BigInt det_exact(const IntMatrix& m);

/// prod_{i=0..k} C(n+i, a+k) / prod_{i=0..k} C(a+k+i, a+k), exactly.
BigRat det_closed_form(const BinomialMatrixSpec& s);

DetComparison check_identity(const BinomialMatrixSpec& s,
                             std::optional<PrimeModulus> p = std::nullopt);

} // namespace charp

#endif // CHARP_BINOMDET_HPP
