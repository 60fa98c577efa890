#include <charp/binomdet.hpp>

namespace charp {

namespace {

void check_spec(const BinomialMatrixSpec& s) {
  if (s.n < 0 || s.a < 0 || s.k < 0) {
    throw DomainError("binomial matrix spec requires n, a, k >= 0");
  }
}

} // namespace

IntMatrix build_binomial_matrix(const BinomialMatrixSpec& s) {
  check_spec(s);
  const std::size_t m = std::size_t(s.k) + 1;
  IntMatrix out;
  out.resize(m);
  for (auto& row : out) row.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      out[r][c] = binomial_exact(s.n, s.a + s.k - std::int64_t(r) + std::int64_t(c));
    }
  }
  return out;
}

BigInt det_exact(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw UsageError("determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss: divisions are exact
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

BigRat det_closed_form(const BinomialMatrixSpec& s) {
  check_spec(s);
  BigRat r = 1;
  for (std::int64_t i = 0; i <= s.k; ++i) {
    r *= BigRat(binomial_exact(s.n + i, s.a + s.k));
    r /= BigRat(binomial_exact(s.a + s.k + i, s.a + s.k));
  }
  return r;
}

DetComparison check_identity(const BinomialMatrixSpec& s,
                             std::optional<PrimeModulus> p) {
  DetComparison out;
  out.exact_det = det_exact(build_binomial_matrix(s));
  out.closed_form = det_closed_form(s);
  out.equal = boost::multiprecision::denominator(out.closed_form) == 1 &&
              boost::multiprecision::numerator(out.closed_form) == out.exact_det;
  if (p) {
    BigInt r = out.exact_det % p->value();
    if (r < 0) r += p->value();
    out.residue = FieldElement(std::int64_t(r), *p);
    out.invertible_mod_p = !out.residue->is_zero();
  }
  return out;
}

} // namespace charp
