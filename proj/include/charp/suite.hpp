#ifndef CHARP_SUITE_HPP
#define CHARP_SUITE_HPP

#include <string>

#include <json.hpp>

#include <charp/binomdet.hpp>
#include <charp/frobenius.hpp>
#include <charp/separable.hpp>

namespace charp {

using Json = nlohmann::ordered_json;

/// Machine-readable record of one check at one parameter point. `pass` is
/// always the conjunction of every boolean appearing in `details`.
struct SuiteReport {
  std::string check;
  Json params;
  bool pass = false;
  Json details;
  double elapsed_ms = 0.0;
};

Json report_to_json(const SuiteReport& r);

/// Recursive AND over every boolean in a details tree (true when none).
bool details_conjunction(const Json& details);

/// K[x,y,z]/(x^3 + y^3 + z^3) over F_p, p != 3.
struct CubicRing {
  explicit CubicRing(PrimeModulus p);

  PrimeModulus p;
  VariableSet vars; // x, y, z
  Polynomial relation;

  Polynomial mono(std::uint32_t ex, std::uint32_t ey, std::uint32_t ez) const;
  IdealPresentation ideal(std::vector<Polynomial> gens) const;
};

/// All monomials of degree 3k in A, B lie in (A^{2k+1}, B^{2k+1}, (A+B)^{2k})
/// over F_p[A, B], p = 3k + 1; cross-checked against invertibility of the
/// (2k, 0, k) binomial matrix.
SuiteReport check_lemma_general(PrimeModulus p, const GroebnerOptions& opts = {});

/// x^{p-1} y^{2p-2} lies in (x^{2p}, y^{2p}, z^{2p}) : (x^2, y^2, z^2) in the
/// cubic ring, p = 3k + 1, plus the two degree-reduced containments behind it.
SuiteReport check_lemma_colon(PrimeModulus p, const GroebnerOptions& opts = {});

/// xyz lies in (x^2, y^2, z^2)^+ in the cubic ring for p = 3k + 1: the
/// equational criterion instance, the sufficient monomial membership, and
/// the (2k+1, 2, k-2) determinant residue.
SuiteReport check_theorem_plus(PrimeModulus p, const GroebnerOptions& opts = {});

/// xyz lies in (x^2, y^2, z^2)^F in the cubic ring for p = 2 mod 3; bounded
/// search for the witness exponent plus an independent certificate replay.
SuiteReport check_frobenius_case(PrimeModulus p, std::int64_t e_max,
                                 const GroebnerOptions& opts = {});

/// Over F_2: z^4 = z x^3 + z y^3 in the cubic ring and z^2 in (x, y)^F with
/// witness exponent 1.
SuiteReport check_cubic_char2(const GroebnerOptions& opts = {});

/// The symplectic-invariants hypersurface embeds in a polynomial ring.
SuiteReport check_separable_example(std::int64_t q);

/// Exact determinant of the (k+1) x (k+1) binomial matrix versus the closed
/// product form, at one spec point or swept.
SuiteReport check_lemma_det(const BinomialMatrixSpec& s,
                            std::optional<PrimeModulus> p = std::nullopt);
SuiteReport check_lemma_det_sweep(std::int64_t amax, std::int64_t kmax,
                                  std::int64_t nmax,
                                  std::optional<PrimeModulus> p = std::nullopt);

} // namespace charp

#endif // CHARP_SUITE_HPP
