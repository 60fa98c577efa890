#include "oracles.hpp"

#include <map>

namespace charp::oracles {

namespace {

// All exponent vectors in n variables with total degree <= d.
void enumerate_monomials(std::size_t n, std::uint32_t d,
                         std::vector<std::uint32_t>& cur,
                         std::vector<std::vector<std::uint32_t>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t e = 0; e <= d; ++e) {
    cur.push_back(e);
    enumerate_monomials(n, d - e, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::uint32_t>> monomials_up_to(std::size_t n, std::uint32_t d) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  enumerate_monomials(n, d, cur, out);
  return out;
}

// Row-reduce the augmented system A x = b over F_p; true iff consistent.
bool solvable(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p) {
  if (rows.empty()) return true;
  const std::size_t ncols = rows[0].size(); // last column: right-hand side
  std::size_t rank = 0;
  for (std::size_t col = 0; col + 1 < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    std::uint32_t inv = inv_mod(rows[rank][col], p);
    for (std::size_t j = col; j < ncols; ++j) {
      rows[rank][j] = mul_mod(rows[rank][j], inv, p);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      std::uint32_t f = rows[i][col];
      for (std::size_t j = col; j < ncols; ++j) {
        rows[i][j] = sub_mod(rows[i][j], mul_mod(f, rows[rank][j], p), p);
      }
    }
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i) {
    bool all_zero = true;
    for (std::size_t j = 0; j + 1 < rows[i].size(); ++j) {
      all_zero = all_zero && rows[i][j] == 0;
    }
    if (all_zero && rows[i].back() != 0) return false;
  }
  return true;
}

} // namespace

bool membership_by_linear_solve(const Polynomial& f,
                                const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  if (gens.empty()) return false;
  const std::uint32_t p = f.modulus().value();
  const std::size_t n = f.vars().size();

  std::uint32_t max_gen_deg = 0;
  for (const Polynomial& g : gens) {
    max_gen_deg = std::max<std::uint32_t>(max_gen_deg, std::uint32_t(g.degree()));
  }
  const std::uint32_t cof_deg = std::uint32_t(f.degree()) + max_gen_deg;
  const std::uint32_t eq_deg = cof_deg + max_gen_deg;

  auto cof_monos = monomials_up_to(n, cof_deg);
  auto eq_monos = monomials_up_to(n, eq_deg);
  std::map<std::vector<std::uint32_t>, std::size_t> row_of;
  for (std::size_t i = 0; i < eq_monos.size(); ++i) row_of[eq_monos[i]] = i;

  const std::size_t ncols = gens.size() * cof_monos.size() + 1;
  std::vector<std::vector<std::uint32_t>> rows(
      eq_monos.size(), std::vector<std::uint32_t>(ncols, 0));

  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t mi = 0; mi < cof_monos.size(); ++mi) {
      const std::size_t col = j * cof_monos.size() + mi;
      for (const Term& t : gens[j].terms()) {
        std::vector<std::uint32_t> prod(n);
        for (std::size_t v = 0; v < n; ++v) {
          prod[v] = cof_monos[mi][v] + t.mon.exponent(v);
        }
        auto it = row_of.find(prod);
        if (it == row_of.end()) continue; // cannot happen within eq_deg
        rows[it->second][col] = add_mod(rows[it->second][col], t.coef, p);
      }
    }
  }
  for (const Term& t : f.terms()) {
    std::vector<std::uint32_t> e(n);
    for (std::size_t v = 0; v < n; ++v) e[v] = t.mon.exponent(v);
    rows[row_of.at(e)].back() = t.coef;
  }
  return solvable(rows, p);
}

BigInt det_by_cofactor_expansion(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      row.reserve(n - 1);
      for (std::size_t cc = 0; cc < n; ++cc) {
        if (cc != c) row.push_back(m[r][cc]);
      }
      minor.push_back(std::move(row));
    }
    BigInt term = m[0][c] * det_by_cofactor_expansion(minor);
    if (c % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

} // namespace charp::oracles
