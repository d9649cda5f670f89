#include "clifford/nullspace.hpp"

#include <utility>

#include "clifford/error.hpp"

namespace clifford::linalg {

EchelonForm fraction_free_echelon(IntegerMatrix m, std::size_t columns) {
  for (const auto& row : m) {
    if (row.size() != columns) throw Error(Errc::domain, "ragged matrix");
  }
  EchelonForm out;
  out.columns = columns;
  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < columns && r < m.size(); ++col) {
    // smallest nonzero entry as pivot keeps intermediate sizes down
    std::size_t pivot = m.size();
    for (std::size_t i = r; i < m.size(); ++i) {
      if (sgn(m[i][col]) == 0) continue;
      if (pivot == m.size() || mpz_sizeinbase(m[i][col].get_mpz_t(), 2) < mpz_sizeinbase(m[pivot][col].get_mpz_t(), 2))
        pivot = i;
    }
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    const Integer& p = m[r][col];
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const Integer factor = m[i][col];
      for (std::size_t j = col + 1; j < columns; ++j) {
        Integer t = p * m[i][j];
        mpz_submul(t.get_mpz_t(), factor.get_mpz_t(), m[r][j].get_mpz_t());
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      m[i][col] = 0;
    }
    // rows above r keep their values; only columns left of `col` were zeroed for rows below
    previous = p;
    out.pivot_columns.push_back(col);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

IntegerVector primitive(const std::vector<Rational>& v) {
  Integer lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  IntegerVector out(v.size());
  Integer content = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (lcm / v[i].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  if (content > 1) {
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
  return out;
}

std::vector<IntegerVector> nullspace(const IntegerMatrix& matrix, std::size_t columns) {
  const EchelonForm ech = fraction_free_echelon(matrix, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;

  std::vector<IntegerVector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(columns);
    x[free] = 1;
    for (std::size_t t = ech.rank(); t-- > 0;) {
      const std::size_t pc = ech.pivot_columns[t];
      Rational acc;
      for (std::size_t j = pc + 1; j < columns; ++j) {
        if (sgn(x[j]) != 0) acc += Rational(ech.rows[t][j]) * x[j];
      }
      x[pc] = -acc / Rational(ech.rows[t][pc]);
    }
    basis.push_back(primitive(x));
  }
  return basis;
}

}  // namespace clifford::linalg
