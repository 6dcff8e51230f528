#include "springer_rca/linalg.hpp"

#include <algorithm>

#include "springer_rca/errors.hpp"

namespace springer_rca {

EchelonForm fraction_free_echelon(const SparseMatrix& m) {
  EchelonForm out;
  out.cols = m.cols();
  std::vector<std::vector<Integer>> a;
  a.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer scale = 1;
    for (const auto& e : m.row(r)) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.value.get_den_mpz_t());
    std::vector<Integer> row(m.cols(), Integer(0));
    bool nonzero = false;
    for (const auto& e : m.row(r)) {
      row[e.col] = e.value.get_num() * (scale / e.value.get_den());
      nonzero = true;
    }
    if (nonzero) a.push_back(std::move(row));
  }

  Integer previous = 1;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < a.size(); ++c) {
    std::size_t p = pivot_row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[pivot_row], a[p]);
    const Integer& pivot = a[pivot_row][c];
    for (std::size_t i = pivot_row + 1; i < a.size(); ++i) {
      const Integer factor = a[i][c];
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer v = pivot * a[i][j] - factor * a[pivot_row][j];
        if (!mpz_divisible_p(v.get_mpz_t(), previous.get_mpz_t())) {
          throw InvariantViolation("inexact division during fraction-free elimination");
        }
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    previous = pivot;
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  a.resize(pivot_row);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const SparseMatrix& m) { return fraction_free_echelon(m).pivot_columns.size(); }

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m) {
  const EchelonForm ech = fraction_free_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = ech.pivot_columns.size(); i-- > 0;) {
      const std::size_t pc = ech.pivot_columns[i];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < m.cols(); ++j) {
        if (ech.rows[i][j] != 0 && v[j] != 0) acc += Rational(ech.rows[i][j]) * v[j];
      }
      v[pc] = -acc / Rational(ech.rows[i][pc]);
    }
    const auto image = m.apply(v);
    if (std::any_of(image.begin(), image.end(), [](const Rational& x) { return x != 0; })) {
      throw InvariantViolation("kernel vector is not annihilated by the matrix");
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace springer_rca
