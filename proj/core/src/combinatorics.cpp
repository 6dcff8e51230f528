#include "springer_rca/combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "springer_rca/errors.hpp"

namespace springer_rca {

QPolynomial qbinomial(int a, int b) {
  if (b < 0 || a < 0 || b > a) {
    throw ArgumentError("qbinomial needs 0 <= b <= a, got a = " + std::to_string(a) +
                        ", b = " + std::to_string(b));
  }
  // q-Pascal: [i choose j] = [i-1 choose j-1] + q^j [i-1 choose j]
  std::vector<QPolynomial> row(static_cast<std::size_t>(b) + 1);
  row[0] = QPolynomial{1};
  for (int i = 1; i <= a; ++i) {
    for (int j = std::min(i, b); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] +
          QPolynomial::monomial(static_cast<std::size_t>(j)) * row[static_cast<std::size_t>(j)];
    }
  }
  return row[static_cast<std::size_t>(b)];
}

QPolynomial euler_series(const Params& p, int max_degree) {
  p.require_coprime();
  if (max_degree < 0) throw ArgumentError("max degree must be nonnegative");
  return divide_by_one_minus_q_power(qbinomial(p.n() - 1 + p.k(), p.n() - 1), p.n(), max_degree);
}

Integer compactified_jacobian_dim(const Params& p) {
  p.require_coprime();
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(p.n() + p.k() - 1),
               static_cast<unsigned long>(p.n() - 1));
  if (binom % p.n() != 0) {
    throw InvariantViolation("C(n+k-1, n-1) = " + binom.get_str() + " is not divisible by n = " +
                             std::to_string(p.n()));
  }
  return binom / p.n();
}

namespace {

QPolynomial projective_space(int dim) {
  std::vector<Integer> c(static_cast<std::size_t>(2 * dim) + 1, Integer(0));
  for (int i = 0; i <= dim; ++i) c[static_cast<std::size_t>(2 * i)] = 1;
  return QPolynomial(std::move(c));
}

}  // namespace

QPolynomial betti_2k(int k, int m) {
  if (k < 1) throw ArgumentError("betti_2k needs k >= 1");
  if (m > 0) throw ArgumentError("betti_2k needs m <= 0, got m = " + std::to_string(m));
  const int abs_m = -m;
  const int ell = k / 2;
  if (k % 2 == 1) return projective_space(std::min(abs_m / 2, ell));
  if (abs_m <= 2 * ell) return projective_space(abs_m / 2);
  const int copies = abs_m - 2 * ell + 1;
  std::vector<Integer> c(static_cast<std::size_t>(2 * ell) + 1, Integer(0));
  c[0] = 1;
  for (int i = 1; i <= ell; ++i) c[static_cast<std::size_t>(2 * i)] = copies;
  return QPolynomial(std::move(c));
}

Integer chain_cell_count(int copies, int dim) {
  if (copies < 1 || dim < 0) throw ArgumentError("chain needs copies >= 1 and dim >= 0");
  return Integer(copies) * (dim + 1) - (copies - 1);
}

std::vector<AffineCell> affine_cells_2k_odd(int k, int m) {
  if (k < 1 || k % 2 == 0) throw ArgumentError("affine_cells_2k_odd needs odd k >= 1");
  if (m > 0) throw ArgumentError("affine_cells_2k_odd needs m <= 0");
  const int total = -m;
  std::vector<AffineCell> cells;
  for (int a1 = 0; 2 * a1 <= total; ++a1) {
    const int a2 = total - a1;
    if (a2 - a1 > k) continue;
    cells.push_back({a1, a2, (a2 - a1) / 2});
  }
  return cells;
}

QPolynomial cell_poincare_polynomial(const std::vector<AffineCell>& cells) {
  QPolynomial out;
  for (const auto& c : cells) out += QPolynomial::monomial(static_cast<std::size_t>(2 * c.dimension));
  return out;
}

}  // namespace springer_rca
