#pragma once

#include <cstddef>
#include <vector>

#include "springer_rca/sparse_matrix.hpp"

namespace springer_rca {

/// Row echelon data from fraction-free (Bareiss) elimination over the integers.
struct EchelonForm {
  std::vector<std::vector<Integer>> rows;  ///< nonzero rows only
  std::vector<std::size_t> pivot_columns;
  std::size_t cols = 0;
};

/// Clears denominators row by row, then eliminates with exact integer division only.
EchelonForm fraction_free_echelon(const SparseMatrix& m);

std::size_t rank(const SparseMatrix& m);

/// Basis of the right kernel {v : m v = 0}. One vector per free column, carrying 1 at
/// that column and 0 at the other free columns, ordered by free column. Each vector is
/// checked against m before being returned (InvariantViolation otherwise).
std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m);

}  // namespace springer_rca
