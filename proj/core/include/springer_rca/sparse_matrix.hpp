#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "springer_rca/rational.hpp"

namespace springer_rca {

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational value;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Row-major sparse matrix over the rationals. Exact zeros are never stored and each row
/// keeps its entries sorted by column.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix identity(std::size_t size);
  /// Duplicate (row, col) pairs are summed; entries that cancel to zero are dropped.
  static SparseMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept;
  bool is_zero() const noexcept { return nonzeros() == 0; }

  Rational at(std::size_t row, std::size_t col) const;
  /// (row, col)-sorted copy of the stored entries.
  std::vector<MatrixEntry> entries() const;
  struct RowEntry {
    std::size_t col;
    Rational value;
  };
  std::span<const RowEntry> row(std::size_t r) const { return data_[r]; }

  std::vector<Rational> apply(std::span<const Rational> v) const;
  std::vector<std::vector<Rational>> to_dense() const;

  SparseMatrix scaled(const Rational& s) const;
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

  /// Stacks `bottom` under `top`; both must have the same column count.
  static SparseMatrix vstack(const SparseMatrix& top, const SparseMatrix& bottom);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<RowEntry>> data_;
};

}  // namespace springer_rca
