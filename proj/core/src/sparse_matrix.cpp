#include "springer_rca/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "springer_rca/errors.hpp"

namespace springer_rca {

namespace {

std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

}  // namespace

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix SparseMatrix::identity(std::size_t size) {
  SparseMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m.data_[i].push_back({i, Rational(1)});
  return m;
}

SparseMatrix SparseMatrix::from_entries(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries) {
  SparseMatrix m(rows, cols);
  std::vector<std::map<std::size_t, Rational>> acc(rows);
  for (auto& e : entries) {
    if (e.row >= rows || e.col >= cols) {
      throw DimensionError("entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                           ") outside " + shape(rows, cols) + " matrix");
    }
    acc[e.row][e.col] += e.value;
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (auto& [c, v] : acc[r]) {
      if (v != 0) m.data_[r].push_back({c, std::move(v)});
    }
  }
  return m;
}

std::size_t SparseMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Rational SparseMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw DimensionError("index outside " + shape(rows_, cols_) + " matrix");
  const auto& r = data_[row];
  const auto it = std::lower_bound(r.begin(), r.end(), col, [](const RowEntry& e, std::size_t c) { return e.col < c; });
  if (it != r.end() && it->col == col) return it->value;
  return Rational(0);
}

std::vector<MatrixEntry> SparseMatrix::entries() const {
  std::vector<MatrixEntry> out;
  out.reserve(nonzeros());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) out.push_back({r, e.col, e.value});
  }
  return out;
}

std::vector<Rational> SparseMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) {
    throw DimensionError("vector of length " + std::to_string(v.size()) + " applied to " +
                         shape(rows_, cols_) + " matrix");
  }
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) out[r] += e.value * v[e.col];
  }
  return out;
}

std::vector<std::vector<Rational>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_, Rational(0)));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) out[r][e.col] = e.value;
  }
  return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& s) const {
  if (s == 0) return SparseMatrix(rows_, cols_);
  SparseMatrix m = *this;
  for (auto& r : m.data_) {
    for (auto& e : r) e.value *= s;
  }
  return m;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw DimensionError("cannot multiply " + shape(a.rows_, a.cols_) + " by " + shape(b.rows_, b.cols_));
  }
  SparseMatrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::map<std::size_t, Rational> acc;
    for (const auto& ea : a.data_[r]) {
      for (const auto& eb : b.data_[ea.col]) acc[eb.col] += ea.value * eb.value;
    }
    for (auto& [c, v] : acc) {
      if (v != 0) m.data_[r].push_back({c, std::move(v)});
    }
  }
  return m;
}

namespace {

SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, int sign) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("cannot add " + shape(a.rows(), a.cols()) + " and " + shape(b.rows(), b.cols()));
  }
  std::vector<MatrixEntry> all = a.entries();
  for (auto& e : b.entries()) {
    if (sign < 0) e.value = -e.value;
    all.push_back(std::move(e));
  }
  return SparseMatrix::from_entries(a.rows(), a.cols(), std::move(all));
}

}  // namespace

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, 1); }
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, -1); }

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    const auto& x = a.data_[r];
    const auto& y = b.data_[r];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].col != y[i].col || x[i].value != y[i].value) return false;
    }
  }
  return true;
}

SparseMatrix SparseMatrix::vstack(const SparseMatrix& top, const SparseMatrix& bottom) {
  if (top.cols_ != bottom.cols_) {
    throw DimensionError("cannot stack " + shape(top.rows_, top.cols_) + " over " +
                         shape(bottom.rows_, bottom.cols_));
  }
  SparseMatrix m(top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(), m.data_.begin() + static_cast<long>(top.rows_));
  return m;
}

}  // namespace springer_rca
