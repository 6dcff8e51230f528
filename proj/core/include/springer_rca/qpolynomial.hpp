#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "springer_rca/rational.hpp"

namespace springer_rca {

/// Polynomial (or truncated power series) in q with exact integer coefficients.
/// Coefficient i multiplies q^i; trailing zeros are always trimmed.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Integer> coefficients);
  QPolynomial(std::initializer_list<long> coefficients);

  static QPolynomial monomial(std::size_t power, Integer coefficient = 1);

  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  /// Zero past the stored range.
  Integer coefficient(std::size_t power) const;
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Value at q = 1.
  Integer sum() const;
  bool is_palindromic() const;
  bool has_nonnegative_coefficients() const;

  /// Drops every power above max_power.
  QPolynomial truncated(int max_power) const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// e.g. "1 + q^2 + 3q^4".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Truncated product of `series` with 1/(1 - q^period), keeping powers <= max_power.
QPolynomial divide_by_one_minus_q_power(const QPolynomial& series, int period, int max_power);

}  // namespace springer_rca
