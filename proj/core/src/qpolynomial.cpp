#include "springer_rca/qpolynomial.hpp"

#include <algorithm>
#include <sstream>

#include "springer_rca/errors.hpp"

namespace springer_rca {

QPolynomial::QPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

QPolynomial::QPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

QPolynomial QPolynomial::monomial(std::size_t power, Integer coefficient) {
  std::vector<Integer> c(power + 1, Integer(0));
  c[power] = std::move(coefficient);
  return QPolynomial(std::move(c));
}

Integer QPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Integer(0);
}

Integer QPolynomial::sum() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool QPolynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

bool QPolynomial::has_nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

QPolynomial QPolynomial::truncated(int max_power) const {
  if (max_power < 0) return {};
  const auto keep = std::min(coeffs_.size(), static_cast<std::size_t>(max_power) + 1);
  return QPolynomial(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(keep)));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(std::move(c));
}

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << 'q';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial divide_by_one_minus_q_power(const QPolynomial& series, int period, int max_power) {
  if (period < 1) throw ArgumentError("period must be positive");
  if (max_power < 0) return {};
  std::vector<Integer> out(static_cast<std::size_t>(max_power) + 1, Integer(0));
  for (int i = 0; i <= max_power; ++i) {
    Integer c = series.coefficient(static_cast<std::size_t>(i));
    if (i >= period) c += out[static_cast<std::size_t>(i - period)];
    out[static_cast<std::size_t>(i)] = c;
  }
  return QPolynomial(std::move(out));
}

}  // namespace springer_rca
