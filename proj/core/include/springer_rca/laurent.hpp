#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "springer_rca/rational.hpp"

namespace springer_rca {

/// Laurent polynomial in two commuting variables nu and t with integer coefficients.
/// Keys are (nu exponent, t exponent).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int nu_power, int t_power, Integer coefficient = 1);

  const std::map<std::pair<int, int>, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Substitutes t -> nu^nu_per_t * t.
  LaurentPoly rescale_t(int nu_per_t) const;
  /// Sets nu = 1.
  LaurentPoly at_nu_one() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  void add_term(std::pair<int, int> key, const Integer& c);
  std::map<std::pair<int, int>, Integer> terms_;
};

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

LaurentMatrix laurent_zero(std::size_t rows, std::size_t cols);
LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix scale(const LaurentMatrix& a, const LaurentPoly& s);
LaurentMatrix rescale_t(const LaurentMatrix& a, int nu_per_t);
LaurentMatrix at_nu_one(const LaurentMatrix& a);

}  // namespace springer_rca
