#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "springer_rca/rational.hpp"

namespace springer_rca {

/// Polynomial with rational coefficients in phi_1..phi_n, m and hbar, used to dress
/// monopole operators. Monomials are exponent vectors laid out as (phi_1..phi_n, m, hbar).
class DressPolynomial {
 public:
  using Exponents = std::vector<int>;

  explicit DressPolynomial(int n);

  static DressPolynomial constant(int n, const Rational& c);
  static DressPolynomial one(int n) { return constant(n, Rational(1)); }
  /// phi_{a+1} for zero-based a.
  static DressPolynomial phi(int n, int a);
  static DressPolynomial m_symbol(int n);
  static DressPolynomial hbar_symbol(int n);
  /// e_j(phi_1, ..., phi_n); e_0 = 1.
  static DressPolynomial elementary_symmetric(int n, int j);

  int n() const noexcept { return n_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree in the phi variables.
  int phi_degree() const;

  Rational evaluate(std::span<const Rational> phis, const Rational& m, const Rational& hbar) const;

  /// (w.f)(phi) = f(phi_{sigma[0]}, ..., phi_{sigma[n-1]}) for a permutation sigma of 0..n-1.
  DressPolynomial permuted(std::span<const std::size_t> sigma) const;
  /// f(phi - c*hbar), substituting every phi_a.
  DressPolynomial shifted_by_hbar(const Rational& c) const;

  /// Invariance under the Young subgroup S_r x S_{n-r} permuting the first r and the
  /// last n-r phi variables separately.
  bool is_invariant_under_young(int r) const;

  DressPolynomial& operator+=(const DressPolynomial& other);
  DressPolynomial& operator*=(const Rational& s);
  friend DressPolynomial operator+(DressPolynomial a, const DressPolynomial& b) { return a += b; }
  friend DressPolynomial operator-(DressPolynomial a, const DressPolynomial& b);
  friend DressPolynomial operator*(const DressPolynomial& a, const DressPolynomial& b);
  friend DressPolynomial operator*(DressPolynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const DressPolynomial&, const DressPolynomial&) = default;

  std::string to_string() const;

 private:
  void require_same_arity(const DressPolynomial& other) const;
  void add_term(const Exponents& e, const Rational& c);

  int n_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace springer_rca
