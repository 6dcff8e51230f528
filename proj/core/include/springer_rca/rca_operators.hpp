#pragma once

#include <memory>
#include <span>
#include <vector>

#include "springer_rca/core_model.hpp"
#include "springer_rca/dress_polynomial.hpp"
#include "springer_rca/graded_operator.hpp"

namespace springer_rca {

/// Rising/falling bracket with hbar = 1:
///   r > 0: x (x+1) ... (x+r-1);  r = 0: 1;  r < 0: (x-1)(x-2) ... (x-|r|).
Rational bracket_pow(const Rational& x, int r);

/// Abelianized monopole [t^lambda] acting on |A>: the coefficient of |A + lambda>, taken
/// verbatim from the closed torus formula.
Rational abelian_monopole_coeff(const Cocharacter& a, std::span<const int> lambda, const Params& p);

/// Excess intersection factor e(E_{A,nu}) evaluated at phi(A): a bracket over every weight
/// of Ad + V pairing negatively with nu. Ad weights carry the flavor m, V weights do not.
Rational excess_factor(const Cocharacter& a, std::span<const int> nu, const Params& p);

/// Tangent Euler class prod_{nu_a > nu_b} prod_{g=1}^{nu_a - nu_b} (phi_b - phi_a - g)
/// evaluated at the weights of `point`.
Rational tangent_euler(const Cocharacter& point, std::span<const int> nu, const Params& p);

/// Numerator and denominator of the minuscule monopole coefficient for |A> -> |A + orbit_element>,
/// both evaluated at the target weights phi(A + orbit_element).
struct MonopoleTerm {
  Cocharacter target;
  Rational numerator;
  Rational denominator;
};
MonopoleTerm monopole_term(const Cocharacter& a, std::span<const int> orbit_element, const Params& p);

/// +-lambda_r = +-(1, ..., 1, 0, ..., 0) with r ones.
class MinusculeCoweight {
 public:
  MinusculeCoweight(int sign, int r, int n);

  int sign() const noexcept { return sign_; }
  int r() const noexcept { return r_; }
  int n() const noexcept { return n_; }
  std::vector<int> expansion() const;
  /// Distinct permutations of the expansion, lexicographically sorted.
  std::vector<std::vector<int>> weyl_orbit() const;

 private:
  int sign_;
  int r_;
  int n_;
};

/// Permutation sigma with (w.f)(phi) = f(phi_{sigma(0)}, ...) for the Weyl element carrying
/// the dominant expansion to `orbit_element`: the first r slots go to the nonzero positions.
std::vector<std::size_t> orbit_permutation(std::span<const int> orbit_element);

/// Dressed minuscule monopole [R_{<= lambda}][f] in the fixed-point basis. Every entry is
/// N(lambda', A) (w.f)(phi(A + lambda')) / D(lambda', A) with all weights taken at the
/// target. Orbit terms landing on inadmissible targets must have vanishing numerator and
/// are dropped; a nonzero one, or a vanishing denominator, throws InvariantViolation.
/// f must be invariant under S_r x S_{n-r} (ArgumentError otherwise).
GradedOperator minuscule_monopole(const MinusculeCoweight& lambda, const DressPolynomial& f,
                                  const std::shared_ptr<const GradedBasis>& basis, unsigned threads = 1);

/// X = [R_{<= lambda_1}], raising degree by 1.
GradedOperator operator_X(const std::shared_ptr<const GradedBasis>& basis, unsigned threads = 1);
/// Y = [R_{<= -lambda_1}], lowering degree by 1.
GradedOperator operator_Y(const std::shared_ptr<const GradedBasis>& basis, unsigned threads = 1);
/// E_r[f] = [R_{<= lambda_r}][f].
GradedOperator operator_E(int r, const DressPolynomial& f, const std::shared_ptr<const GradedBasis>& basis,
                          unsigned threads = 1);
/// F_r[f] = [R_{<= -lambda_r}][f~] with f~(phi) = f(phi - hbar).
GradedOperator operator_F(int r, const DressPolynomial& f, const std::shared_ptr<const GradedBasis>& basis,
                          unsigned threads = 1);
/// H = hbar - phi_1 - phi_2 (n = 2 only; UnsupportedError otherwise).
GradedOperator operator_H(const std::shared_ptr<const GradedBasis>& basis);

/// The n = 2 sl2 triple: E = E_2[1], F = -F_2[1], H.
struct Sl2Triple {
  GradedOperator e;
  GradedOperator f;
  GradedOperator h;
};
Sl2Triple sl2_triple(const std::shared_ptr<const GradedBasis>& basis, unsigned threads = 1);

}  // namespace springer_rca
