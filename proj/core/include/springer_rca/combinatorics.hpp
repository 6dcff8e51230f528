#pragma once

#include <vector>

#include "springer_rca/core_model.hpp"
#include "springer_rca/qpolynomial.hpp"

namespace springer_rca {

/// Gaussian binomial [a choose b]_q. Throws ArgumentError unless 0 <= b <= a.
QPolynomial qbinomial(int a, int b);

/// Coefficients through q^max_degree of (1/(1 - q^n)) [n-1+k choose n-1]_q, the graded
/// Euler characteristic of the Hilbert schemes of x^n = t^k. Requires gcd(n, k) = 1.
QPolynomial euler_series(const Params& p, int max_degree);

/// (1/n) C(n+k-1, n-1): total Betti number of the compactified Jacobian.
Integer compactified_jacobian_dim(const Params& p);

/// Poincare polynomial (q^2 per complex dimension) of the degree-m component of the
/// Hilbert scheme union for x^2 = t^k, m <= 0.
///   odd k = 2l+1: P^{min(floor(|m|/2), l)}
///   even k = 2l:  P^{floor(|m|/2)} for |m| <= 2l, otherwise a chain of c = |m|-2l+1 copies
///                 of P^l with b_0 = 1 and b_{2i} = c.
QPolynomial betti_2k(int k, int m);

/// Cells of a chain of `copies` projective spaces P^dim glued at copies-1 transverse points.
Integer chain_cell_count(int copies, int dim);

/// Affine cell of the odd-k parameterization: the stratum with diagonal (t^{-a1}, t^{-a2})
/// is an affine space of dimension floor((a2 - a1)/2).
struct AffineCell {
  int a1 = 0;
  int a2 = 0;
  int dimension = 0;
};

/// Cells of the degree-m component for x^2 = t^k with k odd, one per admissible (a1, a2)
/// with a1 + a2 = |m|.
std::vector<AffineCell> affine_cells_2k_odd(int k, int m);

/// Sum of q^{2 dim} over the cells.
QPolynomial cell_poincare_polynomial(const std::vector<AffineCell>& cells);

}  // namespace springer_rca
