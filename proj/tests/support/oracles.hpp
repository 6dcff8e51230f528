#pragma once

#include <cstddef>
#include <vector>

#include "springer_rca/rational.hpp"

// Brute-force reference implementations. They share no code with the library beyond
// the GMP number types.
namespace oracle {

using springer_rca::Integer;
using springer_rca::Rational;

/// All length-n vectors with entries in [0, d] summing to d that satisfy the three
/// admissibility inequalities, in lexicographic order.
std::vector<std::vector<int>> fixed_points(int n, int k, int d);

/// Coefficients of [a choose b]_q by counting b-subsets of {0, ..., a-1} by their sum.
std::vector<Integer> qbinomial(int a, int b);

/// Coefficients 0..max_degree of [n-1+k choose n-1]_q / (1 - q^n).
std::vector<Integer> euler_series(int n, int k, int max_degree);

/// Number of colength-m ideals of <n, k>, by testing every m-subset of the Gamma elements
/// below F + m n + 1 for stability.
std::size_t ideal_count(int n, int k, int m);

/// Coefficient of |A + nu> in [R_{<= lambda}]|A> for an orbit element nu, written out from
/// the target-evaluated product formula.
Rational monopole_coefficient(const std::vector<int>& a, const std::vector<int>& nu, int n, int k);

/// Rank of a dense rational matrix by plain Gauss-Jordan elimination.
std::size_t dense_rank(std::vector<std::vector<Rational>> m);

}  // namespace oracle
