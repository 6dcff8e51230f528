#pragma once

#include <cstddef>
#include <vector>

#include "springer_rca/report.hpp"

namespace springer_rca {

class Params;

/// Gamma = <n, k> = {a n + b k : a, b >= 0} for coprime generators.
class NumericalSemigroup {
 public:
  /// Throws ArgumentError for nonpositive generators, UnsupportedError when gcd(n, k) != 1.
  NumericalSemigroup(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  /// Frobenius number nk - n - k; every larger integer lies in Gamma.
  int frobenius() const noexcept { return n_ * k_ - n_ - k_; }
  bool contains(long s) const noexcept;

 private:
  int n_;
  int k_;
  std::vector<bool> table_;  ///< membership on [0, frobenius + 1]
};

/// Delta = Gamma minus a finite gap set G, with Delta + Gamma contained in Delta.
class SemigroupIdeal {
 public:
  SemigroupIdeal(const NumericalSemigroup& gamma, std::vector<int> gaps);

  const std::vector<int>& gaps() const noexcept { return gaps_; }
  std::size_t colength() const noexcept { return gaps_.size(); }
  bool contains(long s) const;
  /// Delta + g contained in Delta for g in {n, k}, checked on every element below the
  /// largest gap plus the generators (beyond that membership is forced).
  bool is_stable() const;

 private:
  const NumericalSemigroup* gamma_;
  std::vector<int> gaps_;  ///< sorted
};

struct OracleBudget {
  int max_colength = 64;
  std::size_t max_nodes = 50'000'000;
};

/// Every ideal of colength m, each gap set listed in increasing order. Gap elements lie in
/// the window [0, F + m n]. Throws BudgetError when the search leaves the budget.
std::vector<SemigroupIdeal> enumerate_ideals(const NumericalSemigroup& gamma, int colength,
                                             const OracleBudget& budget = {});

/// Number of colength-m ideals of <n, k>, counted without materializing them.
std::size_t count_ideals(int n, int k, int colength, const OracleBudget& budget = {});

/// Passes iff count_ideals(n, k, d) equals the number of admissible cocharacters of degree d
/// for every d <= max_degree.
VerificationReport compare_with_fixed_points(const Params& p, int max_degree, const OracleBudget& budget = {});

}  // namespace springer_rca
